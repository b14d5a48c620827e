#include <chrono>
#include <functional>

#include "doctest.h"
#include "pointbound/nqtable.hpp"

using namespace pointbound;

namespace {

const std::string kData = std::string(POINTBOUND_TEST_DATA_DIR) + "/known_values.csv";

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::kInvalidArgument;
}

}  // namespace

TEST_CASE("load_known") {
  auto table = load_known(kData);
  CHECK(table.size() == 11);
  CHECK(table.at({2, 4, 4}).value == 8);
  CHECK(table.at({2, 3, 3}).value == 7);
  CHECK(table.at({2, 0, 1}).extends_pi);
  CHECK(table.at({2, 3, 5}).source.find(',') == std::string::npos);

  CHECK(code_of([] { parse_known("2,0,0,9,false,bogus"); }) == Errc::kWeilViolation);
  CHECK(code_of([] { parse_known("2,4,4,8,false,a\n2,4,4,8,false,b"); }) == Errc::kDuplicateKey);
  CHECK(code_of([] { parse_known("2,4,4,eight,false,a"); }) == Errc::kParseError);
  CHECK(code_of([] { parse_known("6,1,1,3,false,a"); }) == Errc::kParseError);
  CHECK(code_of([] { parse_known("2,4,4"); }) == Errc::kParseError);
  CHECK(code_of([] { load_known("/nonexistent/known.csv"); }) == Errc::kParseError);
  CHECK(parse_known("# comment\n\nq,g,pi,value,extends_pi,source\n2,1,1,5,false,x, with comma").at({2, 1, 1}).source ==
        "x, with comma");
}

TEST_CASE("lower and upper bounds") {
  auto table = load_known(kData);
  CHECK(pointbound::lower_bound(2, 4, 5, table).value == 8);
  CHECK(pointbound::lower_bound(2, 0, 2, table).value == 4);
  CHECK(pointbound::lower_bound(2, 3, 7, table).value == 8);
  CHECK(pointbound::lower_bound(2, 3, 4, table).value == 7);
  CHECK(code_of([] { pointbound::lower_bound(7, 3, 3, KnownTable{}); }) == Errc::kNoData);
  // N_2(0,1) is a flagged row, so it does not bound N_2(0,0).
  CHECK(code_of([&] { pointbound::lower_bound(2, 0, 0, table); }) == Errc::kNoData);

  auto u = pointbound::upper_bound(2, 5, 6);
  CHECK(u.value == 9);
  CHECK(u.formula == FormulaId::kLT);
  CHECK(u.poly == "preset(5)");
  auto u4 = pointbound::upper_bound(4, 9, 10);
  CHECK(u4.value == 26);
  CHECK(u4.poly == "preset(4)");
  CHECK(pointbound::upper_bound(2, 3, 5).value == 8);
}

TEST_CASE("certify") {
  auto table = load_known(kData);
  auto c = certify(2, 1, 2, table);
  CHECK(c.exact());
  CHECK(c.upper.value == 5);
  CHECK(certify(3, 15, 17, table).status() == "exact");
  CHECK(certify(2, 3, 6, table).upper.value == 8);
  CHECK(certify(2, 3, 6, table).exact());
  // The next pi is not claimed.
  CHECK(certify(3, 15, 18, table).status() == "gap(28, 29)");
  auto none = certify(7, 3, 3, KnownTable{});
  CHECK(!none.exact());
  CHECK(none.status().rfind("gap(-, ", 0) == 0);
  // A lower bound above the upper bound is a hard error.
  auto bad = parse_known("2,4,4,8,false,x\n2,4,5,9,false,y");
  CHECK(code_of([&] { certify(2, 4, 5, bad); }) == Errc::kInvalidArgument);
}

TEST_CASE("upper bound is monotone in pi") {
  for (long q : {2L, 3L, 4L, 5L}) {
    for (long g = 0; g <= 8; ++g) {
      Integer prev = 0;
      for (long pi = g; pi <= g + 10; ++pi) {
        Integer v = pointbound::upper_bound(q, g, pi).value;
        CHECK(v >= prev);
        prev = v;
      }
    }
  }
}

TEST_CASE("reproduce_paper") {
  auto t0 = std::chrono::steady_clock::now();
  auto rep = reproduce_paper(load_known(kData));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(rep.lines.size() == 14 + 12);
  for (const auto& l : rep.lines) CHECK_MESSAGE(l.pass, l.label << ": " << l.detail);
  CHECK(rep.failures() == 0);
  CHECK(secs < 5);
}

TEST_CASE("degraded and restricted runs") {
  auto table = load_known(kData);
  auto missing = table;
  missing.erase({2, 4, 4});
  auto rep = reproduce_paper(missing);
  CHECK(rep.failures() == 1);
  CHECK(rep.lines[2].detail.rfind("gap(-, 8)", 0) == 0);

  // Only preset(5): the q = 2 lines agree except N_2(0,2), where the bound is 5.
  auto only5 = reproduce_paper(table, {preset(5)});
  for (std::size_t i = 0; i < published_values().size(); ++i) {
    const auto& v = published_values()[i];
    if (v.q != 2) continue;
    CHECK_MESSAGE(only5.lines[i].pass == !(v.g == 0 && v.pi == 2), only5.lines[i].label);
  }

  // Without the LT formula some values are lost.
  BoundOptions no_lt;
  no_lt.use_lt = false;
  auto weaker = reproduce_paper(table, default_polynomials(), no_lt);
  CHECK(weaker.failures() >= 1);
  CHECK(!weaker.lines[0].pass);  // N_2(0,2)
}
