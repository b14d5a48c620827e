#include <chrono>

#include "doctest.h"
#include "pointbound/fforacle.hpp"
#include "pointbound/genus2.hpp"

using namespace pointbound;

namespace {

DefectPair find_pair(int defect, const QuadNum& o1, const QuadNum& o2, int sign = -1) {
  for (const auto& p : smyth_pairs(defect)) {
    if (p.sign == sign && p.offset1 == o1 && p.offset2 == o2) return p;
  }
  FAIL("pair not in table");
  return {};
}

const QuadNum kGoldenPlus(Rat(-1, 2), Rat(1, 2), 5);
const QuadNum kGoldenMinus(Rat(-1, 2), Rat(-1, 2), 5);
const QuadNum kD3Plus(Rat(-3, 2), Rat(1, 2), 5);
const QuadNum kD3Minus(Rat(-3, 2), Rat(-1, 2), 5);

}  // namespace

TEST_CASE("classify_q") {
  auto c9 = classify_q(9);
  CHECK(c9.kind == QClass::Kind::kSquare);
  CHECK(c9.m == 6);

  auto c2 = classify_q(2);
  CHECK(c2.kind == QClass::Kind::kSpecialGoldenAbove);
  CHECK(c2.special_reason == QClass::Reason::kPDividesM);

  auto c13 = classify_q(13);
  CHECK(c13.kind == QClass::Kind::kSpecialGoldenBelow);
  CHECK(c13.special_reason == QClass::Reason::kXSquaredPlusXPlus1);

  CHECK(classify_q(11).kind == QClass::Kind::kNonSpecial);
  CHECK(classify_q(5).special_reason == QClass::Reason::kXSquaredPlus1);
  CHECK(classify_q(8).special_reason == QClass::Reason::kXSquaredPlusXPlus2);
  CHECK(classify_q(3).kind == QClass::Kind::kSpecialGoldenBelow);
  CHECK(classify_q(32).kind == QClass::Kind::kSpecialGoldenBelow);
  CHECK(classify_q(8192).kind == QClass::Kind::kSpecialGoldenBelow);
  CHECK_THROWS_AS(classify_q(12), Error);
}

TEST_CASE("nq2 and defects") {
  CHECK(nq2(4) == 10);
  CHECK(defect_of_optimal(4) == 3);
  CHECK(nq2(9) == 20);
  CHECK(defect_of_optimal(9) == 2);
  CHECK(nq2(11) == 24);
  CHECK(defect_of_optimal(11) == 0);
  CHECK(nq2(2) == 6);
  CHECK(nq2(3) == 8);
  CHECK(nq2(16) == 33);
  CHECK(defect_of_optimal(13) == 2);
}

TEST_CASE("Smyth table") {
  CHECK(smyth_pairs(0).size() == 2);
  CHECK(smyth_pairs(1).size() == 4);
  CHECK(smyth_pairs(2).size() == 8);
  CHECK(smyth_pairs(3).size() == 12);
  CHECK(find_pair(1, kGoldenPlus, kGoldenMinus).to_string() == "-(m - 1/2 + 1/2*sqrt(5), m - 1/2 - 1/2*sqrt(5))");
  try {
    smyth_pairs(4);
    FAIL("expected OutOfTable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kOutOfTable);
  }
  // The minus-sign entry of each defect d has x1 + x2 = -(2m - d).
  for (int d = 0; d <= 3; ++d) {
    for (const auto& p : smyth_pairs(d)) {
      if (p.sign > 0) continue;
      QuadNum s = p.offset1 + p.offset2;
      CHECK(s == QuadNum(-d));
    }
  }
}

TEST_CASE("admissibility and exclusion") {
  CHECK(weil_admissible(find_pair(3, 0, -3), 4));
  CHECK(!weil_admissible(find_pair(3, QuadNum(Rat(-3, 2), Rat(1, 2), 21), QuadNum(Rat(-3, 2), Rat(-1, 2), 21)), 4));
  CHECK(weil_admissible(find_pair(2, 0, -2), 9));
  CHECK(weil_admissible(find_pair(3, kD3Plus, kD3Minus), 4));
  // Boundary: x = -(m, m) with m = 2 sqrt q exactly.
  CHECK(weil_admissible(find_pair(0, 0, 0), 16));

  CHECK(jacobian_excluded(find_pair(3, -1, -2)));
  CHECK(jacobian_excluded(find_pair(1, 0, -1)));
  CHECK(!jacobian_excluded(find_pair(2, 0, -2)));
  CHECK(!jacobian_excluded(find_pair(1, kGoldenPlus, kGoldenMinus)));
  CHECK(!jacobian_excluded(find_pair(2, -1, -1)));

  // q = 4 keeps exactly the three cases of the proof, and excludes one.
  auto a = analyze_pairs(4);
  int admissible = 0, kept = 0;
  for (const auto& x : a) {
    admissible += x.admissible;
    kept += x.admissible && !x.excluded;
  }
  CHECK(admissible == 3);
  CHECK(kept == 2);
}

TEST_CASE("b2_from_pair") {
  CHECK(b2_from_pair(4, find_pair(3, 0, -3)) == 3);
  CHECK(b2_from_pair(4, find_pair(3, kD3Plus, kD3Minus)) == 4);
  CHECK(b2_from_pair(9, find_pair(2, -1, -1)) == 24);
  CHECK(b2_from_pair(9, find_pair(2, 0, -2)) == 23);
  CHECK(b2_from_pair(3, find_pair(2, -1, -1)) == 3);
  // Cross-check against the brute-force count of y^2 + y = x/(x^3 + x + 1).
  auto counts = count_sequence(parse_curve_model("as; 4; 0,1 | 1,1,0,1"), 2);
  CHECK(degree_d_points(counts, 2) == b2_from_pair(4, find_pair(3, kD3Plus, kD3Minus)));
  CHECK(counts.counts[0] == nq2(4));
  // The sqrt 21 pair over F_2 gives B_2 = -1.
  try {
    b2_from_pair(2, find_pair(3, QuadNum(Rat(-3, 2), Rat(1, 2), 21), QuadNum(Rat(-3, 2), Rat(-1, 2), 21)));
    FAIL("expected NegativeB2");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kNegativeB2);
  }
}

TEST_CASE("pi_range") {
  CHECK(pi_range(4).pi_max == 6);
  CHECK(pi_range(9).pi_max == 26);
  auto r3 = pi_range(3);
  CHECK(r3.n_q_2 == 8);
  CHECK(r3.b2_max == 3);
  CHECK(r3.pi_max == 5);
  CHECK(pi_range(2).pi_max == 2);
  // q = 32: -(m, m - 2) with m = 11.
  auto r32 = pi_range(32);
  CHECK(r32.witness.offset2 == QuadNum(-2));
  CHECK(r32.pi_max == closed_form_pi_max(r32.cls));
}

TEST_CASE("sweep over prime powers up to 10^4") {
  auto t0 = std::chrono::steady_clock::now();
  auto lines = genus2_sweep(10000);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(lines.size() == 1280);
  int bad = 0;
  for (const auto& l : lines) {
    if (!l.ok()) {
      ++bad;
      MESSAGE("q = " << l.q.get_str() << ": " << l.pi_max.get_str() << " vs " << l.closed_form.get_str());
    }
  }
  CHECK(bad == 0);
  CHECK(secs < 30);
}
