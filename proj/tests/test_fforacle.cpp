#include <cmath>
#include <random>

#include "doctest.h"
#include "pointbound/fforacle.hpp"

using namespace pointbound;

namespace {

const char* kF9Curve = "hyp; 9; -1,0,1,0,1,0,1";
const char* kF3Curve = "hyp; 3; 1,0,1,0,1,0,1";
const char* kF4Curve = "as; 4; 0,1 | 1,1,0,1";
const char* kDickson = "plane; 2; 1@3.1.0, 1@2.2.0, 1@1.0.3, 1@2.0.2, 1@0.3.1, 1@0.1.3";

std::vector<long> counts_of(const char* line, int max_n) {
  auto c = count_sequence(parse_curve_model(line), max_n);
  std::vector<long> out;
  for (const auto& x : c.counts) out.push_back(x.get_si());
  return out;
}

}  // namespace

TEST_CASE("field arithmetic") {
  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 16L, 25L, 27L, 32L, 49L, 64L, 81L}) {
    auto F = FiniteField::of_order(q);
    REQUIRE(F->size() == static_cast<std::uint32_t>(q));
    for (FiniteField::Elem a = 0; a < F->size(); ++a) {
      REQUIRE(F->pow(a, static_cast<std::uint64_t>(q)) == a);  // Frobenius identity
      REQUIRE(F->add(a, F->neg(a)) == 0);
      if (a != 0) REQUIRE(F->mul(a, F->inv(a)) == 1);
    }
    // The generator has order exactly q - 1.
    auto g = F->generator();
    for (long d = 1; d < q - 1; ++d) {
      if ((q - 1) % d == 0) CHECK(F->pow(g, static_cast<std::uint64_t>(d)) != 1);
    }
  }
  auto F4 = FiniteField::get(2, 2);
  CHECK(F4->modulus() == std::vector<long>{1, 1, 1});
  CHECK(FiniteField::get(3, 2)->modulus() == std::vector<long>{2, 1, 1});
  CHECK_THROWS_AS(FiniteField(2, {1, 0, 1}), Error);  // t^2 + 1 = (t + 1)^2
  CHECK_THROWS_AS(FiniteField::of_order(6), Error);
  CHECK_THROWS_AS(FiniteField::get(2, 25), Error);
}

TEST_CASE("distributivity and trace") {
  auto F = FiniteField::get(3, 3);
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::uint32_t> pick(0, F->size() - 1);
  for (int i = 0; i < 500; ++i) {
    auto a = pick(rng), b = pick(rng), c = pick(rng);
    REQUIRE(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
    REQUIRE(F->trace(F->add(a, b)) == (F->trace(a) + F->trace(b)) % 3);
  }
  auto F8 = FiniteField::get(2, 3);
  int zeros = 0;
  for (FiniteField::Elem a = 0; a < 8; ++a) zeros += F8->trace(a) == 0;
  CHECK(zeros == 4);
}

TEST_CASE("embedding is a ring map") {
  auto small = FiniteField::get(2, 2), big = FiniteField::get(2, 6);
  Embedding emb(*small, *big);
  for (FiniteField::Elem a = 0; a < 4; ++a) {
    for (FiniteField::Elem b = 0; b < 4; ++b) {
      CHECK(emb(small->mul(a, b)) == big->mul(emb(a), emb(b)));
      CHECK(emb(small->add(a, b)) == big->add(emb(a), emb(b)));
    }
  }
  CHECK_THROWS_AS(Embedding(*FiniteField::get(2, 2), *FiniteField::get(2, 3)), Error);
}

TEST_CASE("curves with known counts") {
  // Brute-force oracle in Python for every count below.
  CHECK(counts_of(kF9Curve, 2) == std::vector<long>{20, 68});
  CHECK(counts_of(kF3Curve, 3) == std::vector<long>{8, 14, 8});
  CHECK(counts_of(kF4Curve, 2) == std::vector<long>{10, 18});
  CHECK(counts_of("as; 2; 0,1 | 1,1,0,1", 4) == std::vector<long>{4, 10, 7, 18});
  CHECK(counts_of(kDickson, 4) == std::vector<long>{7, 7, 10, 7});

  CHECK(degree_d_points(count_sequence(parse_curve_model(kF4Curve), 2), 2) == 4);
  CHECK(degree_d_points(count_sequence(parse_curve_model(kF9Curve), 2), 2) == 24);
  CHECK(degree_d_points(count_sequence(parse_curve_model(kF3Curve), 2), 2) == 3);
  auto dickson = count_sequence(parse_curve_model(kDickson), 4);
  CHECK(degree_d_points(dickson, 1) == 7);
  CHECK(degree_d_points(dickson, 2) == 0);
  CHECK(degree_d_points(dickson, 3) == 1);
  CHECK(degree_d_points(dickson, 4) == 0);
}

TEST_CASE("degree_d_points") {
  CurveCounts p1{2, {3, 5}, CurveCounts::Source::kData};
  CHECK(degree_d_points(p1, 2) == 1);
  CHECK(degree_d_points(p1, 1) == 3);
  CurveCounts bad{2, {3, 4}, CurveCounts::Source::kData};
  CHECK_THROWS_AS(degree_d_points(bad, 2), Error);
  CurveCounts negative{2, {5, 3}, CurveCounts::Source::kData};
  CHECK_THROWS_AS(degree_d_points(negative, 2), Error);
  CHECK_THROWS_AS(degree_d_points(p1, 3), Error);
}

TEST_CASE("Weil bound holds for the known curves") {
  struct Case {
    const char* line;
    long q;
    int g;
    int max_n;
  };
  const Case cases[] = {{kF9Curve, 9, 2, 2}, {kF3Curve, 3, 2, 4}, {kF4Curve, 4, 2, 3}, {kDickson, 2, 3, 6}};
  for (const auto& c : cases) {
    auto counts = counts_of(c.line, c.max_n);
    for (int n = 1; n <= c.max_n; ++n) {
      double qn = std::pow(static_cast<double>(c.q), n);
      CHECK(std::abs(static_cast<double>(counts[static_cast<std::size_t>(n - 1)]) - (qn + 1)) <=
            2 * c.g * std::sqrt(qn) + 1e-9);
    }
  }
}

TEST_CASE("B_d are nonnegative integers on random genus 2 curves") {
  std::mt19937 rng(99);
  for (long p : {3L, 5L}) {
    auto F = FiniteField::get(p, 1);
    std::uniform_int_distribution<long> coef(0, p - 1);
    int tested = 0;
    while (tested < 25) {
      FieldPoly f(7);
      for (auto& c : f) c = F->from_int(coef(rng));
      if (f[6] == 0) continue;
      try {
        CurveModel m{CurveModel::Kind::kHyperelliptic, p, f, {}, {}, {}};
        auto counts = count_sequence(m, 4);
        for (int d = 1; d <= 4; ++d) REQUIRE(degree_d_points(counts, d) >= 0);
        ++tested;
      } catch (const Error& e) {
        REQUIRE(e.code() == Errc::kNotSquarefree);
      }
    }
  }
}

TEST_CASE("model validation") {
  try {
    count_points(parse_curve_model("hyp; 4; 1,0,1,0,1,0,1"), 1);
    FAIL("expected WrongCharacteristic");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kWrongCharacteristic);
  }
}

TEST_CASE("model errors") {
  auto code_of = [](const std::string& line, int n = 1) {
    try {
      count_points(parse_curve_model(line), n);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::kInvalidArgument;
  };
  CHECK(code_of("as; 2; 0,0,1 | 1") == Errc::kEvenOrderPole);
  CHECK(code_of("as; 2; 1,1 | 1,1") == Errc::kNotCoprime);
  CHECK(code_of("as; 2; 1 | 1,0,1") == Errc::kNotSquarefree);
  CHECK(code_of("hyp; 3; 0,0,1,0,0,0,1") == Errc::kNotSquarefree);
  CHECK(code_of("plane; 2; 1@2.0.0, 1@0.2.0") == Errc::kSingularModel);
  CHECK(code_of("plane; 2; 1@2.0.0, 1@0.1.0") == Errc::kInvalidArgument);
  CHECK(code_of("plane; 2; 1@3.1.0", 13) == Errc::kFieldTooLarge);
  CHECK_THROWS_AS(parse_curve_model("cubic; 2; 1"), Error);
  CHECK_THROWS_AS(parse_curve_model("hyp; 9; 1:1:1"), Error);
  CHECK_THROWS_AS(parse_curve_model("hyp; 10; 1"), Error);
  CHECK_THROWS_AS(parse_curve_model("as; 4; 0,1"), Error);
  CHECK_THROWS_AS(parse_curve_model("plane; 2; 1@3.1"), Error);
  // An odd pole at infinity contributes one place: y^2 + y = x^3 over F_2 has 3 points.
  CHECK(count_points(parse_curve_model("as; 2; 0,0,0,1 | 1"), 1) == 3);
}
