#include <cmath>
#include <random>

#include "doctest.h"
#include "pointbound/fforacle.hpp"
#include "pointbound/weilroots.hpp"

using namespace pointbound;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Rat> rats(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Rat> as_rats(const std::vector<Integer>& xs) {
  std::vector<Rat> out;
  for (const auto& x : xs) out.emplace_back(x);
  return out;
}

const QuadNum kSqrt2(0, 1, 2);
const QuadNum kSqrt3(0, 1, 3);

}  // namespace

TEST_CASE("power sums from counts") {
  CHECK(power_sums_from_counts(2, 3, ints({7, 7, 7})) == ints({-4, 10, -22}));
  CHECK(power_sums_from_counts(2, 3, ints({7, 7, 10})) == ints({-4, 10, -25}));
  CHECK(power_sums_from_counts(5, 1, ints({6})) == ints({0}));
  // Extra counts are checked: the Dickson quartic has #X(F_16) = 7.
  CHECK(power_sums_from_counts(2, 3, ints({7, 7, 10, 7})) == ints({-4, 10, -25}));
  try {
    power_sums_from_counts(2, 3, ints({7, 7, 10, 8}));
    FAIL("expected InconsistentCounts");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kInconsistentCounts);
  }
}

TEST_CASE("Newton identities") {
  CHECK(newton_to_elementary(rats({-4, 10, -22})) == rats({-4, 3, 2}));
  CHECK(newton_to_elementary(rats({-4, 10, -25})) == rats({-4, 3, 1}));
  CHECK(newton_to_elementary(rats({0})) == rats({0}));
  CHECK(elementary_to_power_sums(rats({-4, 3, 1}), 5) ==
        elementary_to_power_sums(newton_to_elementary(rats({-4, 10, -25})), 5));
  CHECK(elementary_to_power_sums(rats({-4, 3, 2}), 3) == rats({-4, 10, -22}));
}

TEST_CASE("solve_weil_tuple") {
  auto t = solve_weil_tuple(rats({-4, 3, 2}), 2);
  REQUIRE(t.g() == 3);
  CHECK(t == WeilTuple::from_exact(2, {QuadNum(-2), QuadNum(-1, 1, 2), QuadNum(-1, -1, 2)}));
  CHECK(*t.entries()[0].exact == QuadNum(-1, -1, 2));
  CHECK(*t.entries()[1].exact == QuadNum(-2));
  CHECK(*t.entries()[2].exact == QuadNum(-1, 1, 2));

  auto c = solve_weil_tuple(rats({-4, 3, 1}), 2);
  REQUIRE(c.g() == 3);
  std::vector<double> expect;
  for (int k = 1; k <= 3; ++k) {
    double v = std::cos(k * M_PI / 7);
    expect.push_back(-(3 - 4 * v * v));
  }
  std::sort(expect.begin(), expect.end());
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& e = c.entries()[i];
    CHECK(!e.exact);
    REQUIRE(e.minpoly);
    CHECK(e.minpoly->to_string() == "x^3 + 4*x^2 + 3*x - 1");
    CHECK(std::abs(e.value.refined(pow2(-40)).lo().get_d() - expect[i]) < 1e-9);
  }

  auto z = solve_weil_tuple(rats({0}), 2);
  CHECK(*z.entries()[0].exact == QuadNum(0));

  // x^2 + 1 has no real roots; x = 5 is outside [-2 sqrt 2, 2 sqrt 2].
  try {
    solve_weil_tuple(rats({0, 1}), 2);
    FAIL("expected NotTotallyReal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kNotTotallyReal);
  }
  try {
    solve_weil_tuple(rats({5}), 2);
    FAIL("expected WeilViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kWeilViolation);
  }
  // Repeated roots survive: -(0, 1 - sqrt 3, 1 + sqrt 3, 2, 2).
  auto g5 = WeilTuple::from_exact(2, {QuadNum(0), QuadNum(-1, 1, 3), QuadNum(-1, -1, 3), QuadNum(-2), QuadNum(-2)});
  CHECK(solve_weil_tuple(g5.elementary(), 2) == g5);
}

TEST_CASE("counts from roots") {
  auto g4 = WeilTuple::from_exact(2, {QuadNum(-1, 1, 3), QuadNum(-1, -1, 3), QuadNum(-1), QuadNum(-2)});
  CHECK(counts_from_roots(g4, 1) == 8);
  auto g5 = WeilTuple::from_exact(2, {QuadNum(0), QuadNum(-1, 1, 3), QuadNum(-1, -1, 3), QuadNum(-2), QuadNum(-2)});
  CHECK(counts_from_roots(g5, 1) == 9);
  auto cubic = solve_weil_tuple(rats({-4, 3, 1}), 2);
  CHECK(counts_from_roots(cubic, 1) == 7);
  CHECK(counts_from_roots(cubic, 2) == 7);
  CHECK(counts_from_roots(cubic, 3) == 10);
  CHECK(counts_from_roots(cubic, 4) == 7);  // the Dickson quartic count over F_16

  // A lone sqrt 2 is not Galois-stable.
  auto half = WeilTuple::from_exact(2, {kSqrt2});
  CHECK_THROWS_AS(counts_from_roots(half, 1), Error);
}

TEST_CASE("L-polynomials") {
  auto cubic = solve_weil_tuple(rats({-4, 3, 1}), 2);
  auto L = l_polynomial(cubic);
  CHECK(L.a == ints({1, 4, 9, 15, 18, 16, 8}));
  CHECK(L.functional_equation_holds());
  CHECK(L.to_string() == "8*T^6 + 16*T^5 + 18*T^4 + 15*T^3 + 9*T^2 + 4*T + 1");

  CHECK(l_polynomial(WeilTuple::from_exact(2, {QuadNum(0)})).a == ints({1, 0, 2}));
  CHECK(l_polynomial(WeilTuple::from_exact(4, {QuadNum(-4), QuadNum(-1)})).a == ints({1, 5, 12, 20, 16}));
}

TEST_CASE("round trip on random admissible tuples") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> qsel(2, 5), gsel(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    long q = qsel(rng);
    int g = gsel(rng);
    long m = static_cast<long>(std::floor(2 * std::sqrt(static_cast<double>(q))));
    std::uniform_int_distribution<long> xsel(-m, m);
    std::vector<QuadNum> xs;
    for (int j = 0; j < g; ++j) xs.emplace_back(xsel(rng));
    auto tuple = WeilTuple::from_exact(q, xs);
    std::vector<Integer> counts;
    for (int n = 1; n <= g + 1; ++n) counts.push_back(counts_from_roots(tuple, n));
    auto p = power_sums_from_counts(q, g, counts);
    auto e = newton_to_elementary(as_rats(p));
    auto solved = solve_weil_tuple(e, q);
    REQUIRE(solved == tuple);
    for (int n = 1; n <= g + 1; ++n) REQUIRE(counts_from_roots(solved, n) == counts[static_cast<std::size_t>(n - 1)]);
    REQUIRE(l_polynomial(solved).functional_equation_holds());
  }
}

TEST_CASE("oracle counts match the known tuples") {
  // The F_4 curve y^2 + y = x/(x^3 + x + 1) realizes the roots of x^2 + 5x + 5.
  auto model = parse_curve_model("as; 4; 0,1 | 1,1,0,1");
  auto counts = count_sequence(model, 3);
  auto golden = WeilTuple::from_exact(4, {QuadNum(Rat(-5, 2), Rat(-1, 2), 5), QuadNum(Rat(-5, 2), Rat(1, 2), 5)});
  for (int n = 1; n <= 3; ++n) CHECK(counts_from_roots(golden, n) == counts.counts[static_cast<std::size_t>(n - 1)]);
  auto dickson = count_sequence(parse_curve_model("plane; 2; 1@3.1.0, 1@2.2.0, 1@1.0.3, 1@2.0.2, 1@0.3.1, 1@0.1.3"), 5);
  auto cubic = solve_weil_tuple(rats({-4, 3, 1}), 2);
  for (int n = 1; n <= 5; ++n) CHECK(counts_from_roots(cubic, n) == dickson.counts[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("explicit formula identity") {
  auto zero_residual = [](const CertifiedReal& r) {
    if (r.exact()) return r.exact()->is_zero();
    auto s = r.refined(pow2(-60));
    return sgn(s.lo()) <= 0 && sgn(s.hi()) >= 0;
  };
  auto b_list = [](const WeilTuple& x, int n) {
    CurveCounts c{x.q(), {}, CurveCounts::Source::kRoots};
    for (int i = 1; i <= n; ++i) c.counts.push_back(counts_from_roots(x, i));
    std::vector<Integer> B;
    for (int d = 1; d <= n; ++d) B.push_back(degree_d_points(c, d));
    return B;
  };
  std::vector<WeilTuple> curves{
      WeilTuple::from_exact(2, {QuadNum(0)}),
      solve_weil_tuple(rats({-4, 3, 1}), 2),
      WeilTuple::from_exact(4, {QuadNum(Rat(-5, 2), Rat(-1, 2), 5), QuadNum(Rat(-5, 2), Rat(1, 2), 5)}),
      WeilTuple::from_exact(9, {QuadNum(-5), QuadNum(-5)}),
      WeilTuple::from_exact(3, {QuadNum(-1, 1, 2), QuadNum(-1, -1, 2)}),
      WeilTuple::from_exact(2, {QuadNum(-1, 1, 3), QuadNum(-1, -1, 3), QuadNum(-1), QuadNum(-2)}),
  };
  for (int r = 2; r <= 5; ++r) {
    for (const auto& x : curves) {
      auto B = b_list(x, r - 1);
      CHECK(zero_residual(verify_serre_identity(preset(r), x, B)));
    }
  }
  auto dickson = solve_weil_tuple(rats({-4, 3, 1}), 2);
  CHECK(b_list(dickson, 4) == ints({7, 0, 1, 0}));
  // A wrong B_1 leaves a nonzero residual.
  auto r = verify_serre_identity(preset(3), dickson, ints({8, 0}));
  REQUIRE(r.exact());
  CHECK(!r.exact()->is_zero());
  // A constructed (interval-only) polynomial.
  auto f = construct_polynomial(2, Rat(3));
  CHECK(zero_residual(verify_serre_identity(f, dickson, b_list(dickson, f.r() - 1))));
}
