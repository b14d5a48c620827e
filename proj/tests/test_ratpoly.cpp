#include <cmath>

#include "doctest.h"
#include "pointbound/ratpoly.hpp"

using namespace pointbound;

namespace {
RatPoly poly(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return RatPoly(std::move(v));
}
}  // namespace

TEST_CASE("polynomial arithmetic") {
  RatPoly a = poly({-1, 0, 1});  // x^2 - 1
  RatPoly b = poly({1, 1});
  auto [q, r] = a.divmod(b);
  CHECK(q == poly({-1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(a, poly({1, 2, 1})) == poly({1, 1}));
  CHECK(a.derivative() == poly({0, 2}));
  CHECK(a.to_string() == "x^2 - 1");
  CHECK(poly({3, -2, 0, 1}).eval(Rat(2)) == 7);
}

TEST_CASE("Sturm counts") {
  SturmSequence s(poly({-1, 3, 4, 1}));  // x^3 + 4x^2 + 3x - 1
  CHECK(s.count_real_roots() == 3);
  CHECK(s.count_roots(Rat(-4), Rat(-2)) == 1);
  CHECK(s.count_roots(Rat(0), Rat(1)) == 1);
  CHECK(SturmSequence(poly({1, 0, 1})).count_real_roots() == 0);
  // Root at the right endpoint is counted, at the left one is not.
  SturmSequence t(poly({-1, 0, 1}));
  CHECK(t.count_roots(Rat(0), Rat(1)) == 1);
  CHECK(t.count_roots(Rat(1), Rat(2)) == 0);
}

TEST_CASE("root isolation of the cos^2(k pi/7) cubic") {
  RatPoly p = poly({-1, 3, 4, 1});
  auto iso = isolate_real_roots(p);
  REQUIRE(iso.size() == 3);
  // Oracle: x_k = -(3 - 4 cos^2(k pi / 7)).
  std::vector<double> expect;
  for (int k = 1; k <= 3; ++k) {
    double c = std::cos(k * M_PI / 7);
    expect.push_back(-(3 - 4 * c * c));
  }
  std::sort(expect.begin(), expect.end());
  for (std::size_t i = 0; i < 3; ++i) {
    auto r = root_in(p, iso[i]).refined(pow2(-60));
    CHECK(std::abs(r.lo().get_d() - expect[i]) < 1e-12);
  }
  auto exact = isolate_real_roots(poly({2, -3, 1}));
  REQUIRE(exact.size() == 2);
  CHECK(root_in(poly({2, -3, 1}), exact[1]).is_rational());
}
