#pragma once

// Dense univariate polynomials over Q with Sturm-sequence root counting.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pointbound/numerics.hpp"

namespace pointbound {

class RatPoly {
 public:
  RatPoly() = default;
  // Coefficients from the constant term upward.
  explicit RatPoly(std::vector<Rat> coeffs);

  static RatPoly monomial(const Rat& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int i) const;
  Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

  Rat eval(const Rat& x) const;
  Interval eval(const Interval& x) const;
  RatPoly derivative() const;
  RatPoly monic() const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rat& s, const RatPoly& a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Euclidean division; divisor must be nonzero.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

RatPoly gcd(RatPoly a, RatPoly b);

/// Sturm chain p, p', -rem(...), ... of a nonzero polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const RatPoly& p);

  int sign_variations(const Rat& x) const;
  // Number of distinct real roots in the half-open interval (a, b].
  int count_roots(const Rat& a, const Rat& b) const;
  int count_real_roots() const;

 private:
  std::vector<RatPoly> chain_;
};

// Bound B such that every real root lies in (-B, B).
Rat cauchy_root_bound(const RatPoly& p);

// Disjoint isolating intervals [lo, hi] (lo < hi, or a point for exact
// rational roots), sorted, one per distinct real root of p.
std::vector<Interval> isolate_real_roots(const RatPoly& p);

// Certified enclosure of the unique root of a squarefree p inside an
// isolating interval; shrinks as bits grows.
CertifiedReal root_in(const RatPoly& p, const Interval& isolating);

}  // namespace pointbound
