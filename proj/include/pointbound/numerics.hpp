#pragma once

// Exact and certified real arithmetic.
//
// Three layers:
//   Interval       closed rational interval with outward-rounding operations
//   Surd           exact element of a multiquadratic field, sum of r_i * sqrt(n_i)
//   CertifiedReal  lazily refinable enclosure of a real number, optionally
//                  carrying an exact Surd value
//
// QuadNum is the single-radical special case a + b*sqrt(d) used for Weil
// numbers and preset polynomial coefficients.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "pointbound/error.hpp"

namespace pointbound {

using Integer = mpz_class;
using Rat = mpq_class;

struct Precision {
  int initial_bits = 32;
  int max_bits = 4096;
};

Integer floor_rat(const Rat& x);
Integer ceil_rat(const Rat& x);
Rat pow2(int exponent);
Rat parse_rat(std::string_view text);
std::string rat_to_string(const Rat& x);
// Decimal rendering of x with `digits` fractional digits (truncated toward
// -infinity).
std::string rat_to_decimal(const Rat& x, int digits);

struct PrimePower {
  long p;
  int e;
};
// q = p^e with p prime and e >= 1, by trial division.
std::optional<PrimePower> prime_power(const Integer& q);
Integer isqrt(const Integer& n);
bool is_square(const Integer& n);

/// Closed interval [lo, hi] with rational endpoints.
struct Interval {
  Rat lo;
  Rat hi;

  Interval() = default;
  explicit Interval(const Rat& point) : lo(point), hi(point) {}
  Interval(Rat l, Rat h);

  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool is_point() const { return lo == hi; }
  Rat magnitude() const;

  // Widens to the grid 2^-bits. Point intervals on the grid stay points.
  Interval rounded(int bits) const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
// Throws Errc::kDivisionByZero when the divisor contains zero.
Interval operator/(const Interval& a, const Interval& b);
Interval intersect(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);

// Enclosures of elementary functions at working precision `bits`.
Interval sqrt_interval(const Interval& x, int bits);
Interval pi_interval(int bits);
Interval cos_interval(const Interval& x, int bits);
Interval sin_interval(const Interval& x, int bits);

/// Exact element sum_i r_i * sqrt(n_i) of Q(sqrt(p_1), ..., sqrt(p_k)), with
/// distinct squarefree radicands n_i >= 1. Zero testing is exact because
/// square roots of distinct squarefree integers are linearly independent.
class Surd {
 public:
  Surd() = default;
  Surd(const Rat& r);  // NOLINT(google-explicit-constructor)
  Surd(long r) : Surd(Rat(r)) {}  // NOLINT(google-explicit-constructor)

  // sqrt(x) for x >= 0.
  static Surd sqrt(const Rat& x);
  // coeff * sqrt(radicand); radicand need not be squarefree.
  static Surd term(const Rat& coeff, std::int64_t radicand);

  const std::map<std::int64_t, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rat rational_part() const;
  // Throws if not rational.
  Rat to_rat() const;

  int sign() const;
  Integer floor() const;
  Interval enclose(int bits) const;
  Surd inverse() const;

  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend Surd operator/(Surd a, const Surd& b) { return a /= b; }
  friend Surd operator-(const Surd& a);
  friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Rat& coeff, std::int64_t radicand);
  std::map<std::int64_t, Rat> terms_;
};

std::strong_ordering compare(const Surd& a, const Surd& b);

/// a + b*sqrt(d), d squarefree >= 2; when b == 0 the radicand is normalized
/// to 0.
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(const Rat& a);  // NOLINT(google-explicit-constructor)
  QuadNum(long a) : QuadNum(Rat(a)) {}  // NOLINT(google-explicit-constructor)
  // Accepts any positive radicand; square factors are pulled into b.
  QuadNum(const Rat& a, const Rat& b, std::int64_t d);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  std::int64_t d() const { return d_; }
  bool is_rational() const { return sgn(b_) == 0; }

  QuadNum conjugate() const { return QuadNum(a_, -b_, d_); }
  Rat norm() const { return a_ * a_ - b_ * b_ * d_; }
  Rat trace() const { return 2 * a_; }
  int sign() const;
  Surd to_surd() const;

  // Operands must share the radicand unless one side is rational.
  friend QuadNum operator+(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator-(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator*(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator-(const QuadNum& x) { return QuadNum(-x.a_, -x.b_, x.d_); }
  friend bool operator==(const QuadNum& x, const QuadNum& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (sgn(x.b_) == 0 || x.d_ == y.d_);
  }

  std::string to_string() const;

 private:
  Rat a_;
  Rat b_;
  std::int64_t d_ = 0;
};

std::strong_ordering compare(const QuadNum& x, const QuadNum& y);

namespace detail {
struct RealNode {
  virtual ~RealNode() = default;
  // Enclosure of the value whose width shrinks to zero as bits grows.
  virtual Interval eval(int bits) const = 0;
};
}  // namespace detail

/// A real number known through an enclosure that can be refined on demand.
/// Values built only from rationals, square roots of rationals and field
/// operations also carry their exact Surd, which makes floors and comparisons
/// decidable even when the true value is an integer.
class CertifiedReal {
 public:
  CertifiedReal();
  CertifiedReal(const Rat& x);    // NOLINT(google-explicit-constructor)
  CertifiedReal(long x) : CertifiedReal(Rat(x)) {}  // NOLINT(google-explicit-constructor)
  CertifiedReal(const Surd& x);   // NOLINT(google-explicit-constructor)
  CertifiedReal(const QuadNum& x) : CertifiedReal(x.to_surd()) {}  // NOLINT

  // Wraps an enclosure procedure; `eval(bits)` must contain the true value
  // for every bits and shrink to it as bits grows.
  static CertifiedReal from_procedure(std::function<Interval(int)> eval,
                                      int initial_bits = 32);

  static CertifiedReal pi();
  static CertifiedReal sqrt(const CertifiedReal& x);
  static CertifiedReal cos(const CertifiedReal& x);
  static CertifiedReal sin(const CertifiedReal& x);

  const Rat& lo() const { return enclosure_.lo; }
  const Rat& hi() const { return enclosure_.hi; }
  const Interval& enclosure() const { return enclosure_; }
  Rat width() const { return enclosure_.width(); }
  int bits() const { return bits_; }
  const std::optional<Surd>& exact() const { return exact_; }
  bool is_rational() const { return exact_ && exact_->is_rational(); }

  // Enclosure at a given working precision (does not modify this value).
  Interval at_bits(int bits) const;
  // New value whose enclosure has width <= `width`. Throws kNonTermination if
  // the precision cap is reached first.
  CertifiedReal refined(const Rat& width, const Precision& prec = {}) const;
  CertifiedReal at_precision(int bits) const;

  CertifiedReal pow(unsigned exponent) const;

  friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator-(const CertifiedReal& a);

  // "12.485281 ± 1e-9" style rendering of the midpoint and half-width.
  std::string to_string(int digits = 9) const;

 private:
  CertifiedReal(std::shared_ptr<const detail::RealNode> node, std::optional<Surd> exact,
                int bits);

  std::shared_ptr<const detail::RealNode> node_;
  std::optional<Surd> exact_;
  Interval enclosure_;
  int bits_ = 32;
};

CertifiedReal quad_to_interval(const QuadNum& x, const Rat& width);

// Floor of a certified real. Exact values always succeed; otherwise refines
// until both endpoints share a floor, throwing FloorAmbiguous at the cap.
Integer certified_floor(const CertifiedReal& x, const Precision& prec = {});

// Strict ordering of true values. Exact pairs are decided exactly; otherwise
// enclosures are refined until they separate, throwing kNonTermination at the
// cap (suspected equality).
std::strong_ordering compare(const CertifiedReal& x, const CertifiedReal& y,
                             const Precision& prec = {});

}  // namespace pointbound
