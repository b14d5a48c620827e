#include <algorithm>
#include <cctype>
#include <cmath>

#include "pointbound/numerics.hpp"

namespace pointbound {

namespace {

Error numerics_error(Errc code, const std::string& message) {
  return Error(code, "numerics", message);
}

// Dyadic approximation of x on the grid 2^-bits, rounded down.
Rat dyadic_floor(const Rat& x, int bits) {
  Integer scaled = floor_rat(x * pow2(bits));
  return Rat(scaled) / pow2(bits);
}

Rat abs_rat(const Rat& x) { return sgn(x) < 0 ? Rat(-x) : x; }

// atan(1/k) by the alternating series, at working precision `bits`.
Interval atan_inverse(long k, int bits) {
  const Rat eps = pow2(-bits);
  Rat power = Rat(1, k);  // k^-(2n+1)
  const Rat k2 = Rat(1, k * k);
  Interval sum(Rat(0));
  for (long n = 0;; ++n) {
    Rat term = power / (2 * n + 1);
    if (n % 2 == 0) {
      sum = (sum + Interval(term)).rounded(bits);
    } else {
      sum = (sum - Interval(term)).rounded(bits);
    }
    power *= k2;
    Rat next = power / (2 * n + 3);
    if (next < eps) {
      // Alternating, decreasing tail: remainder bounded by the next term.
      return Interval(sum.lo - next, sum.hi + next);
    }
  }
}

// cos(c) for a rational point c with |c| <= 4 via Taylor expansion.
Interval cos_point(const Rat& c, int bits) {
  const Rat eps = pow2(-bits);
  const Interval c2 = Interval(c * c).rounded(bits + 4);
  Interval term(Rat(1));
  Interval sum(Rat(1));
  for (long j = 1;; ++j) {
    term = (term * c2 * Interval(Rat(1, (2 * j - 1) * (2 * j)))).rounded(bits + 4);
    if (j % 2 == 1) {
      sum = (sum - term).rounded(bits + 4);
    } else {
      sum = (sum + term).rounded(bits + 4);
    }
    // Terms decrease from here on once (2j+1)(2j+2) > c^2.
    if (term.hi < eps && Rat((2 * j + 1) * (2 * j + 2)) > c2.hi) {
      return Interval(sum.lo - term.hi, sum.hi + term.hi);
    }
  }
}

}  // namespace

Integer floor_rat(const Rat& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil_rat(const Rat& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rat pow2(int exponent) {
  Rat r(1);
  if (exponent >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  return r;
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto fail = [&]() {
    return Error(Errc::kParseError, "numerics", "not a rational number: '" + s + "'");
  };
  if (s.empty()) throw fail();
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto to_int = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return Integer(t, 10);
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw fail();
    Integer d = to_int(den);
    if (d == 0) throw fail();
    Rat r(to_int(num), d);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (!valid_int(whole) || (!frac.empty() && !valid_int(frac)) ||
        (!frac.empty() && (frac[0] == '-' || frac[0] == '+'))) {
      throw fail();
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer w = to_int(whole);
    if (w < 0) w = -w;
    Integer f = frac.empty() ? Integer(0) : Integer(frac, 10);
    Rat r(w * scale + f, scale);
    r.canonicalize();
    return negative ? Rat(-r) : r;
  }
  if (!valid_int(s)) throw fail();
  return Rat(to_int(s));
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

std::optional<PrimePower> prime_power(const Integer& q) {
  if (q < 2 || !q.fits_slong_p()) return std::nullopt;
  long n = q.get_si();
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (n != 1) return std::nullopt;
    return PrimePower{p, e};
  }
  return PrimePower{n, 1};
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw numerics_error(Errc::kInvalidArgument, "isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::string rat_to_decimal(const Rat& x, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer v = floor_rat(x * scale + Rat(1, 2));
  bool negative = v < 0;
  if (negative) v = -v;
  Integer whole = v / scale;
  Integer frac = v % scale;
  std::string f = frac.get_str();
  if (static_cast<int>(f.size()) < digits) f.insert(0, static_cast<std::size_t>(digits) - f.size(), '0');
  std::string out = (negative ? "-" : "") + whole.get_str();
  if (digits > 0) out += "." + f;
  return out;
}

Interval::Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw numerics_error(Errc::kInvalidArgument, "interval with lo > hi");
}

Rat Interval::magnitude() const { return std::max(abs_rat(lo), abs_rat(hi)); }

Interval Interval::rounded(int bits) const {
  const Rat scale = pow2(bits);
  Rat l = Rat(floor_rat(lo * scale)) / scale;
  Rat h = Rat(ceil_rat(hi * scale)) / scale;
  return {std::move(l), std::move(h)};
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Rat l = std::min({p1, p2, p3, p4});
  Rat h = std::max({p1, p2, p3, p4});
  return {std::move(l), std::move(h)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) {
    throw numerics_error(Errc::kDivisionByZero, "division by an interval containing zero");
  }
  return a * Interval(1 / b.hi, 1 / b.lo);
}

Interval intersect(const Interval& a, const Interval& b) {
  Rat l = std::max(a.lo, b.lo), h = std::min(a.hi, b.hi);
  if (l > h) throw numerics_error(Errc::kInvalidArgument, "disjoint enclosures");
  return {std::move(l), std::move(h)};
}

Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Interval sqrt_interval(const Interval& x, int bits) {
  if (sgn(x.hi) < 0) throw numerics_error(Errc::kInvalidArgument, "square root of a negative number");
  const Rat scale4 = pow2(2 * bits);
  const Rat scale = pow2(bits);
  Integer lo_arg = sgn(x.lo) > 0 ? floor_rat(x.lo * scale4) : Integer(0);
  Integer hi_arg = ceil_rat(x.hi * scale4);
  Integer lo_root, hi_root;
  mpz_sqrt(lo_root.get_mpz_t(), lo_arg.get_mpz_t());
  mpz_sqrt(hi_root.get_mpz_t(), hi_arg.get_mpz_t());
  if (hi_root * hi_root < hi_arg) hi_root += 1;
  return {Rat(lo_root) / scale, Rat(hi_root) / scale};
}

Interval pi_interval(int bits) {
  const int work = bits + 16;
  Interval pi = Interval(Rat(16)) * atan_inverse(5, work) - Interval(Rat(4)) * atan_inverse(239, work);
  return pi.rounded(bits);
}

Interval cos_interval(const Interval& x, int bits) {
  const int work = bits + 16;
  Rat c = dyadic_floor(x.midpoint(), work);
  Rat radius = std::max(x.hi - c, c - x.lo);
  if (abs_rat(c) > 4) {
    // Reduce by a multiple of 2*pi; the pi enclosure error enters the radius.
    long k = std::lround(c.get_d() / (2 * M_PI));
    int extra = 8 + static_cast<int>(std::log2(std::abs(static_cast<double>(k)) + 1));
    Interval reduced = Interval(c) - Interval(Rat(2 * k)) * pi_interval(work + extra);
    Rat c2 = dyadic_floor(reduced.midpoint(), work);
    radius += std::max(reduced.hi - c2, c2 - reduced.lo);
    c = c2;
  }
  Interval value = cos_point(c, work);
  value = Interval(value.lo - radius, value.hi + radius);
  value = Interval(std::max(value.lo, Rat(-1)), std::min(value.hi, Rat(1)));
  return value.rounded(bits);
}

Interval sin_interval(const Interval& x, int bits) {
  Interval half_pi = pi_interval(bits + 8) * Interval(Rat(1, 2));
  return cos_interval(x - half_pi, bits);
}

}  // namespace pointbound
