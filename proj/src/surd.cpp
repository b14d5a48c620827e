#include <numeric>
#include <set>
#include <sstream>

#include "pointbound/numerics.hpp"

namespace pointbound {

namespace {

Error surd_error(Errc code, const std::string& message) { return Error(code, "numerics", message); }

// n = s^2 * k with k squarefree.
std::pair<std::int64_t, std::int64_t> split_square(std::int64_t n) {
  std::int64_t s = 1, k = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2 == 1) k *= p;
  }
  k *= n;
  return {s, k};
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw surd_error(Errc::kInvalidArgument, "radicand too large");
  return z.get_si();
}

}  // namespace

Surd::Surd(const Rat& r) {
  if (sgn(r) != 0) terms_.emplace(1, r);
}

Surd Surd::sqrt(const Rat& x) {
  if (sgn(x) < 0) throw surd_error(Errc::kInvalidArgument, "square root of a negative rational");
  // sqrt(n/d) = sqrt(n*d)/d
  Integer nd = x.get_num() * x.get_den();
  return term(Rat(1, 1) / Rat(x.get_den()), to_int64(nd));
}

Surd Surd::term(const Rat& coeff, std::int64_t radicand) {
  if (radicand < 0) throw surd_error(Errc::kInvalidArgument, "negative radicand");
  Surd out;
  if (radicand == 0 || sgn(coeff) == 0) return out;
  auto [s, k] = split_square(radicand);
  out.add_term(coeff * Rat(s), k);
  return out;
}

void Surd::add_term(const Rat& coeff, std::int64_t radicand) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(radicand, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool Surd::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rat Surd::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Surd::to_rat() const {
  if (!is_rational()) throw surd_error(Errc::kInvalidArgument, "surd is irrational: " + to_string());
  return rational_part();
}

Interval Surd::enclose(int bits) const {
  Interval sum(Rat(0));
  const int work = bits + 8 + static_cast<int>(terms_.size());
  for (const auto& [n, c] : terms_) {
    if (n == 1) {
      sum = sum + Interval(c);
      continue;
    }
    Integer mag = ceil_rat(sgn(c) < 0 ? Rat(-c) : c);
    int extra = static_cast<int>(mpz_sizeinbase(mag.get_mpz_t(), 2));
    Interval root = sqrt_interval(Interval(Rat(n)), work + extra);
    sum = sum + Interval(c) * root;
  }
  return sum.is_point() ? sum : sum.rounded(bits);
}

int Surd::sign() const {
  if (is_rational()) return sgn(rational_part());
  for (int bits = 64;; bits *= 2) {
    Interval iv = enclose(bits);
    if (sgn(iv.lo) > 0) return 1;
    if (sgn(iv.hi) < 0) return -1;
    // Nonzero algebraic numbers separate from zero at finite precision.
    if (bits > (1 << 20)) throw surd_error(Errc::kNonTermination, "sign of " + to_string());
  }
}

Integer Surd::floor() const {
  if (is_rational()) return floor_rat(rational_part());
  for (int bits = 64;; bits *= 2) {
    Interval iv = enclose(bits);
    Integer fl = floor_rat(iv.lo), fh = floor_rat(iv.hi);
    if (fl == fh) return fl;
    if (fh == fl + 1) {
      int s = (*this - Surd(Rat(fh))).sign();
      return s >= 0 ? fh : fl;
    }
    if (bits > (1 << 20)) throw surd_error(Errc::kNonTermination, "floor of " + to_string());
  }
}

Surd Surd::inverse() const {
  if (is_zero()) throw surd_error(Errc::kDivisionByZero, "division by exact zero");
  std::set<std::int64_t> primes;
  for (const auto& [n, c] : terms_) {
    for (auto p : prime_factors(n)) primes.insert(p);
  }
  Surd num(Rat(1));
  Surd den = *this;
  // Multiplying by the conjugate under sqrt(p) -> -sqrt(p) removes p from the
  // denominator; the automorphisms commute so the result ends up rational.
  for (auto p : primes) {
    Surd conj;
    for (const auto& [n, c] : den.terms_) conj.add_term(n % p == 0 ? Rat(-c) : c, n);
    num *= conj;
    den *= conj;
  }
  Rat d = den.to_rat();
  Surd out;
  for (const auto& [n, c] : num.terms_) out.add_term(c / d, n);
  return out;
}

Surd& Surd::operator+=(const Surd& o) {
  for (const auto& [n, c] : o.terms_) add_term(c, n);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  for (const auto& [n, c] : o.terms_) add_term(-c, n);
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  Surd out;
  for (const auto& [n1, c1] : terms_) {
    for (const auto& [n2, c2] : o.terms_) {
      std::int64_t g = std::gcd(n1, n2);
      __int128 radicand = static_cast<__int128>(n1 / g) * (n2 / g);
      if (radicand > (static_cast<__int128>(1) << 62)) {
        throw surd_error(Errc::kInvalidArgument, "radicand overflow");
      }
      out.add_term(c1 * c2 * Rat(g), static_cast<std::int64_t>(radicand));
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Surd& Surd::operator/=(const Surd& o) { return *this *= o.inverse(); }

Surd operator-(const Surd& a) {
  Surd out;
  for (const auto& [n, c] : a.terms_) out.add_term(-c, n);
  return out;
}

std::string Surd::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : terms_) {
    Rat mag = sgn(c) < 0 ? Rat(-c) : c;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (n == 1) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << "sqrt(" << n << ")";
    } else {
      os << mag.get_str() << "*sqrt(" << n << ")";
    }
  }
  return os.str();
}

std::strong_ordering compare(const Surd& a, const Surd& b) {
  int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

QuadNum::QuadNum(const Rat& a) : a_(a) {}

QuadNum::QuadNum(const Rat& a, const Rat& b, std::int64_t d) : a_(a), b_(b), d_(d) {
  if (sgn(b_) == 0) {
    d_ = 0;
    return;
  }
  if (d_ < 1) throw surd_error(Errc::kInvalidArgument, "QuadNum radicand must be positive");
  auto [s, k] = split_square(d_);
  b_ *= Rat(s);
  if (k == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  } else {
    d_ = k;
  }
}

int QuadNum::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and b^2 d wins (never equal, d squarefree).
  return a_ * a_ > b_ * b_ * Rat(d_) ? sa : sb;
}

Surd QuadNum::to_surd() const { return Surd(a_) + Surd::term(b_, d_ == 0 ? 1 : d_); }

namespace {
std::int64_t common_radicand(const QuadNum& x, const QuadNum& y) {
  if (x.is_rational()) return y.d();
  if (y.is_rational() || x.d() == y.d()) return x.d();
  throw surd_error(Errc::kInvalidArgument,
                   "QuadNum operands with different radicands: " + x.to_string() + ", " + y.to_string());
}
}  // namespace

QuadNum operator+(const QuadNum& x, const QuadNum& y) {
  return QuadNum(x.a_ + y.a_, x.b_ + y.b_, common_radicand(x, y));
}

QuadNum operator-(const QuadNum& x, const QuadNum& y) {
  return QuadNum(x.a_ - y.a_, x.b_ - y.b_, common_radicand(x, y));
}

QuadNum operator*(const QuadNum& x, const QuadNum& y) {
  std::int64_t d = common_radicand(x, y);
  return QuadNum(x.a_ * y.a_ + x.b_ * y.b_ * Rat(d), x.a_ * y.b_ + x.b_ * y.a_, d);
}

std::string QuadNum::to_string() const {
  if (is_rational()) return a_.get_str();
  std::ostringstream os;
  Rat mag = sgn(b_) < 0 ? Rat(-b_) : b_;
  std::string radical = "sqrt(" + std::to_string(d_) + ")";
  std::string bpart = mag == 1 ? radical : mag.get_str() + "*" + radical;
  if (sgn(a_) == 0) {
    os << (sgn(b_) < 0 ? "-" : "") << bpart;
  } else {
    os << a_.get_str() << (sgn(b_) < 0 ? " - " : " + ") << bpart;
  }
  return os.str();
}

std::strong_ordering compare(const QuadNum& x, const QuadNum& y) {
  return compare(x.to_surd(), y.to_surd());
}

}  // namespace pointbound
