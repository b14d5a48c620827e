#include <cmath>
#include <limits>
#include <sstream>

#include "pointbound/ratpoly.hpp"
#include "pointbound/trigpoly.hpp"

namespace pointbound {

namespace {

Error trig_error(Errc code, const std::string& message) { return Error(code, "trigpoly", message); }

Rat q_pow(const Integer& q, int k) {
  Integer out = 1;
  for (int i = 0; i < k; ++i) out *= q;
  return Rat(out);
}

// Sign of x decided by refinement; 0 when the cap is hit first.
int certified_sign(const CertifiedReal& x, const Precision& prec) {
  if (x.exact()) return x.exact()->sign();
  for (int bits = std::max(x.bits(), 32);; bits *= 2) {
    bits = std::min(bits, prec.max_bits);
    Interval iv = x.at_bits(bits);
    if (sgn(iv.lo) > 0) return 1;
    if (sgn(iv.hi) < 0) return -1;
    if (bits >= prec.max_bits) return 0;
  }
}

}  // namespace

std::string Provenance::to_string(int r) const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kPreset:
      os << "preset(" << r << ")";
      break;
    case Kind::kConstructed:
      os << "constructed(q=" << q.get_str() << ", lambda=" << lambda.get_str() << ", r=" << r << ")";
      break;
    case Kind::kCustom:
      os << "custom(r=" << r << ")";
      break;
  }
  return os.str();
}

TrigPolynomial::TrigPolynomial(std::vector<CertifiedReal> coeffs, Provenance provenance)
    : coeffs_(std::move(coeffs)), provenance_(std::move(provenance)) {
  if (coeffs_.empty()) throw trig_error(Errc::kInvalidArgument, "a polynomial needs r >= 2");
}

TrigPolynomial::TrigPolynomial(const std::vector<QuadNum>& coeffs, Provenance provenance)
    : exact_(coeffs), provenance_(std::move(provenance)) {
  if (coeffs.empty()) throw trig_error(Errc::kInvalidArgument, "a polynomial needs r >= 2");
  for (const auto& c : coeffs) coeffs_.emplace_back(c);
}

CertifiedReal TrigPolynomial::c(int n) const {
  if (n < 1 || n >= r()) return CertifiedReal(Rat(0));
  return coeffs_[static_cast<std::size_t>(n - 1)];
}

CertifiedReal sqrt_q_power(const Integer& q, int k) {
  int m = k < 0 ? -k : k;
  Surd v = Surd(q_pow(q, m / 2));
  if (m % 2 == 1) v *= Surd::sqrt(Rat(q));
  if (k < 0) v = v.inverse();
  return CertifiedReal(v);
}

RU derive_r_u(const Integer& q, const Rat& lambda, int max_r) {
  if (!prime_power(q)) throw trig_error(Errc::kNotPrimePower, "q = " + q.get_str() + " is not a prime power");
  if (lambda <= Rat(q)) {
    throw trig_error(Errc::kInvalidLambda, "lambda = " + lambda.get_str() + " must exceed q = " + q.get_str());
  }
  // q^r < lambda^2 <= q^(r+1), compared exactly on squares.
  const Rat l2 = lambda * lambda;
  int r = 2;
  while (l2 > q_pow(q, r + 1)) {
    ++r;
    if (r > max_r) {
      throw trig_error(Errc::kUnsupportedR, "lambda = " + lambda.get_str() + " needs r > " + std::to_string(max_r));
    }
  }
  const Surd lam(lambda);
  const Surd top = *sqrt_q_power(q, r + 1).exact() - lam;
  const Surd bottom = lam * *sqrt_q_power(q, 1).exact() - *sqrt_q_power(q, r).exact();
  return {r, CertifiedReal(top / bottom)};
}

CertifiedReal solve_phi0(int r, const CertifiedReal& u, const Precision& prec) {
  if (r < 2) throw trig_error(Errc::kInvalidArgument, "r must be at least 2");
  if (u.exact() && u.exact()->is_zero()) return CertifiedReal::pi() / CertifiedReal(static_cast<long>(r + 1));
  if (certified_sign(u, prec) < 0 || certified_sign(CertifiedReal(1) - u, prec) <= 0) {
    throw trig_error(Errc::kInvalidArgument, "u must lie in [0, 1)");
  }

  const Rat lo_frac(1, r + 1);
  const Rat step(1, r * (r + 1));
  auto phi_at = [=](const Interval& pi, const Rat& s) { return pi * Interval(lo_frac + s * step); };
  auto g_at = [=](const Interval& pi, const Interval& uu, const Rat& s, int w) {
    Interval phi = phi_at(pi, s);
    Interval a = cos_interval(phi * Interval(Rat(r + 1, 2)), w);
    Interval b = cos_interval(phi * Interval(Rat(r - 1, 2)), w);
    return a + uu * b;
  };

  // The bracket [pi/(r+1), pi/r] must show a certified sign change.
  bool bracketed = false;
  for (int w = 32; w <= prec.max_bits; w *= 2) {
    Interval pi = pi_interval(w), uu = u.at_bits(w);
    if (sgn(g_at(pi, uu, Rat(0), w).lo) > 0 && sgn(g_at(pi, uu, Rat(1), w).hi) < 0) {
      bracketed = true;
      break;
    }
  }
  if (!bracketed) throw trig_error(Errc::kNoRoot, "no certified sign change on [pi/(r+1), pi/r]");

  return CertifiedReal::from_procedure([=](int bits) {
    const int w = bits + 16;
    Interval pi = pi_interval(w), uu = u.at_bits(w);
    Rat a(0), b(1);
    const Rat target = pow2(-bits - 3);
    while (b - a > target) {
      Rat mid = (a + b) / 2;
      Interval gm = g_at(pi, uu, mid, w);
      if (sgn(gm.lo) > 0) {
        a = mid;
      } else if (sgn(gm.hi) < 0) {
        b = mid;
      } else {
        break;
      }
    }
    return Interval(phi_at(pi, a).lo, phi_at(pi, b).hi).rounded(bits);
  });
}

TrigPolynomial oesterle_coeffs(int r, const CertifiedReal& phi0, const Precision& prec) {
  if (r < 2 || r > kMaxR) throw trig_error(Errc::kUnsupportedR, "r = " + std::to_string(r) + " is out of range");
  const CertifiedReal s1 = CertifiedReal::sin(phi0);
  const CertifiedReal denom = CertifiedReal(static_cast<long>(r)) * s1 + CertifiedReal::sin(CertifiedReal(static_cast<long>(r)) * phi0);
  std::vector<CertifiedReal> coeffs;
  for (int n = 1; n < r; ++n) {
    CertifiedReal num = CertifiedReal(static_cast<long>(r - n)) * CertifiedReal::cos(CertifiedReal(static_cast<long>(n)) * phi0) * s1 +
                        CertifiedReal::sin(CertifiedReal(static_cast<long>(r - n)) * phi0);
    CertifiedReal c = num / denom;
    if (certified_sign(c, prec) < 0) {
      throw trig_error(Errc::kPositivityViolation, "c_" + std::to_string(n) + " is negative");
    }
    if (certified_sign(c - CertifiedReal(1), prec) > 0) {
      throw trig_error(Errc::kPositivityViolation, "c_" + std::to_string(n) + " exceeds 1");
    }
    coeffs.push_back(std::move(c));
  }
  return TrigPolynomial(std::move(coeffs), Provenance{Provenance::Kind::kConstructed, 0, 0});
}

TrigPolynomial construct_polynomial(const Integer& q, const Rat& lambda, const Precision& prec) {
  RU ru = derive_r_u(q, lambda);
  CertifiedReal phi0 = solve_phi0(ru.r, ru.u, prec);
  TrigPolynomial f = oesterle_coeffs(ru.r, phi0, prec);
  return TrigPolynomial(f.coeffs(), Provenance{Provenance::Kind::kConstructed, q, lambda});
}

TrigPolynomial preset(int r) {
  std::vector<QuadNum> c;
  switch (r) {
    case 2:
      c = {QuadNum(Rat(1, 2))};
      break;
    case 3:
      c = {QuadNum(0, Rat(1, 2), 2), QuadNum(Rat(1, 4))};
      break;
    case 4:
      c = {QuadNum(Rat(1, 4), Rat(1, 4), 5), QuadNum(0, Rat(1, 5), 5), QuadNum(Rat(1, 4), Rat(-1, 20), 5)};
      break;
    case 5:
      c = {QuadNum(0, Rat(1, 2), 3), QuadNum(Rat(7, 12)), QuadNum(0, Rat(1, 6), 3), QuadNum(Rat(1, 12))};
      break;
    default:
      throw trig_error(Errc::kUnsupportedR, "no preset polynomial for r = " + std::to_string(r));
  }
  return TrigPolynomial(c, Provenance{Provenance::Kind::kPreset, 0, 0});
}

namespace {

// f(x) = 1 + 2 sum c_n T_n(x) with x = cos(theta), coefficients given as
// midpoints; T_n from the three-term recurrence.
RatPoly chebyshev_form(const std::vector<Rat>& mids) {
  RatPoly t_prev(std::vector<Rat>{Rat(1)});
  RatPoly t_cur(std::vector<Rat>{Rat(0), Rat(1)});
  const RatPoly two_x(std::vector<Rat>{Rat(0), Rat(2)});
  RatPoly f(std::vector<Rat>{Rat(1)});
  for (std::size_t n = 1; n <= mids.size(); ++n) {
    f = f + Rat(2) * mids[n - 1] * t_cur;
    RatPoly next = two_x * t_cur - t_prev;
    t_prev = std::move(t_cur);
    t_cur = std::move(next);
  }
  return f;
}

bool rigorous_nonnegative(const TrigPolynomial& f, const Rat& tol, const Precision& prec) {
  // |T_n| <= 1 on [-1, 1], so the coefficient radii shift f by at most 2 sum rho_n.
  const int bits = std::min(prec.max_bits, 96);
  std::vector<Rat> mids;
  Rat slack(0);
  for (const auto& c : f.coeffs()) {
    Interval iv = c.at_bits(bits);
    mids.push_back(iv.midpoint());
    slack += iv.width();  // 2 * radius
  }
  RatPoly p = chebyshev_form(mids) + RatPoly(std::vector<Rat>{tol - slack});
  if (sgn(p.eval(Rat(-1))) <= 0) return false;
  if (p.degree() < 1) return true;
  return SturmSequence(p).count_roots(Rat(-1), Rat(1)) == 0;
}

}  // namespace

PositivityReport check_doubly_positive(const TrigPolynomial& f, int grid_size, const Rat& tol, bool rigorous,
                                       const Precision& prec) {
  if (grid_size < 2) throw trig_error(Errc::kInvalidArgument, "grid_size must be at least 2");
  PositivityReport rep;

  rep.coefficients_ok = true;
  for (int n = 1; n < f.r(); ++n) {
    const int s = certified_sign(f.c(n), prec);
    if (s < 0 || (s == 0 && !f.c(n).exact())) {
      rep.coefficients_ok = false;
      rep.failure = "c_" + std::to_string(n) + " is not certified nonnegative";
      break;
    }
  }

  // f(0) = 1 + 2 sum c_n, f(pi) = 1 + 2 sum (-1)^n c_n.
  CertifiedReal at0(1), at_pi(1);
  for (int n = 1; n < f.r(); ++n) {
    at0 = at0 + CertifiedReal(2) * f.c(n);
    at_pi = at_pi + CertifiedReal(n % 2 == 0 ? 2L : -2L) * f.c(n);
  }
  auto endpoint_ok = [&](const CertifiedReal& v) {
    if (v.exact()) return v.exact()->sign() >= 0;
    try {
      return v.refined(tol / 2, prec).lo() >= -tol;
    } catch (const Error&) {
      return false;
    }
  };
  rep.endpoints_ok = endpoint_ok(at0) && endpoint_ok(at_pi);
  if (!rep.endpoints_ok && rep.failure.empty()) rep.failure = "negative value at theta = 0 or pi";

  std::vector<long double> c;
  for (int n = 1; n < f.r(); ++n) c.push_back(f.c(n).refined(pow2(-80), prec).enclosure().midpoint().get_d());
  const long double pi = 3.14159265358979323846264338327950288L;
  rep.grid_min = std::numeric_limits<double>::infinity();
  for (int k = 0; k < grid_size; ++k) {
    long double theta = pi * k / (grid_size - 1);
    long double v = 1;
    for (std::size_t n = 0; n < c.size(); ++n) v += 2 * c[n] * std::cos(static_cast<long double>(n + 1) * theta);
    if (static_cast<double>(v) < rep.grid_min) {
      rep.grid_min = static_cast<double>(v);
      rep.grid_argmin = static_cast<double>(theta);
    }
  }
  rep.grid_ok = rep.grid_min >= -tol.get_d();
  if (!rep.grid_ok && rep.failure.empty()) rep.failure = "grid minimum below -tol";

  if (rigorous) {
    rep.rigorous_ok = rigorous_nonnegative(f, tol, prec);
    if (!*rep.rigorous_ok && rep.failure.empty()) rep.failure = "Sturm certificate failed";
  }
  return rep;
}

CertifiedReal psi_d_eval(const TrigPolynomial& f, int d, const CertifiedReal& t) {
  if (d < 1) throw trig_error(Errc::kInvalidArgument, "d must be positive");
  CertifiedReal sum(0);
  CertifiedReal power(1);
  for (int n = 1; n < f.r(); ++n) {
    power = power * t;
    if (n % d == 0) sum = sum + f.c(n) * power;
  }
  return sum;
}

CertifiedReal psi_eval(const TrigPolynomial& f, const CertifiedReal& t) { return psi_d_eval(f, 1, t); }

}  // namespace pointbound
