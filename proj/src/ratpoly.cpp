#include <algorithm>
#include <sstream>

#include "pointbound/ratpoly.hpp"

namespace pointbound {

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1, Rat(0));
  v.back() = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rat RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Interval RatPoly::eval(const Interval& x) const {
  Interval acc(Rat(0));
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Interval(*it);
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  std::vector<Rat> v = coeffs_;
  Rat lc = v.back();
  for (auto& c : v) c /= lc;
  return RatPoly(std::move(v));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + Rat(-1) * b; }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(v));
}

RatPoly operator*(const Rat& s, const RatPoly& a) {
  std::vector<Rat> v = a.coeffs_;
  for (auto& c : v) c *= s;
  return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw Error(Errc::kDivisionByZero, "numerics", "polynomial division by zero");
  std::vector<Rat> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {RatPoly(), *this};
  std::vector<Rat> quot(static_cast<std::size_t>(degree() - dd + 1), Rat(0));
  const Rat lc = divisor.leading();
  for (int i = degree(); i >= dd; --i) {
    Rat c = rem[static_cast<std::size_t>(i)] / lc;
    quot[static_cast<std::size_t>(i - dd)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rat mag = sgn(c) < 0 ? Rat(-c) : c;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << (i == 0 || mag != 1 ? "*" : "") << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

SturmSequence::SturmSequence(const RatPoly& p) {
  if (p.is_zero()) throw Error(Errc::kInvalidArgument, "numerics", "Sturm sequence of the zero polynomial");
  chain_.push_back(p);
  chain_.push_back(p.derivative());
  while (!chain_.back().is_zero()) {
    RatPoly r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
    chain_.push_back(Rat(-1) * r);
  }
  chain_.pop_back();
}

int SturmSequence::sign_variations(const Rat& x) const {
  int variations = 0, last = 0;
  for (const auto& p : chain_) {
    int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmSequence::count_roots(const Rat& a, const Rat& b) const {
  return sign_variations(a) - sign_variations(b);
}

int SturmSequence::count_real_roots() const {
  Rat bound = cauchy_root_bound(chain_.front());
  return count_roots(-bound, bound);
}

Rat cauchy_root_bound(const RatPoly& p) {
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rat r = p.coeff(i) / p.leading();
    if (sgn(r) < 0) r = -r;
    m = std::max(m, r);
  }
  return m + 1;
}

std::vector<Interval> isolate_real_roots(const RatPoly& p) {
  std::vector<Interval> out;
  if (p.degree() < 1) return out;
  SturmSequence sturm(p);
  Rat bound = cauchy_root_bound(p);
  std::vector<std::pair<Rat, Rat>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int n = sturm.count_roots(a, b);
    if (n == 0) continue;
    if (n == 1) {
      if (sgn(p.eval(b)) == 0) {
        out.emplace_back(b);
      } else {
        out.emplace_back(a, b);
      }
      continue;
    }
    Rat mid = (a + b) / 2;
    stack.emplace_back(mid, b);
    stack.emplace_back(a, mid);
  }
  std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  return out;
}

CertifiedReal root_in(const RatPoly& p, const Interval& isolating) {
  if (isolating.is_point()) return CertifiedReal(isolating.lo);
  const int sign_hi = sgn(p.eval(isolating.hi));
  const int sign_lo = sgn(p.eval(isolating.lo));
  if (sign_hi == 0) return CertifiedReal(isolating.hi);
  if (sign_lo == 0) return CertifiedReal(isolating.lo);
  if (sign_lo == sign_hi) throw Error(Errc::kInvalidArgument, "numerics", "interval does not bracket a root");
  return CertifiedReal::from_procedure([p, isolating, sign_lo](int bits) {
    Rat a = isolating.lo, b = isolating.hi;
    const Rat target = pow2(-bits);
    while (b - a > target) {
      Rat mid = (a + b) / 2;
      int s = sgn(p.eval(mid));
      if (s == 0) return Interval(mid);
      if (s == sign_lo) a = mid; else b = mid;
    }
    return Interval(a, b);
  });
}

}  // namespace pointbound
