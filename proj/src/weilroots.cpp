#include <algorithm>
#include <map>
#include <sstream>

#include "pointbound/weilroots.hpp"

namespace pointbound {

namespace {

Error weil_error(Errc code, const std::string& message) { return Error(code, "weilroots", message); }

bool is_integer(const Rat& x) { return x.get_den() == 1; }

Integer to_integer(const Rat& x, const std::string& what) {
  if (!is_integer(x)) throw weil_error(Errc::kNonIntegral, what + " = " + x.get_str() + " is not an integer");
  return x.get_num();
}

Integer ipow(const Integer& b, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

RatPoly linear(const Rat& root) { return RatPoly(std::vector<Rat>{-root, Rat(1)}); }

}  // namespace

WeilTuple::WeilTuple(Integer q, std::vector<WeilEntry> entries) : q_(std::move(q)), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (!e.exact && !e.minpoly) throw weil_error(Errc::kInvalidArgument, "entry needs an exact value or a minimal polynomial");
  }
}

WeilTuple WeilTuple::from_exact(const Integer& q, const std::vector<QuadNum>& xs) {
  std::vector<WeilEntry> entries;
  for (const auto& x : xs) entries.push_back({x, CertifiedReal(x), std::nullopt});
  return WeilTuple(q, std::move(entries));
}

RatPoly WeilTuple::char_poly() const {
  // Exact entries multiply with Surd coefficients; the result must be rational.
  std::vector<Surd> acc{Surd(1)};
  std::map<std::vector<std::string>, std::pair<RatPoly, int>> groups;
  for (const auto& e : entries_) {
    if (e.exact) {
      Surd root = e.exact->to_surd();
      std::vector<Surd> next(acc.size() + 1, Surd(0));
      for (std::size_t i = 0; i < acc.size(); ++i) {
        next[i + 1] += acc[i];
        next[i] -= acc[i] * root;
      }
      acc = std::move(next);
    } else {
      std::vector<std::string> key;
      for (const auto& c : e.minpoly->coeffs()) key.push_back(c.get_str());
      auto& slot = groups[key];
      slot.first = *e.minpoly;
      ++slot.second;
    }
  }
  std::vector<Rat> coeffs;
  for (const auto& c : acc) {
    if (!c.is_rational()) throw weil_error(Errc::kNonIntegral, "tuple is not closed under conjugation");
    coeffs.push_back(c.rational_part());
  }
  RatPoly p(std::move(coeffs));
  for (const auto& [key, slot] : groups) {
    const auto& [m, count] = slot;
    if (count % m.degree() != 0) throw weil_error(Errc::kNonIntegral, "incomplete set of conjugate roots");
    for (int i = 0; i < count / m.degree(); ++i) p = p * m;
  }
  return p;
}

std::vector<Rat> WeilTuple::elementary() const {
  RatPoly p = char_poly();
  const int g = p.degree();
  std::vector<Rat> e;
  for (int k = 1; k <= g; ++k) e.push_back(k % 2 == 0 ? p.coeff(g - k) : Rat(-p.coeff(g - k)));
  return e;
}

std::string WeilTuple::to_string(int digits) const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ", ";
    const auto& e = entries_[i];
    if (e.exact) {
      os << e.exact->to_string();
    } else {
      os << e.value.to_string(digits);
    }
  }
  os << ")";
  return os.str();
}

bool LPolynomial::functional_equation_holds() const {
  if (a.size() != static_cast<std::size_t>(2 * g + 1) || a[0] != 1) return false;
  for (int i = 0; i <= g; ++i) {
    if (a[static_cast<std::size_t>(2 * g - i)] != ipow(q, g - i) * a[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

std::string LPolynomial::to_string() const {
  std::vector<Rat> c;
  for (const auto& x : a) c.emplace_back(x);
  return RatPoly(std::move(c)).to_string("T");
}

std::vector<Rat> frobenius_sums(const Integer& q, const std::vector<Rat>& p, int n) {
  if (p.size() < static_cast<std::size_t>(n) + 1) throw weil_error(Errc::kInvalidArgument, "not enough power sums");
  // s_m as coefficient vectors in x: s_0 = 2, s_1 = x, s_m = x s_{m-1} - q s_{m-2}.
  std::vector<std::vector<Rat>> s{{Rat(2)}, {Rat(0), Rat(1)}};
  for (int m = 2; m <= n; ++m) {
    std::vector<Rat> next(static_cast<std::size_t>(m) + 1, Rat(0));
    for (std::size_t k = 0; k < s[m - 1].size(); ++k) next[k + 1] += s[m - 1][k];
    for (std::size_t k = 0; k < s[m - 2].size(); ++k) next[k] -= Rat(q) * s[m - 2][k];
    s.push_back(std::move(next));
  }
  std::vector<Rat> out;
  for (int m = 1; m <= n; ++m) {
    Rat sum(0);
    for (std::size_t k = 0; k < s[m].size(); ++k) sum += s[m][k] * p[k];
    out.push_back(sum);
  }
  return out;
}

std::vector<Integer> power_sums_from_counts(const Integer& q, int g, const std::vector<Integer>& counts) {
  if (g < 0) throw weil_error(Errc::kInvalidArgument, "g must be nonnegative");
  if (counts.size() < static_cast<std::size_t>(g)) {
    throw weil_error(Errc::kInvalidArgument, "need counts for n = 1.." + std::to_string(g));
  }
  // Solve S_n = sum_k a_{n,k} p_k for p_n, using a_{n,n} = 1.
  std::vector<Rat> p{Rat(g)};
  for (int n = 1; n <= g; ++n) {
    p.emplace_back(0);
    Rat S = Rat(ipow(q, n) + 1 - counts[static_cast<std::size_t>(n - 1)]);
    Rat rest = frobenius_sums(q, p, n).back();
    p[static_cast<std::size_t>(n)] = S - rest;
  }
  std::vector<Integer> out;
  for (int n = 1; n <= g; ++n) out.push_back(to_integer(p[static_cast<std::size_t>(n)], "p_" + std::to_string(n)));

  const int total = static_cast<int>(counts.size());
  if (total > g) {
    std::vector<Rat> e = newton_to_elementary(std::vector<Rat>(p.begin() + 1, p.end()));
    std::vector<Rat> all = elementary_to_power_sums(e, total);
    all.insert(all.begin(), Rat(g));
    std::vector<Rat> S = frobenius_sums(q, all, total);
    for (int n = g + 1; n <= total; ++n) {
      Rat predicted = Rat(ipow(q, n) + 1) - S[static_cast<std::size_t>(n - 1)];
      if (predicted != Rat(counts[static_cast<std::size_t>(n - 1)])) {
        throw weil_error(Errc::kInconsistentCounts, "#X(F_q^" + std::to_string(n) + ") = " +
                                                         counts[static_cast<std::size_t>(n - 1)].get_str() +
                                                         " but the first " + std::to_string(g) + " counts give " +
                                                         predicted.get_str());
      }
    }
  }
  return out;
}

std::vector<Rat> newton_to_elementary(const std::vector<Rat>& p) {
  const int g = static_cast<int>(p.size());
  if (g > 8) throw weil_error(Errc::kInvalidArgument, "at most 8 power sums are supported");
  std::vector<Rat> e{Rat(1)};
  for (int k = 1; k <= g; ++k) {
    Rat sum(0);
    for (int i = 1; i <= k; ++i) {
      Rat term = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i - 1)];
      sum += (i % 2 == 1) ? term : Rat(-term);
    }
    e.push_back(sum / k);
  }
  return std::vector<Rat>(e.begin() + 1, e.end());
}

std::vector<Rat> elementary_to_power_sums(const std::vector<Rat>& e, int n) {
  const int g = static_cast<int>(e.size());
  auto E = [&](int i) { return i <= g ? e[static_cast<std::size_t>(i - 1)] : Rat(0); };
  std::vector<Rat> p;
  for (int m = 1; m <= n; ++m) {
    Rat v = (m % 2 == 1 ? Rat(m) : Rat(-m)) * E(m);
    for (int i = 1; i < m; ++i) {
      Rat term = E(i) * p[static_cast<std::size_t>(m - i - 1)];
      v += (i % 2 == 1) ? term : Rat(-term);
    }
    p.push_back(v);
  }
  return p;
}

bool weil_admissible(const WeilTuple& x, const Precision& prec) {
  const QuadNum bound2(Rat(4 * x.q()));
  const CertifiedReal bound = CertifiedReal(2) * sqrt_q_power(x.q(), 1);
  for (const auto& e : x.entries()) {
    if (e.exact) {
      if (compare(*e.exact * *e.exact, bound2) == std::strong_ordering::greater) return false;
      continue;
    }
    try {
      if (compare(e.value, bound, prec) == std::strong_ordering::greater) return false;
      if (compare(e.value, -bound, prec) == std::strong_ordering::less) return false;
    } catch (const Error&) {
      // Undecided means equal to the bound, which is admissible.
    }
  }
  return true;
}

WeilTuple solve_weil_tuple(const std::vector<Rat>& e, const Integer& q, const Precision& prec) {
  const int g = static_cast<int>(e.size());
  if (g > 5) throw weil_error(Errc::kInvalidArgument, "solve_weil_tuple supports g <= 5");
  std::vector<Rat> coeffs(static_cast<std::size_t>(g) + 1);
  coeffs[static_cast<std::size_t>(g)] = 1;
  for (int k = 1; k <= g; ++k) {
    const Rat& ek = e[static_cast<std::size_t>(k - 1)];
    to_integer(ek, "e_" + std::to_string(k));
    coeffs[static_cast<std::size_t>(g - k)] = k % 2 == 0 ? ek : Rat(-ek);
  }
  RatPoly remaining(std::move(coeffs));
  std::vector<WeilEntry> entries;
  if (g == 0) return WeilTuple(q, {});

  auto squarefree = [](const RatPoly& p) {
    if (p.degree() <= 1) return p.monic();
    return p.divmod(gcd(p, p.derivative())).first.monic();
  };
  {
    RatPoly sf = squarefree(remaining);
    if (SturmSequence(sf).count_real_roots() != sf.degree()) {
      throw weil_error(Errc::kNotTotallyReal, remaining.to_string() + " has non-real roots");
    }
  }

  // Integer roots (the polynomial is monic with integer coefficients).
  for (const auto& iv : isolate_real_roots(squarefree(remaining))) {
    for (Integer c = ceil_rat(iv.lo); c <= floor_rat(iv.hi); ++c) {
      while (remaining.degree() > 0 && sgn(remaining.eval(Rat(c))) == 0) {
        remaining = remaining.divmod(linear(Rat(c))).first;
        entries.push_back({QuadNum(Rat(c)), CertifiedReal(Rat(c)), std::nullopt});
      }
    }
  }

  // Quadratic factors x^2 - s x + n: pair up roots and round their symmetric functions.
  for (bool found = true; found && remaining.degree() >= 2;) {
    found = false;
    RatPoly sf = squarefree(remaining);
    std::vector<CertifiedReal> roots;
    for (const auto& iv : isolate_real_roots(sf)) roots.push_back(root_in(sf, iv).refined(pow2(-30), prec));
    for (std::size_t i = 0; i < roots.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < roots.size() && !found; ++j) {
        Interval s = roots[i].enclosure() + roots[j].enclosure();
        Interval n = roots[i].enclosure() * roots[j].enclosure();
        for (Integer si = ceil_rat(s.lo); si <= floor_rat(s.hi) && !found; ++si) {
          for (Integer ni = ceil_rat(n.lo); ni <= floor_rat(n.hi) && !found; ++ni) {
            RatPoly quad(std::vector<Rat>{Rat(ni), Rat(-si), Rat(1)});
            if (!remaining.divmod(quad).second.is_zero()) continue;
            found = true;
            Integer disc = si * si - 4 * ni;
            QuadNum plus(Rat(si) / 2, Rat(1, 2), disc.get_si());
            while (remaining.degree() >= 2 && remaining.divmod(quad).second.is_zero()) {
              remaining = remaining.divmod(quad).first;
              entries.push_back({plus.conjugate(), CertifiedReal(plus.conjugate()), std::nullopt});
              entries.push_back({plus, CertifiedReal(plus), std::nullopt});
            }
          }
        }
      }
    }
  }

  // What is left has no factor of degree 1 or 2, hence is irreducible for g <= 5.
  if (remaining.degree() > 0) {
    RatPoly m = remaining.monic();
    for (const auto& iv : isolate_real_roots(m)) entries.push_back({std::nullopt, root_in(m, iv), m});
  }

  auto key = [&](const WeilEntry& w) { return w.value.refined(pow2(-40), prec).enclosure().midpoint(); };
  std::vector<std::pair<Rat, WeilEntry>> keyed;
  for (auto& w : entries) keyed.emplace_back(key(w), std::move(w));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  entries.clear();
  for (auto& kw : keyed) entries.push_back(std::move(kw.second));

  WeilTuple tuple(q, std::move(entries));
  if (!weil_admissible(tuple, prec)) {
    throw weil_error(Errc::kWeilViolation, "some |x_j| exceeds 2 sqrt(q) for q = " + q.get_str());
  }
  return tuple;
}

Integer counts_from_roots(const WeilTuple& x, int n) {
  if (n < 1) throw weil_error(Errc::kInvalidArgument, "n must be positive");
  std::vector<Rat> p = elementary_to_power_sums(x.elementary(), n);
  p.insert(p.begin(), Rat(x.g()));
  Rat S = frobenius_sums(x.q(), p, n).back();
  return to_integer(Rat(ipow(x.q(), n) + 1) - S, "#X(F_q^" + std::to_string(n) + ")");
}

LPolynomial l_polynomial(const WeilTuple& x) {
  const int g = x.g();
  std::vector<Rat> e = x.elementary();
  // L(T) = sum_k (-1)^k e_k T^k (1 + q T^2)^(g - k).
  RatPoly L;
  const RatPoly one_q(std::vector<Rat>{Rat(1), Rat(0), Rat(x.q())});
  for (int k = 0; k <= g; ++k) {
    Rat ek = k == 0 ? Rat(1) : e[static_cast<std::size_t>(k - 1)];
    RatPoly term = RatPoly::monomial(k % 2 == 0 ? ek : Rat(-ek), k);
    for (int i = 0; i < g - k; ++i) term = term * one_q;
    L = L + term;
  }
  LPolynomial out{x.q(), g, {}};
  for (int i = 0; i <= 2 * g; ++i) out.a.push_back(to_integer(L.coeff(i), "L-polynomial coefficient"));
  return out;
}

CertifiedReal verify_serre_identity(const TrigPolynomial& f, const WeilTuple& x, const std::vector<Integer>& B) {
  const int top = f.r() - 1;
  if (B.size() < static_cast<std::size_t>(top)) {
    throw weil_error(Errc::kInvalidArgument, "need B_1..B_" + std::to_string(top));
  }
  std::vector<Rat> p = elementary_to_power_sums(x.elementary(), top);
  p.insert(p.begin(), Rat(x.g()));
  std::vector<Rat> S = frobenius_sums(x.q(), p, top);

  const CertifiedReal t_minus = sqrt_q_power(x.q(), -1);
  CertifiedReal lhs(static_cast<long>(x.g()));
  for (int n = 1; n <= top; ++n) {
    lhs = lhs + f.c(n) * sqrt_q_power(x.q(), -n) * CertifiedReal(S[static_cast<std::size_t>(n - 1)]);
  }
  for (int d = 1; d <= top; ++d) {
    Rat weight = Rat(d) * Rat(B[static_cast<std::size_t>(d - 1)]);
    if (sgn(weight) != 0) lhs = lhs + CertifiedReal(weight) * psi_d_eval(f, d, t_minus);
  }
  CertifiedReal rhs = CertifiedReal(static_cast<long>(x.g())) + psi_eval(f, t_minus) + psi_eval(f, sqrt_q_power(x.q(), 1));
  return lhs - rhs;
}

}  // namespace pointbound
