#include "pointbound/bounds.hpp"

namespace pointbound {

namespace {

Error bounds_error(Errc code, const std::string& message) { return Error(code, "bounds", message); }

struct PsiPair {
  CertifiedReal minus;  // psi(q^{-1/2})
  CertifiedReal plus;   // psi(q^{1/2})
};

PsiPair psi_pair(const TrigPolynomial& f, const Integer& q) {
  PsiPair p{psi_eval(f, sqrt_q_power(q, -1)), psi_eval(f, sqrt_q_power(q, 1))};
  bool positive = false;
  if (p.minus.exact()) {
    positive = p.minus.exact()->sign() > 0;
  } else {
    for (int bits = 32; bits <= 4096 && !positive; bits *= 2) {
      Interval iv = p.minus.at_bits(bits);
      if (sgn(iv.hi) < 0) break;
      positive = sgn(iv.lo) > 0;
    }
  }
  if (!positive) {
    throw bounds_error(Errc::kZeroPsi, "psi(q^{-1/2}) is not certified positive for " + f.label());
  }
  return p;
}

CertifiedReal tail(const PsiPair& p) { return CertifiedReal(1) + p.plus / p.minus; }

void check_genus(long g, long pi) {
  if (g < 0 || pi < g) throw bounds_error(Errc::kInvalidArgument, "need 0 <= g <= pi");
}

}  // namespace

void CurveParams::validate() const {
  if (!prime_power(q)) throw bounds_error(Errc::kNotPrimePower, "q = " + q.get_str() + " is not a prime power");
  check_genus(g, pi);
}

std::string formula_name(FormulaId id) {
  switch (id) {
    case FormulaId::kLT:
      return "LT";
    case FormulaId::kShift:
      return "shift";
    case FormulaId::kAPExplicit:
      return "AP-explicit";
    case FormulaId::kAPClosed:
      return "AP-closed";
  }
  return "?";
}

CertifiedReal smooth_bound(const TrigPolynomial& f, const Integer& q, long g) {
  check_genus(g, g);
  PsiPair p = psi_pair(f, q);
  return CertifiedReal(g) / p.minus + tail(p);
}

CertifiedReal singular_bound_ap(const TrigPolynomial& f, const Integer& q, long g, long pi) {
  check_genus(g, pi);
  PsiPair p = psi_pair(f, q);
  return CertifiedReal(Rat(g) + Rat(pi - g, 2)) / p.minus + tail(p);
}

CertifiedReal singular_bound_shift(const TrigPolynomial& f, const Integer& q, long g, long pi) {
  return smooth_bound(f, q, g) + CertifiedReal(pi - g);
}

CertifiedReal singular_bound_lt(const TrigPolynomial& f, const Integer& q, long g, long pi) {
  check_genus(g, pi);
  PsiPair p = psi_pair(f, q);
  CertifiedReal weight = CertifiedReal(g) + CertifiedReal(pi - g) / (sqrt_q_power(q, 1) + CertifiedReal(1));
  return weight / p.minus + tail(p);
}

CertifiedReal weil_ap_bound(const Integer& q, long g, long pi) {
  check_genus(g, pi);
  return CertifiedReal(Rat(q + 1 + pi - g)) + CertifiedReal(2 * g) * sqrt_q_power(q, 1);
}

std::vector<TrigPolynomial> default_polynomials() { return {preset(2), preset(3), preset(4), preset(5)}; }

BoundReport best_bound(const CurveParams& params, const std::vector<TrigPolynomial>& polys,
                       const BoundOptions& options) {
  params.validate();
  const bool explicit_formulas = options.use_lt || options.use_shift || options.use_ap_explicit;
  if (explicit_formulas && polys.empty()) throw bounds_error(Errc::kInvalidArgument, "no polynomials given");

  BoundReport report{params, {}, 0};
  auto add = [&](FormulaId id, std::string poly, CertifiedReal value) {
    Integer fl = certified_floor(value, options.prec);
    report.entries.push_back({id, std::move(poly), std::move(value), fl});
  };
  const Integer& q = params.q;
  for (const auto& f : polys) {
    if (!explicit_formulas) break;
    if (options.use_lt) add(FormulaId::kLT, f.label(), singular_bound_lt(f, q, params.g, params.pi));
    if (options.use_shift) add(FormulaId::kShift, f.label(), singular_bound_shift(f, q, params.g, params.pi));
    if (options.use_ap_explicit) {
      add(FormulaId::kAPExplicit, f.label(), singular_bound_ap(f, q, params.g, params.pi));
    }
  }
  if (options.use_ap_closed) add(FormulaId::kAPClosed, "", weil_ap_bound(q, params.g, params.pi));
  if (report.entries.empty()) throw bounds_error(Errc::kInvalidArgument, "every formula is disabled");

  for (std::size_t i = 1; i < report.entries.size(); ++i) {
    const auto& e = report.entries[i];
    const auto& b = report.entries[report.best_index];
    if (e.floor < b.floor || (e.floor == b.floor && e.formula < b.formula)) report.best_index = i;
  }
  return report;
}

FormulaComparison formula_comparison(const TrigPolynomial& f, const Integer& q, const Precision& prec) {
  PsiPair p = psi_pair(f, q);
  CertifiedReal threshold = CertifiedReal(1) / (sqrt_q_power(q, 1) + CertifiedReal(1));
  return {compare(p.minus, CertifiedReal(Rat(1, 2)), prec), compare(p.minus, threshold, prec)};
}

LambdaChoice optimize_lambda(const CurveParams& params, const std::vector<Rat>& lambdas,
                             std::vector<std::string>* skipped, const BoundOptions& options) {
  std::optional<LambdaChoice> best;
  for (const auto& lambda : lambdas) {
    try {
      TrigPolynomial f = construct_polynomial(params.q, lambda, options.prec);
      BoundReport rep = best_bound(params, {f}, options);
      if (!best || rep.best().floor < best->report.best().floor) best = LambdaChoice{lambda, std::move(rep)};
    } catch (const Error& e) {
      if (skipped) skipped->push_back(lambda.get_str() + ": " + e.what());
    }
  }
  if (!best) throw bounds_error(Errc::kInvalidArgument, "no usable lambda in the grid");
  return std::move(*best);
}

}  // namespace pointbound
