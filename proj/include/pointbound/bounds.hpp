#pragma once

// Explicit-formula upper bounds for the number of rational points of a curve
// of geometric genus g and arithmetic genus pi over F_q.

#include <compare>
#include <string>
#include <vector>

#include "pointbound/numerics.hpp"
#include "pointbound/trigpoly.hpp"

namespace pointbound {

struct CurveParams {
  Integer q;
  long g = 0;
  long pi = 0;

  // Throws kNotPrimePower / kInvalidArgument.
  void validate() const;
};

// Declaration order is the tie-break order of best_bound.
enum class FormulaId { kLT, kShift, kAPExplicit, kAPClosed };
std::string formula_name(FormulaId id);

CertifiedReal smooth_bound(const TrigPolynomial& f, const Integer& q, long g);
CertifiedReal singular_bound_ap(const TrigPolynomial& f, const Integer& q, long g, long pi);
CertifiedReal singular_bound_shift(const TrigPolynomial& f, const Integer& q, long g, long pi);
CertifiedReal singular_bound_lt(const TrigPolynomial& f, const Integer& q, long g, long pi);
// q + 1 + 2g sqrt(q) + pi - g.
CertifiedReal weil_ap_bound(const Integer& q, long g, long pi);

struct BoundEntry {
  FormulaId formula;
  std::string poly;  // empty for the closed form
  CertifiedReal value;
  Integer floor;
};

struct BoundReport {
  CurveParams params;
  std::vector<BoundEntry> entries;
  std::size_t best_index = 0;

  const BoundEntry& best() const { return entries.at(best_index); }
};

struct BoundOptions {
  bool use_lt = true;
  bool use_shift = true;
  bool use_ap_explicit = true;
  bool use_ap_closed = true;
  Precision prec;
};

std::vector<TrigPolynomial> default_polynomials();

BoundReport best_bound(const CurveParams& params, const std::vector<TrigPolynomial>& polys,
                       const BoundOptions& options = {});

struct FormulaComparison {
  // psi(q^{-1/2}) against 1/2 and against 1/(sqrt(q)+1).
  std::strong_ordering psi_vs_half;
  std::strong_ordering psi_vs_lt_threshold;

  bool ap_explicit_beats_shift() const { return psi_vs_half == std::strong_ordering::greater; }
  bool lt_beats_shift() const { return psi_vs_lt_threshold == std::strong_ordering::greater; }
};

FormulaComparison formula_comparison(const TrigPolynomial& f, const Integer& q, const Precision& prec = {});

struct LambdaChoice {
  Rat lambda;
  BoundReport report;
};

// Evaluates the constructed polynomial for every lambda of the grid and keeps
// the smallest best bound (first lambda on ties). Lambdas the construction
// rejects are skipped and named in `skipped`.
LambdaChoice optimize_lambda(const CurveParams& params, const std::vector<Rat>& lambdas,
                             std::vector<std::string>* skipped = nullptr, const BoundOptions& options = {});

}  // namespace pointbound
