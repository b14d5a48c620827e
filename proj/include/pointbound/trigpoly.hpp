#pragma once

// Even cosine polynomials f(theta) = 1 + 2 * sum_{n=1}^{r-1} c_n cos(n theta)
// and Oesterle's construction of doubly positive ones.

#include <optional>
#include <string>
#include <vector>

#include "pointbound/numerics.hpp"

namespace pointbound {

struct Provenance {
  enum class Kind { kPreset, kConstructed, kCustom };
  Kind kind = Kind::kCustom;
  Integer q;     // constructed only
  Rat lambda;    // constructed only

  std::string to_string(int r) const;
};

class TrigPolynomial {
 public:
  // Arbitrary coefficients c_1..c_{r-1}; no positivity is assumed.
  TrigPolynomial(std::vector<CertifiedReal> coeffs, Provenance provenance = {});
  // Exact coefficients, as used by the presets.
  TrigPolynomial(const std::vector<QuadNum>& coeffs, Provenance provenance);

  int r() const { return static_cast<int>(coeffs_.size()) + 1; }
  const std::vector<CertifiedReal>& coeffs() const { return coeffs_; }
  // c_n for n >= 1; zero beyond r - 1.
  CertifiedReal c(int n) const;
  const std::optional<std::vector<QuadNum>>& exact_coeffs() const { return exact_; }
  const Provenance& provenance() const { return provenance_; }
  std::string label() const { return provenance_.to_string(r()); }

 private:
  std::vector<CertifiedReal> coeffs_;
  std::optional<std::vector<QuadNum>> exact_;
  Provenance provenance_;
};

// Largest r accepted by the construction.
inline constexpr int kMaxR = 12;

struct RU {
  int r;
  CertifiedReal u;
};

// r with sqrt(q)^r < lambda <= sqrt(q)^(r+1), and the matching u in [0, 1).
RU derive_r_u(const Integer& q, const Rat& lambda, int max_r = kMaxR);

// The root of cos((r+1)phi/2) + u cos((r-1)phi/2) in [pi/(r+1), pi/r).
CertifiedReal solve_phi0(int r, const CertifiedReal& u, const Precision& prec = {});

TrigPolynomial oesterle_coeffs(int r, const CertifiedReal& phi0, const Precision& prec = {});

// derive_r_u -> solve_phi0 -> oesterle_coeffs, tagged with (q, lambda).
TrigPolynomial construct_polynomial(const Integer& q, const Rat& lambda, const Precision& prec = {});

TrigPolynomial preset(int r);

struct PositivityReport {
  bool coefficients_ok = false;
  bool endpoints_ok = false;
  bool grid_ok = false;
  double grid_min = 0;
  double grid_argmin = 0;
  std::optional<bool> rigorous_ok;
  std::string failure;

  bool pass() const { return coefficients_ok && endpoints_ok && grid_ok && rigorous_ok.value_or(true); }
};

PositivityReport check_doubly_positive(const TrigPolynomial& f, int grid_size = 10000,
                                       const Rat& tol = Rat(1, 1000000000000), bool rigorous = false,
                                       const Precision& prec = {});

CertifiedReal psi_eval(const TrigPolynomial& f, const CertifiedReal& t);
CertifiedReal psi_d_eval(const TrigPolynomial& f, int d, const CertifiedReal& t);

// sqrt(q)^k, exact.
CertifiedReal sqrt_q_power(const Integer& q, int k);

}  // namespace pointbound
