#pragma once

// Point counts, power sums of the real Weil numbers x_j = w_j + conj(w_j),
// L-polynomials and the explicit-formula identity.

#include <optional>
#include <vector>

#include "pointbound/numerics.hpp"
#include "pointbound/ratpoly.hpp"
#include "pointbound/trigpoly.hpp"

namespace pointbound {

struct WeilEntry {
  std::optional<QuadNum> exact;
  CertifiedReal value;
  std::optional<RatPoly> minpoly;  // set for roots of irreducible factors of degree >= 3
};

class WeilTuple {
 public:
  WeilTuple(Integer q, std::vector<WeilEntry> entries);
  static WeilTuple from_exact(const Integer& q, const std::vector<QuadNum>& xs);

  const Integer& q() const { return q_; }
  int g() const { return static_cast<int>(entries_.size()); }
  const std::vector<WeilEntry>& entries() const { return entries_; }

  // prod_j (x - x_j). Throws kNonIntegral when the entries are not closed
  // under conjugation, so the product is not rational.
  RatPoly char_poly() const;
  // e_1 .. e_g of the x_j.
  std::vector<Rat> elementary() const;

  // Multiset equality.
  friend bool operator==(const WeilTuple& a, const WeilTuple& b) {
    return a.q_ == b.q_ && a.char_poly() == b.char_poly();
  }

  std::string to_string(int digits = 9) const;

 private:
  Integer q_;
  std::vector<WeilEntry> entries_;
};

struct LPolynomial {
  Integer q;
  int g = 0;
  std::vector<Integer> a;  // a_0 .. a_{2g}

  bool functional_equation_holds() const;
  std::string to_string() const;
};

// Power sums p_n = sum x_j^n for n = 1..g from #X(F_{q^n}). Counts beyond g
// are checked against the ones predicted by the first g (kInconsistentCounts).
std::vector<Integer> power_sums_from_counts(const Integer& q, int g, const std::vector<Integer>& counts);

std::vector<Rat> newton_to_elementary(const std::vector<Rat>& p);
// p_1 .. p_n from e_1 .. e_g.
std::vector<Rat> elementary_to_power_sums(const std::vector<Rat>& e, int n);

// S_n = sum_j s_n(x_j) = q^n + 1 - #X(F_{q^n}) from the power sums p_0 .. p_n.
std::vector<Rat> frobenius_sums(const Integer& q, const std::vector<Rat>& p_with_p0, int n);

WeilTuple solve_weil_tuple(const std::vector<Rat>& e, const Integer& q, const Precision& prec = {});

Integer counts_from_roots(const WeilTuple& x, int n);

LPolynomial l_polynomial(const WeilTuple& x);

// LHS - RHS of sum_j f(theta_j) + sum_d d B_d psi_d(q^{-1/2}) = g + psi(q^{-1/2}) + psi(q^{1/2}).
// B holds B_1 .. B_k with k >= r - 1.
CertifiedReal verify_serre_identity(const TrigPolynomial& f, const WeilTuple& x, const std::vector<Integer>& B);

// |x_j| <= 2 sqrt(q) for every entry.
bool weil_admissible(const WeilTuple& x, const Precision& prec = {});

}  // namespace pointbound
