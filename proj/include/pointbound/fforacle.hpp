#pragma once

// Brute-force point counting over small finite fields.
//
// F_{p^k} elements are integers 0 .. p^k - 1 whose base-p digits are the
// coordinates on the basis 1, t, ..., t^{k-1} of F_p[t]/(m). The modulus m is
// the lexicographically least primitive polynomial of degree k, so t generates
// the multiplicative group and multiplication goes through log/exp tables.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pointbound/numerics.hpp"

namespace pointbound {

class FiniteField {
 public:
  using Elem = std::uint32_t;
  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 24;

  // Canonical field of order p^k, shared and built once.
  static std::shared_ptr<const FiniteField> get(long p, int k);
  // Field of order q (a prime power).
  static std::shared_ptr<const FiniteField> of_order(const Integer& q);

  // Explicit modulus, low coefficient first, monic of degree k. Throws
  // kInvalidArgument unless t has multiplicative order p^k - 1 modulo it.
  FiniteField(long p, std::vector<long> modulus);

  long p() const { return p_; }
  int degree() const { return k_; }
  std::uint32_t size() const { return size_; }
  const std::vector<long>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= size_ - 1) s -= size_ - 1;
    return exp_[s];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem from_int(long c) const;  // image of an integer in the prime field
  Elem from_coords(const std::vector<long>& coords) const;
  std::vector<long> to_coords(Elem a) const;

  Elem generator() const { return exp_[size_ > 2 ? 1 : 0]; }
  std::uint32_t log(Elem a) const { return log_.at(a); }
  // Quadratic character with chi(0) = 0 (odd characteristic).
  int chi(Elem a) const;
  // Absolute trace to F_p, as sum of a^(p^i).
  long trace(Elem a) const;

  std::string to_string(Elem a) const;

 private:
  long p_;
  int k_;
  std::uint32_t size_;
  std::vector<long> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

// Polynomials over a field: coefficient vectors, constant term first.
using FieldPoly = std::vector<FiniteField::Elem>;

FiniteField::Elem poly_eval(const FiniteField& F, const FieldPoly& f, FiniteField::Elem x);
int poly_degree(const FieldPoly& f);
FieldPoly poly_gcd(const FiniteField& F, FieldPoly a, FieldPoly b);
FieldPoly poly_derivative(const FiniteField& F, const FieldPoly& f);

// Maps F_q (= F_{p^e}) into F_{q^n} by sending t to a root of F_q's modulus;
// the smallest root in integer encoding is used.
class Embedding {
 public:
  Embedding(const FiniteField& small, const FiniteField& big);
  FiniteField::Elem operator()(FiniteField::Elem a) const { return table_[a]; }
  FieldPoly map(const FieldPoly& f) const;

 private:
  std::vector<FiniteField::Elem> table_;
};

struct PlaneTerm {
  FiniteField::Elem coeff;
  int i, j, k;  // exponents of x, y, z
};

struct CurveModel {
  enum class Kind { kHyperelliptic, kArtinSchreier, kPlane };
  Kind kind;
  Integer q;
  FieldPoly f;        // hyperelliptic: y^2 = f(x)
  FieldPoly num;      // Artin-Schreier: y^2 + y = num(x) / den(x)
  FieldPoly den;
  std::vector<PlaneTerm> terms;  // plane: sum of terms = 0
};

// Model lines read "kind; q; coefficients" with kind one of hyp, as, plane.
// Coefficients are F_q elements written as ':'-joined F_p coordinates
// (missing coordinates are 0, negative integers are reduced mod p):
//   hyp; 9; -1,0,1,0,1,0,1          f coefficients, constant term first
//   as; 4; 0,1 | 1,1,0,1            numerator | denominator
//   plane; 2; 1@3.1.0, 1@2.2.0      coeff@i.j.k for coeff x^i y^j z^k
CurveModel parse_curve_model(const std::string& line);
std::string kind_name(CurveModel::Kind kind);

std::int64_t count_hyperelliptic(const FiniteField& Fq, const FieldPoly& f, int n);
std::int64_t count_artin_schreier(const FiniteField& Fq, const FieldPoly& num, const FieldPoly& den, int n);
std::int64_t count_plane(const FiniteField& Fq, const std::vector<PlaneTerm>& terms, int n);
std::int64_t count_points(const CurveModel& model, int n);

struct CurveCounts {
  enum class Source { kOracle, kRoots, kData };
  Integer q;
  std::vector<Integer> counts;  // #X(F_{q^n}) for n = 1 .. N
  Source source = Source::kOracle;
};

CurveCounts count_sequence(const CurveModel& model, int max_n);

// B_d from sum_{e | d} e B_e = #X(F_{q^d}).
Integer degree_d_points(const CurveCounts& counts, int d);

}  // namespace pointbound
