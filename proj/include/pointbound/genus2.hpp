#pragma once

// Genus 2 curves with N_q(2) points: Smyth's defect table, the pairs that can
// occur, and the range of arithmetic genus pi with N_q(2, pi) = N_q(2) + pi - 2.

#include <optional>
#include <string>
#include <vector>

#include "pointbound/numerics.hpp"

namespace pointbound {

struct QClass {
  enum class Kind { kSquare, kNonSpecial, kSpecialGoldenAbove, kSpecialGoldenBelow };
  enum class Reason { kPDividesM, kXSquaredPlus1, kXSquaredPlusXPlus1, kXSquaredPlusXPlus2 };

  Integer q;
  long p = 0;
  Integer m;  // floor(2 sqrt q)
  Kind kind = Kind::kNonSpecial;
  std::optional<Reason> special_reason;
};

std::string kind_name(QClass::Kind kind);
std::string reason_name(QClass::Reason reason);

// Throws kNotPrimePower.
QClass classify_q(const Integer& q);

Integer nq2(const Integer& q);
int defect_of_optimal(const Integer& q);

// sign * (m + offset1, m + offset2).
struct DefectPair {
  int defect = 0;
  QuadNum offset1, offset2;
  int sign = -1;

  QuadNum x1(const Integer& m) const;
  QuadNum x2(const Integer& m) const;
  std::string to_string() const;  // in terms of m
};

// Throws kOutOfTable for defect outside 0..3.
std::vector<DefectPair> smyth_pairs(int defect);

bool weil_admissible(const DefectPair& pair, const Integer& q);
// Both entries rational with difference +-1, so {x1} | {x2} is a partition
// with unit cross-difference.
bool jacobian_excluded(const DefectPair& pair);
// Throws kNegativeB2 (or kNonIntegral) when the pair cannot occur over F_q.
Integer b2_from_pair(const Integer& q, const DefectPair& pair);

struct PairAnalysis {
  DefectPair pair;
  bool admissible = false;
  bool excluded = false;
  std::optional<Integer> b2;
  std::string note;
};

// The minus-sign pairs of the optimal defect for q with their status.
std::vector<PairAnalysis> analyze_pairs(const Integer& q);

struct PiRange {
  QClass cls;
  Integer n_q_2;
  int defect = 0;
  Integer b2_max;
  Integer pi_max;
  DefectPair witness;
};

PiRange pi_range(const Integer& q);

// pi_max from the closed forms of the case table, without any pair.
Integer closed_form_pi_max(const QClass& cls);

struct SweepLine {
  Integer q;
  Integer pi_max;
  Integer closed_form;
  bool defect_consistent = false;
  bool ok() const { return defect_consistent && pi_max == closed_form; }
};

// Every prime power 2 <= q <= max_q.
std::vector<SweepLine> genus2_sweep(long max_q);

}  // namespace pointbound
