#pragma once

// Exact values of N_q(g, pi) certified by meeting lower bounds (known
// values) with explicit-formula upper bounds.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pointbound/bounds.hpp"

namespace pointbound {

struct KnownValue {
  Integer q;
  long g = 0;
  long pi = 0;
  Integer value;
  bool extends_pi = false;
  std::string source;
};

using KnownKey = std::tuple<Integer, long, long>;
using KnownTable = std::map<KnownKey, KnownValue>;

// The bundled CSV, or $POINTBOUND_DATA when set.
std::string default_data_path();

// Throws kParseError, kDuplicateKey, kWeilViolation.
KnownTable parse_known(const std::string& text, const std::string& origin = "<string>");
KnownTable load_known(const std::string& path);

struct LowerBound {
  Integer value;
  std::string source;
};

struct UpperBound {
  Integer value;
  FormulaId formula;
  std::string poly;
};

// Throws kNoData.
LowerBound lower_bound(const Integer& q, long g, long pi, const KnownTable& table);
UpperBound upper_bound(const Integer& q, long g, long pi, const std::vector<TrigPolynomial>& polys = default_polynomials(),
                       const BoundOptions& options = {});

struct Certificate {
  Integer q;
  long g = 0;
  long pi = 0;
  std::optional<LowerBound> lower;  // empty when the table has nothing
  UpperBound upper;

  bool exact() const { return lower && lower->value == upper.value; }
  std::string status() const;  // "exact" or "gap(L, U)"
};

// Throws kInvalidArgument if the lower bound exceeds the upper bound.
Certificate certify(const Integer& q, long g, long pi, const KnownTable& table,
                    const std::vector<TrigPolynomial>& polys = default_polynomials(), const BoundOptions& options = {});

struct ReproLine {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct ReproReport {
  std::vector<ReproLine> lines;
  int failures() const;
};

struct PublishedValue {
  long q, g, pi, value;
};
const std::vector<PublishedValue>& published_values();
const std::vector<long>& published_sweep_qs();

ReproReport reproduce_paper(const KnownTable& table, const std::vector<TrigPolynomial>& polys = default_polynomials(),
                            const BoundOptions& options = {});

}  // namespace pointbound
