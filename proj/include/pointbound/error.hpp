#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pointbound {

enum class Errc {
  kInvalidArgument,
  kNonTermination,
  kDivisionByZero,
  kInvalidLambda,
  kNoRoot,
  kPositivityViolation,
  kUnsupportedR,
  kZeroPsi,
  kNotPrimePower,
  kNotSquarefree,
  kWrongCharacteristic,
  kEvenOrderPole,
  kNotCoprime,
  kSingularModel,
  kFieldTooLarge,
  kInconsistentCounts,
  kNotTotallyReal,
  kWeilViolation,
  kNonIntegral,
  kNegativeB2,
  kOutOfTable,
  kParseError,
  kDuplicateKey,
  kNoData,
};

std::string_view errc_name(Errc code);

/// Every failure raised by the library. `module()` names the component that
/// detected the violated precondition so diagnostics stay one line.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string module, const std::string& message)
      : std::runtime_error(message), code_(code), module_(std::move(module)) {}

  Errc code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

 private:
  Errc code_;
  std::string module_;
};

/// Raised by certified_floor when refinement hits the precision cap while the
/// enclosure still straddles an integer; both candidate floors are reported.
class FloorAmbiguous : public Error {
 public:
  FloorAmbiguous(mpz_class lower, mpz_class upper, const std::string& message)
      : Error(Errc::kNonTermination, "numerics", message),
        lower_(std::move(lower)),
        upper_(std::move(upper)) {}

  const mpz_class& lower_candidate() const { return lower_; }
  const mpz_class& upper_candidate() const { return upper_; }

 private:
  mpz_class lower_;
  mpz_class upper_;
};

}  // namespace pointbound
