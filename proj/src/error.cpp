#include "pointbound/error.hpp"

namespace pointbound {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kNonTermination: return "NonTermination";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kInvalidLambda: return "InvalidLambda";
    case Errc::kNoRoot: return "NoRoot";
    case Errc::kPositivityViolation: return "PositivityViolation";
    case Errc::kUnsupportedR: return "UnsupportedR";
    case Errc::kZeroPsi: return "ZeroPsi";
    case Errc::kNotPrimePower: return "NotPrimePower";
    case Errc::kNotSquarefree: return "NotSquarefree";
    case Errc::kWrongCharacteristic: return "WrongCharacteristic";
    case Errc::kEvenOrderPole: return "EvenOrderPole";
    case Errc::kNotCoprime: return "NotCoprime";
    case Errc::kSingularModel: return "SingularModel";
    case Errc::kFieldTooLarge: return "FieldTooLarge";
    case Errc::kInconsistentCounts: return "InconsistentCounts";
    case Errc::kNotTotallyReal: return "NotTotallyReal";
    case Errc::kWeilViolation: return "WeilViolation";
    case Errc::kNonIntegral: return "NonIntegral";
    case Errc::kNegativeB2: return "NegativeB2";
    case Errc::kOutOfTable: return "OutOfTable";
    case Errc::kParseError: return "ParseError";
    case Errc::kDuplicateKey: return "DuplicateKey";
    case Errc::kNoData: return "NoData";
  }
  return "Unknown";
}

}  // namespace pointbound
