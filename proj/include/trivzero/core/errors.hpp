#pragma once
#include <stdexcept>
#include <string>

namespace tz {

enum class ErrorKind {
  Usage,
  PreconditionViolated,
  NonFundamentalDiscriminant,
  RamifiedPrime,
  BoundTooSmall,
  ZeroToPrecision,
  NonUnit,
  SingularSystem,
  InconsistentValues,
  UnsupportedCharacterOrder,
  PoleAtOne,
  DecompositionFailure,
  TruncationInsufficient,
  InconclusiveOrder,
  UnexpectedVanishing,
  IncompleteCuspData,
  NotSplit,
  NonQuadratic,
  SearchExhausted,
  InconclusivePrecision,
  RankUnstable,
  SumVanishes,
  NotApplicable,
  CorruptCacheEntry,
};

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NonFundamentalDiscriminant: return "NonFundamentalDiscriminant";
    case ErrorKind::RamifiedPrime: return "RamifiedPrime";
    case ErrorKind::BoundTooSmall: return "BoundTooSmall";
    case ErrorKind::ZeroToPrecision: return "ZeroToPrecision";
    case ErrorKind::NonUnit: return "NonUnit";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::InconsistentValues: return "InconsistentValues";
    case ErrorKind::UnsupportedCharacterOrder: return "UnsupportedCharacterOrder";
    case ErrorKind::PoleAtOne: return "PoleAtOne";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorKind::InconclusiveOrder: return "InconclusiveOrder";
    case ErrorKind::UnexpectedVanishing: return "UnexpectedVanishing";
    case ErrorKind::IncompleteCuspData: return "IncompleteCuspData";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::NonQuadratic: return "NonQuadratic";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::InconclusivePrecision: return "InconclusivePrecision";
    case ErrorKind::RankUnstable: return "RankUnstable";
    case ErrorKind::SumVanishes: return "SumVanishes";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::CorruptCacheEntry: return "CorruptCacheEntry";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind k, const std::string& what)
      : std::runtime_error(std::string(kind_name(k)) + ": " + what), kind_(k) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// 1 usage, 2 failed precondition, 3 answer not determinable at the working precision
inline int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Usage: return 1;
    case ErrorKind::ZeroToPrecision:
    case ErrorKind::TruncationInsufficient:
    case ErrorKind::InconclusiveOrder:
    case ErrorKind::InconclusivePrecision:
    case ErrorKind::RankUnstable:
      return 3;
    default: return 2;
  }
}

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool cond, ErrorKind k, const std::string& msg) {
  if (!cond) fail(k, msg);
}

}  // namespace tz
