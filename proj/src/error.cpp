#include "actionlab/error.hpp"

namespace actionlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::IllDefined: return "IllDefined";
    case ErrorKind::NotElementaryAbelian: return "NotElementaryAbelian";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotPGroup: return "NotPGroup";
    case ErrorKind::IndexTooLarge: return "IndexTooLarge";
    case ErrorKind::ProfileViolation: return "ProfileViolation";
    case ErrorKind::UnsupportedRank: return "UnsupportedRank";
    case ErrorKind::DegenerateRotation: return "DegenerateRotation";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ClosureLimitExceeded: return "ClosureLimitExceeded";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::OracleCapExceeded: return "OracleCapExceeded";
    case ErrorKind::NoExponentFound: return "NoExponentFound";
  }
  return "Unknown";
}

bool is_cap_error(ErrorKind kind) {
  return kind == ErrorKind::ClosureLimitExceeded || kind == ErrorKind::OrderCapExceeded ||
         kind == ErrorKind::OracleCapExceeded;
}

}  // namespace actionlab
