#include "ifd/errors.hpp"

namespace ifd {

const char *to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::TooFewVertices: return "TooFewVertices";
  case ErrorCode::OutOfRange: return "OutOfRange";
  case ErrorCode::AntiparallelCell: return "AntiparallelCell";
  case ErrorCode::NotOnAxis: return "NotOnAxis";
  case ErrorCode::NegativeRadicand: return "NegativeRadicand";
  case ErrorCode::NonConvergence: return "NonConvergence";
  case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  case ErrorCode::DegenerateBall: return "DegenerateBall";
  case ErrorCode::NoFeasibleGraph: return "NoFeasibleGraph";
  case ErrorCode::Disconnected: return "Disconnected";
  case ErrorCode::NotMonotone: return "NotMonotone";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

BudgetExceeded::BudgetExceeded(const std::string &what_graph,
                               std::uint64_t projected, std::uint64_t budget)
    : Error(ErrorCode::BudgetExceeded,
            what_graph + ": projected " + std::to_string(projected) +
                " vertices exceeds budget " + std::to_string(budget)),
      projected_(projected), budget_(budget) {}

} // namespace ifd
