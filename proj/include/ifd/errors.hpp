#ifndef IFD_ERRORS_HPP
#define IFD_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ifd {

enum class ErrorCode {
  TooFewVertices,
  OutOfRange,
  AntiparallelCell,
  NotOnAxis,
  NegativeRadicand,
  NonConvergence,
  BudgetExceeded,
  DegenerateBall,
  NoFeasibleGraph,
  Disconnected,
  NotMonotone,
  InvalidArgument,
  ParseError,
  IoError,
};

const char *to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

// Thrown when a graph or lattice would exceed its vertex budget; carries the
// projected vertex count so callers can report it.
class BudgetExceeded : public Error {
public:
  BudgetExceeded(const std::string &what_graph, std::uint64_t projected,
                 std::uint64_t budget);

  std::uint64_t projected_vertices() const noexcept { return projected_; }
  std::uint64_t budget() const noexcept { return budget_; }

private:
  std::uint64_t projected_;
  std::uint64_t budget_;
};

} // namespace ifd

#endif
