#pragma once

#include <stdexcept>
#include <string>

namespace afetest {

struct SingularDesign : std::runtime_error {
  explicit SingularDesign(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct InvalidVariance : std::invalid_argument {
  explicit InvalidVariance(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidDirection : std::invalid_argument {
  explicit InvalidDirection(const std::string& what) : std::invalid_argument(what) {}
};

// A recorded AIC order relation does not hold at the very point it was
// recorded for; indicates an upstream bug, not a data problem.
struct TraceMismatch : std::logic_error {
  explicit TraceMismatch(const std::string& what) : std::logic_error(what) {}
};

struct ZeroTruncationMass : std::runtime_error {
  explicit ZeroTruncationMass(const std::string& what) : std::runtime_error(what) {}
};

struct IngestError : std::runtime_error {
  IngestError(const std::string& what, long row, long column)
      : std::runtime_error(what), row(row), column(column) {}
  long row;     // 1-based data row (0 = header)
  long column;  // 1-based column
};

}  // namespace afetest
