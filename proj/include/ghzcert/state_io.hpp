#pragma once

#include "ghzcert/operators.hpp"

#include <stdexcept>
#include <string>

namespace ghzcert {

/// Raised for unreadable, malformed or invariant-violating state files; the
/// message carries "path:line:" where a specific line is at fault.
struct StateFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Plain-text state file:
///   line 1:  GHZSTATE 1
///   line 2:  dim (2, 4 or 8)
///   then dim^2 lines "re im" in row-major order, full-precision decimal.
/// Lines whose first non-space character is '#' are comments and may appear
/// anywhere.
DensityMatrix read_state_file(const std::string& path);

/// Writes with 17 significant digits, so a read back is bit-identical.
void write_state_file(const std::string& path, const DensityMatrix& state,
                      const std::string& comment = "");

} // namespace ghzcert
