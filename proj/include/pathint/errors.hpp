#pragma once

#include <stdexcept>

namespace pathint {

/// File/stream failures; mapped to exit code 3 by the command-line tool.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-finite values produced by a computation; exit code 4.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pathint
