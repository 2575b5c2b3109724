#pragma once

#include <stdexcept>
#include <string>

namespace dictatorlab {

/// Domain or invariant violation (bad coordinates, mismatched shapes,
/// non-independent input, malformed schema). CLI maps this to exit code 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem failure (missing file, unwritable path). CLI exit code 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dictatorlab
