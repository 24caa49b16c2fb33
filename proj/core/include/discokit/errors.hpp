#pragma once

#include <stdexcept>
#include <string>

namespace disco {

// Thrown when an exhaustive search would exceed a configured cap.  The
// message names the cap so callers (and exit-code mapping in the CLI) can
// distinguish resource exhaustion from a genuine "no" answer.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by construction builders when a precondition on the source
// instance fails (e.g. degenerate parameter combinations).
class BuilderPreconditionError : public std::invalid_argument {
public:
    explicit BuilderPreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace disco
