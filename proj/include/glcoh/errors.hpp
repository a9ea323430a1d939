#pragma once

#include <stdexcept>
#include <string>

namespace glcoh {

// Thrown when a request exceeds the enumeration/elimination size limits.
// The CLI maps this to exit code 3.
struct ScaleGuardError : std::runtime_error {
    explicit ScaleGuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace glcoh
