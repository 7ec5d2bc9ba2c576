#pragma once

#include <stdexcept>
#include <string>

namespace frobwitt {

/// Violation of a structural invariant (bad module matrix, mismatched
/// lengths, a map that fails its commutation check, ...).  CLI exit code 2.
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

/// A computation hit a configured resource bound (degree window, tower
/// depth).  Not a mathematical failure.  CLI exit code 3.
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace frobwitt
