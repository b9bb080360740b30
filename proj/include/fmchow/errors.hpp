#pragma once

#include <stdexcept>
#include <string>

namespace fmchow {

/// Bad operand: mismatched ground sets, mismatched variable tables, index out of range.
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration bound or Gröbner pair budget was exceeded.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested geometry exists mathematically but has no implementation here
/// (ring-side codimension >= 2, experimental decompositions without the flag).
class UnsupportedFeature : public std::runtime_error {
public:
    explicit UnsupportedFeature(const std::string& what) : std::runtime_error(what) {}
};

/// The graded quotient is not finite dimensional, so no rank vector exists.
class NonArtinianError : public std::runtime_error {
public:
    explicit NonArtinianError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fmchow
