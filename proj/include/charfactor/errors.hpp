#pragma once

#include <stdexcept>
#include <string>

namespace charfactor {

/// Raised when an exact enumeration would exceed the configured size bound.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An identity that the theory guarantees was observed to fail.
/// Seeing one of these means an arithmetic bug, never bad input.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The alternant-ratio method needs pairwise distinct, nonzero coordinates.
class NonRegularPoint : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr int kDefaultEnumerationBound = 9;

}  // namespace charfactor
