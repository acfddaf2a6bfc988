#pragma once

#include <stdexcept>
#include <string>

namespace hodge1 {

/// Malformed or inconsistent caller data (dimension mismatch, non-integral
/// input where integers are required, failed validation).
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that asks for something the library does not model
/// (missing annotations, non-abelian torus data for a realization, ...).
class UnsupportedInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when data that passed validation still contradicts itself,
/// e.g. a Hodge class with no F-lift.
class InconsistentData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hodge1
