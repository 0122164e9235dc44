#pragma once

#include <stdexcept>
#include <string>

namespace orthoharm {

// Malformed input: shapes, Gram matrices, frames, config values.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A point left the chosen component, or hit the boundary (j = 0).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation too close to a singular locus. distance is the quantity that
// went below its threshold (|q(lambda_{Z-})|, |(lambda, psi(Z))|, ...).
class SingularityError : public std::runtime_error {
public:
    SingularityError(const std::string& what, double distance)
        : std::runtime_error(what), distance_(distance) {}
    double distance() const noexcept { return distance_; }

private:
    double distance_;
};

// Series, quadrature or finite-difference failures.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace orthoharm
