#pragma once

#include <stdexcept>
#include <string>

namespace gkmod {

// Sum of two radicals whose radicands differ: the result leaves the
// one-radical scalar model, so the operation refuses instead of approximating.
struct NonClosedSum : std::domain_error {
    explicit NonClosedSum(const std::string& what) : std::domain_error(what) {}
};

// An exact operation was requested with a floating-point parameter.
struct FloatNotSupported : std::invalid_argument {
    explicit FloatNotSupported(const std::string& what) : std::invalid_argument(what) {}
};

// The requested construction is singular at integers of the opposite parity.
struct AtReducibilityPoint : std::domain_error {
    explicit AtReducibilityPoint(const std::string& what) : std::domain_error(what) {}
};

// A deformation function was evaluated outside its domain, or returned 0
// where an invertible value is required.
struct PsiUndefined : std::domain_error {
    explicit PsiUndefined(const std::string& what) : std::domain_error(what) {}
};

// The weight window is too small for the requested analysis.
struct WindowTooSmall : std::invalid_argument {
    explicit WindowTooSmall(const std::string& what) : std::invalid_argument(what) {}
};

// Invariant Hermitian forms exist only for real or purely imaginary parameters.
struct NotHermitianLocus : std::domain_error {
    explicit NotHermitianLocus(const std::string& what) : std::domain_error(what) {}
};

// A map that must be inverted is singular at parameter 0.
struct SingularAtZero : std::domain_error {
    explicit SingularAtZero(const std::string& what) : std::domain_error(what) {}
};

} // namespace gkmod
