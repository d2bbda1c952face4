#pragma once

/**
 * @file psi.hpp
 * @brief Deformation functions psi_m(nu) attached to opposite-parity midpoints.
 */

#include <cmath>
#include <complex>
#include <functional>
#include <string>

#include "gkmod/errors.hpp"
#include "gkmod/nu.hpp"
#include "gkmod/radical.hpp"

namespace gkmod {

// A deformation function, evaluated per midpoint m. Inside its declared
// domain the value must be invertible (never 0); callers treat a zero or an
// out-of-domain evaluation as PsiUndefined.
struct PsiHandle {
    std::string description;
    std::function<bool(int, std::complex<double>)> defined;
    std::function<std::complex<double>(int, std::complex<double>)> eval;
    // Exact evaluation for exact parameters; null when the function has no
    // exact form.
    std::function<RadicalScalar(int, const NuParameter&)> exact;
    // Accurate float evaluation from an exact parameter. Limit probes form
    // differences like nu - m exactly before rounding, which keeps samples
    // meaningful at offsets far below the double spacing of nu itself.
    std::function<std::complex<double>(int, const NuParameter&)> eval_exact_arg;
};

inline std::complex<double> psi_eval_at(const PsiHandle& psi, int m, const NuParameter& nu) {
    if (psi.eval_exact_arg) return psi.eval_exact_arg(m, nu);
    return psi.eval(m, to_complex(nu));
}

// psi_m(nu) = |nu+m|^{1/2} / |nu-m|^{1/2}: the deformation whose module has
// entries continuous across the reducible integers. Undefined at nu = m
// (pole) and nu = -m (zero).
inline PsiHandle canonical_psi() {
    PsiHandle h;
    h.description = "canonical |nu+m|^{1/2}/|nu-m|^{1/2}";
    h.defined = [](int m, std::complex<double> z) {
        return z != std::complex<double>(m, 0.0) && z != std::complex<double>(-m, 0.0);
    };
    h.eval = [](int m, std::complex<double> z) {
        const double a = std::abs(z + static_cast<double>(m));
        const double b = std::abs(z - static_cast<double>(m));
        return std::complex<double>(std::sqrt(a) / std::sqrt(b), 0.0);
    };
    h.exact = [](int m, const NuParameter& nu) -> RadicalScalar {
        if (const auto* r = std::get_if<ExactReal>(&nu)) {
            const Rat plus = rat_abs(r->value + m);
            const Rat minus = rat_abs(r->value - m);
            if (plus == 0 || minus == 0)
                throw PsiUndefined("canonical psi undefined at nu = " + format_rat(r->value) +
                                   ", m = " + std::to_string(m));
            return RadicalScalar::sqrt_of(plus) / RadicalScalar::sqrt_of(minus);
        }
        if (const auto* im = std::get_if<ExactImaginary>(&nu)) {
            // |it + m| == |it - m|, so the quotient is exactly 1.
            if (im->t == 0 && m == 0) throw PsiUndefined("canonical psi undefined at nu = 0, m = 0");
            return RadicalScalar(1);
        }
        throw FloatNotSupported("exact psi evaluation requires an exact parameter");
    };
    h.eval_exact_arg = [h_eval = h.eval](int m, const NuParameter& nu) -> std::complex<double> {
        if (const auto* r = std::get_if<ExactReal>(&nu)) {
            const double plus = to_double(rat_abs(r->value + m));
            const double minus = to_double(rat_abs(r->value - m));
            return {std::sqrt(plus) / std::sqrt(minus), 0.0};
        }
        if (std::holds_alternative<ExactImaginary>(nu)) return {1.0, 0.0};
        return h_eval(m, to_complex(nu));
    };
    return h;
}

// psi = 1: reproduces the undeformed family.
inline PsiHandle trivial_psi() {
    PsiHandle h;
    h.description = "constant 1";
    h.defined = [](int, std::complex<double>) { return true; };
    h.eval = [](int, std::complex<double>) { return std::complex<double>(1.0, 0.0); };
    h.exact = [](int, const NuParameter&) { return RadicalScalar(1); };
    h.eval_exact_arg = [](int, const NuParameter&) { return std::complex<double>(1.0, 0.0); };
    return h;
}

} // namespace gkmod
