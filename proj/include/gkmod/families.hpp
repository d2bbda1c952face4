#pragma once

/**
 * @file families.hpp
 * @brief The three operator families on a weight window, plus psi-deformed
 *        custom families.
 *
 * All families share the diagonal H (Hv_j = j v_j) and band structure: one
 * raising coefficient at each opposite-parity midpoint m (entry at m-1,
 * target m+1) and one lowering coefficient (entry at m+1, target m-1).
 */

#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "gkmod/errors.hpp"
#include "gkmod/nu.hpp"
#include "gkmod/psi.hpp"
#include "gkmod/weight_operator.hpp"
#include "gkmod/window.hpp"

namespace gkmod {

enum class FamilyKind { Principal, Deformed, Alternate, PsiDeformed };

inline std::string family_kind_token(FamilyKind k) {
    switch (k) {
        case FamilyKind::Principal: return "pi";
        case FamilyKind::Deformed: return "Pi";
        case FamilyKind::Alternate: return "piPrime";
        case FamilyKind::PsiDeformed: return "psiCustom";
    }
    throw std::invalid_argument("unknown family kind");
}

inline FamilyKind parse_family_kind(const std::string& s) {
    if (s == "pi") return FamilyKind::Principal;
    if (s == "Pi") return FamilyKind::Deformed;
    if (s == "piPrime") return FamilyKind::Alternate;
    if (s == "psiCustom") return FamilyKind::PsiDeformed;
    throw std::invalid_argument("unknown family kind: '" + s + "'");
}

struct FamilySpec {
    FamilyKind kind = FamilyKind::Principal;
    int epsilon = 1;
    NuParameter nu = nu_real(0L);
    int window = 30;
    std::optional<PsiHandle> psi; // PsiDeformed only

    WeightWindow make_window() const { return WeightWindow(Parity(epsilon), window); }
};

// f_m(nu) = |nu^2 - m^2|^{1/2} (nu+m)/|nu+m|, extended by 0 at nu = -m.
// On the real axis this is |nu^2-m^2|^{1/2} sgn(nu+m); on the imaginary axis
// the modulus and phase collapse to the Gaussian rational m + it.
inline RadicalScalar f_coefficient(int m, const NuParameter& nu) {
    if (const auto* r = std::get_if<ExactReal>(&nu)) {
        const Rat& v = r->value;
        if (v + m == 0) return RadicalScalar();
        const int sgn = rat_sign(v + m);
        return RadicalScalar(CRat(sgn), rat_abs(v * v - Rat(m) * Rat(m)));
    }
    if (const auto* im = std::get_if<ExactImaginary>(&nu)) {
        return RadicalScalar(CRat(Rat(m), im->t));
    }
    throw FloatNotSupported("f_coefficient requires an exact parameter");
}

inline std::complex<double> f_coefficient_float(int m, std::complex<double> z) {
    const std::complex<double> phase_num = z + static_cast<double>(m);
    if (phase_num == 0.0) return {0.0, 0.0};
    const double mod = std::abs(z * z - std::complex<double>(m * m, 0.0));
    return std::sqrt(mod) * phase_num / std::abs(phase_num);
}

namespace detail {

template <class S, class EFn, class FFn, class HFn>
OperatorTriple<S> assemble(const WeightWindow& w, HFn h, EFn e, FFn f) {
    OperatorTriple<S> t{WeightOperator<S>(w, 0), WeightOperator<S>(w, +2),
                        WeightOperator<S>(w, -2)};
    for (int j : w.weights()) t.H.set(j, h(j));
    for (int m : w.midpoints()) {
        t.E.set(m - 1, e(m));
        t.F.set(m + 1, f(m));
    }
    return t;
}

inline RadicalScalar half_of(const CRat& z) { return RadicalScalar(z * CRat(Rat(1) / Rat(2))); }

inline const PsiHandle& require_psi(const FamilySpec& spec) {
    if (spec.kind != FamilyKind::PsiDeformed)
        throw std::invalid_argument("psi handle only applies to psiCustom families");
    if (!spec.psi) throw std::invalid_argument("psiCustom family needs a psi handle");
    return *spec.psi;
}

inline RadicalScalar exact_psi_value(const PsiHandle& psi, int m, const NuParameter& nu) {
    if (!psi.defined || !psi.defined(m, to_complex(nu)))
        throw PsiUndefined("psi (" + psi.description + ") undefined at m = " + std::to_string(m) +
                           ", nu = " + format_nu(nu));
    if (!psi.exact)
        throw FloatNotSupported("psi (" + psi.description + ") has no exact evaluation");
    const RadicalScalar v = psi.exact(m, nu);
    if (v.is_zero())
        throw PsiUndefined("psi (" + psi.description + ") vanishes at m = " + std::to_string(m) +
                           ", nu = " + format_nu(nu) + "; deformed entries need 1/psi");
    return v;
}

} // namespace detail

// pi(eps,nu): E v_{m-1} = (1/2)(nu+m) v_{m+1}, F v_{m+1} = (1/2)(nu-m) v_{m-1}.
inline ExactTriple build_pi(const FamilySpec& spec) {
    const WeightWindow w = spec.make_window();
    const CRat nu = as_crat(spec.nu);
    return detail::assemble<RadicalScalar>(
        w, [](int j) { return RadicalScalar(CRat(j)); },
        [&](int m) { return detail::half_of(nu + CRat(m)); },
        [&](int m) { return detail::half_of(nu - CRat(m)); });
}

// Pi(eps,nu): the deformed family with entries (1/2) f_{+-m}(nu).
inline ExactTriple build_Pi(const FamilySpec& spec) {
    const WeightWindow w = spec.make_window();
    const Rat half = Rat(1) / Rat(2);
    return detail::assemble<RadicalScalar>(
        w, [](int j) { return RadicalScalar(CRat(j)); },
        [&](int m) { return RadicalScalar(half) * f_coefficient(m, spec.nu); },
        [&](int m) { return RadicalScalar(half) * f_coefficient(-m, spec.nu); });
}

// pi'(eps,nu): E v_{m-1} = (1/2)(nu-|m|) v_{m+1}, F v_{m+1} = (1/2)(nu+|m|) v_{m-1}.
inline ExactTriple build_pi_prime(const FamilySpec& spec) {
    const WeightWindow w = spec.make_window();
    const CRat nu = as_crat(spec.nu);
    return detail::assemble<RadicalScalar>(
        w, [](int j) { return RadicalScalar(CRat(j)); },
        [&](int m) { return detail::half_of(nu - CRat(std::abs(m))); },
        [&](int m) { return detail::half_of(nu + CRat(std::abs(m))); });
}

// psi-deformed family: E v_{m-1} = (1/2)(nu+m)/psi_m(nu) v_{m+1},
// F v_{m+1} = (1/2)(nu-m) psi_m(nu) v_{m-1}. The product of the two entries
// is psi-independent, which is what keeps the bracket relations exact.
inline ExactTriple build_psi_custom(const FamilySpec& spec) {
    const PsiHandle& psi = detail::require_psi(spec);
    const WeightWindow w = spec.make_window();
    const CRat nu = as_crat(spec.nu);
    return detail::assemble<RadicalScalar>(
        w, [](int j) { return RadicalScalar(CRat(j)); },
        [&](int m) {
            return detail::half_of(nu + CRat(m)) / detail::exact_psi_value(psi, m, spec.nu);
        },
        [&](int m) {
            return detail::half_of(nu - CRat(m)) * detail::exact_psi_value(psi, m, spec.nu);
        });
}

inline ExactTriple build_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Principal: return build_pi(spec);
        case FamilyKind::Deformed: return build_Pi(spec);
        case FamilyKind::Alternate: return build_pi_prime(spec);
        case FamilyKind::PsiDeformed: return build_psi_custom(spec);
    }
    throw std::invalid_argument("unknown family kind");
}

// Floating-point construction; works for any parameter, including complex
// values off the exact locus.
inline FloatTriple build_family_float(const FamilySpec& spec) {
    const WeightWindow w = spec.make_window();
    const std::complex<double> nu = to_complex(spec.nu);
    const auto h = [](int j) { return std::complex<double>(j, 0.0); };
    switch (spec.kind) {
        case FamilyKind::Principal:
            return detail::assemble<std::complex<double>>(
                w, h, [&](int m) { return 0.5 * (nu + static_cast<double>(m)); },
                [&](int m) { return 0.5 * (nu - static_cast<double>(m)); });
        case FamilyKind::Deformed:
            return detail::assemble<std::complex<double>>(
                w, h, [&](int m) { return 0.5 * f_coefficient_float(m, nu); },
                [&](int m) { return 0.5 * f_coefficient_float(-m, nu); });
        case FamilyKind::Alternate:
            return detail::assemble<std::complex<double>>(
                w, h, [&](int m) { return 0.5 * (nu - static_cast<double>(std::abs(m))); },
                [&](int m) { return 0.5 * (nu + static_cast<double>(std::abs(m))); });
        case FamilyKind::PsiDeformed: {
            const PsiHandle& psi = detail::require_psi(spec);
            const auto value = [&](int m) {
                if (!psi.defined || !psi.defined(m, nu))
                    throw PsiUndefined("psi (" + psi.description + ") undefined at m = " +
                                       std::to_string(m) + ", nu = " + format_nu(spec.nu));
                const std::complex<double> v = psi.eval(m, nu);
                if (v == 0.0)
                    throw PsiUndefined("psi (" + psi.description + ") vanishes at m = " +
                                       std::to_string(m) + ", nu = " + format_nu(spec.nu));
                return v;
            };
            return detail::assemble<std::complex<double>>(
                w, h, [&](int m) { return 0.5 * (nu + static_cast<double>(m)) / value(m); },
                [&](int m) { return 0.5 * (nu - static_cast<double>(m)) * value(m); });
        }
    }
    throw std::invalid_argument("unknown family kind");
}

} // namespace gkmod
