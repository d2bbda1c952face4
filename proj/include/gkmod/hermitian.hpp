#pragma once

/**
 * @file hermitian.hpp
 * @brief Diagonal invariant Hermitian forms, their degenerate limits at the
 *        reducible integers, and one-sided limit comparison.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkmod/errors.hpp"
#include "gkmod/structure.hpp"

namespace gkmod {

// Diagonal form values <v_j, v_j>; off-diagonal pairings vanish identically
// and are not stored. scale_order s means the stored table is the limit of
// (nu - nu0)^{-s} <.,.> along nu -> nu0; it is 0 away from the reducible
// integers, where no scaling happens.
template <class V>
struct FormTable {
    WeightWindow window;
    std::map<int, V> values;
    int normalized_at = 0;
    int scale_order = 0;

    const V& at(int j) const {
        const auto it = values.find(j);
        if (it == values.end())
            throw std::out_of_range("form has no value at weight " + std::to_string(j));
        return it->second;
    }
};

using ExactForm = FormTable<Rat>;

namespace detail {

// Leading term c * delta^k of a value along nu = nu0 + delta. Every factor in
// the recursion is a ratio of monic linears in delta, so leading terms
// multiply without cancellation and the limit they describe is exact.
struct Lead {
    Rat c;
    int k = 0;
};

inline Lead lead_of_linear(const Rat& constant_term) {
    if (constant_term != 0) return {constant_term, 0};
    return {Rat(1), 1};
}

inline Lead lead_ratio(const Rat& num_constant, const Rat& den_constant) {
    const Lead num = lead_of_linear(num_constant);
    const Lead den = lead_of_linear(den_constant);
    return {-num.c / den.c, num.k - den.k};
}

} // namespace detail

// Solves (nu+m)<v_{m+1}> + (nu-m)<v_{m-1}> = 0 outward from <v_c> = 1 at the
// center weight c in {0,1}. At a reducible integer the raw values scale as
// powers of the offset delta; the table keeps the coefficients of the lowest
// power and zeroes the rest, which is the scaled limit of the family of
// forms. Its radical is then the support of the maximal semisimple
// submodule: the two tails when nu0 > 0, the finite middle when nu0 < 0.
inline ExactForm form_on_pi(int eps, const NuParameter& nu, int window) {
    const WeightWindow w(Parity(eps), window);
    ExactForm form{w, {}, w.parity().contains(0) ? 0 : 1, 0};

    if (std::holds_alternative<FloatNu>(nu))
        throw FloatNotSupported("exact forms need exact parameters; use form_on_pi_float");

    if (const auto* im = std::get_if<ExactImaginary>(&nu); im && im->t != 0) {
        // conj(nu) = -nu makes every step factor (m+nu)/(m+nu) = 1.
        for (int j : w.weights()) form.values.emplace(j, Rat(1));
        return form;
    }

    // real axis, including an imaginary parameter with t = 0
    const Rat v = std::holds_alternative<ExactReal>(nu) ? std::get<ExactReal>(nu).value : Rat(0);
    if (is_reducibility_point(nu, eps) && w.bound() < rat_abs(v) + 4)
        throw WindowTooSmall("window bound " + std::to_string(w.bound()) +
                             " cannot resolve the form's wall at |nu| = " + format_rat(rat_abs(v)));

    std::map<int, detail::Lead> leads;
    leads.emplace(form.normalized_at, detail::Lead{Rat(1), 0});
    for (int m = form.normalized_at + 1; m + 1 <= w.highest(); m += 2) {
        const detail::Lead step = detail::lead_ratio(v - m, v + m);
        const detail::Lead& prev = leads.at(m - 1);
        leads.emplace(m + 1, detail::Lead{prev.c * step.c, prev.k + step.k});
    }
    for (int m = form.normalized_at - 1; m - 1 >= w.lowest(); m -= 2) {
        const detail::Lead step = detail::lead_ratio(v + m, v - m);
        const detail::Lead& prev = leads.at(m + 1);
        leads.emplace(m - 1, detail::Lead{prev.c * step.c, prev.k + step.k});
    }

    int k_min = 0;
    for (const auto& [j, lead] : leads) k_min = std::min(k_min, lead.k);
    for (const auto& [j, lead] : leads)
        form.values.emplace(j, lead.k == k_min ? lead.c : Rat(0));
    form.scale_order = k_min;
    return form;
}

// Float companion for parameters that are only available as doubles. The
// Hermitian locus is the union of the real and imaginary axes.
inline FormTable<double> form_on_pi_float(int eps, std::complex<double> nu, int window) {
    if (nu.real() != 0.0 && nu.imag() != 0.0)
        throw NotHermitianLocus("no invariant Hermitian form off the real and imaginary axes");
    const bool reducible_real =
        nu.imag() == 0.0 && nu.real() == std::nearbyint(nu.real()) &&
        Parity(-eps).contains(static_cast<int>(std::nearbyint(nu.real())));
    if (reducible_real)
        throw AtReducibilityPoint("scaled limit forms need the exact construction");

    const WeightWindow w(Parity(eps), window);
    FormTable<double> form{w, {}, w.parity().contains(0) ? 0 : 1, 0};
    const std::complex<double> vbar = std::conj(nu);
    std::map<int, double> vals;
    vals.emplace(form.normalized_at, 1.0);
    for (int m = form.normalized_at + 1; m + 1 <= w.highest(); m += 2)
        vals.emplace(m + 1, (-(vbar - static_cast<double>(m)) / (nu + static_cast<double>(m)))
                                .real() *
                                vals.at(m - 1));
    for (int m = form.normalized_at - 1; m - 1 >= w.lowest(); m -= 2)
        vals.emplace(m - 1, (-(nu + static_cast<double>(m)) / (vbar - static_cast<double>(m)))
                                .real() *
                                vals.at(m + 1));
    form.values = std::move(vals);
    return form;
}

// The corresponding form for the deformed family steps by -sgn(nu^2 - m^2),
// so every value is +-1 and the form is nondegenerate.
inline ExactForm form_on_Pi(int eps, const NuParameter& nu, int window) {
    const auto* r = std::get_if<ExactReal>(&nu);
    if (!r) throw std::invalid_argument("the deformed family's form needs an exact real parameter");
    if (is_reducibility_point(nu, eps))
        throw AtReducibilityPoint("values jump across nu = " + format_rat(r->value) +
                                  "; take one_sided_limits instead");

    const WeightWindow w(Parity(eps), window);
    ExactForm form{w, {}, w.parity().contains(0) ? 0 : 1, 0};
    const Rat& v = r->value;
    form.values.emplace(form.normalized_at, 1);
    const auto flip = [&v](int m) {
        return rat_sign(v * v - Rat(m) * Rat(m)) > 0 ? Rat(-1) : Rat(1);
    };
    for (int m = form.normalized_at + 1; m + 1 <= w.highest(); m += 2)
        form.values.emplace(m + 1, flip(m) * form.values.at(m - 1));
    for (int m = form.normalized_at - 1; m - 1 >= w.lowest(); m -= 2)
        form.values.emplace(m - 1, flip(m) * form.values.at(m + 1));
    return form;
}

// <X v, w> + <v, sigma(X) w> = 0 with sigma(E) = F, sigma(F) = E,
// sigma(H) = -H, checked on interior weights. For the diagonal form this
// reduces to e(m-1) d_{m+1} + conj(f(m+1)) d_{m-1} = 0 at every interior
// midpoint (the H identity is automatic for real diagonal H).
inline bool verify_invariance(const WeightOperator<RadicalScalar>& H,
                              const WeightOperator<RadicalScalar>& E,
                              const WeightOperator<RadicalScalar>& F, const ExactForm& form) {
    const WeightWindow& w = H.window();
    if (!(w == form.window)) return false;
    try {
        for (int j : w.weights()) {
            if (!w.is_interior(j) || !H.has(j)) continue;
            const RadicalScalar h = H.at(j);
            const RadicalScalar d{CRat(form.at(j))};
            if (h * d - h.conj() * d != RadicalScalar(0)) return false;
        }
        for (int m : w.midpoints()) {
            if (!w.is_interior(m - 1) || !w.is_interior(m + 1)) continue;
            if (!E.has(m - 1) || !F.has(m + 1)) return false;
            const RadicalScalar d_up{CRat(form.at(m + 1))};
            const RadicalScalar d_down{CRat(form.at(m - 1))};
            const RadicalScalar e_side = E.at(m - 1) * d_up + F.at(m + 1).conj() * d_down;
            if (e_side != RadicalScalar(0)) return false;
            const RadicalScalar f_side = F.at(m + 1) * d_down + E.at(m - 1).conj() * d_up;
            if (f_side != RadicalScalar(0)) return false;
        }
    } catch (const NonClosedSum&) {
        return false;
    }
    return true;
}

inline bool verify_invariance(const ExactTriple& t, const ExactForm& form) {
    return verify_invariance(t.H, t.E, t.F, form);
}

inline std::set<int> radical_of_form(const ExactForm& form) {
    std::set<int> radical;
    for (const auto& [j, value] : form.values)
        if (value == 0) radical.insert(j);
    return radical;
}

// Left and right limits of the deformed family's form at a reducible
// integer. The sign pattern is constant between consecutive integers, so
// evaluating a quarter step away gives each one-sided limit exactly.
struct OneSidedLimits {
    ExactForm left;
    ExactForm right;
    std::map<int, int> relation;  // +1 where the limits agree, -1 where they flip
};

inline OneSidedLimits one_sided_limits(int eps, long nu0, int window) {
    if (!Parity(-eps).contains(static_cast<int>(nu0)))
        throw std::invalid_argument("one-sided limits are taken at reducible integers only");
    const Rat quarter = Rat(1) / Rat(4);
    OneSidedLimits out{form_on_Pi(eps, nu_real(Rat(nu0) - quarter), window),
                       form_on_Pi(eps, nu_real(Rat(nu0) + quarter), window),
                       {}};
    for (const auto& [j, lhs] : out.left.values)
        out.relation.emplace(j, lhs == out.right.at(j) ? +1 : -1);
    return out;
}

// The scaled limit form must vanish on every irreducible submodule. Only the
// nonsplit reducible points have a proper socle to test against.
inline bool socle_vanishing_check(int eps, long nu0, const ExactForm& form) {
    FamilySpec spec;
    spec.kind = FamilyKind::Principal;
    spec.epsilon = eps;
    spec.nu = nu_real(nu0);
    spec.window = form.window.bound();
    const SeriesReport report = series_report(spec);
    if (!report.indecomposable)
        throw std::domain_error("socle vanishing concerns nonsplit reducible modules only");

    for (const Segment& segment : report.segments) {
        if (!segment.is_submodule) continue;
        for (int j : segment.support)
            if (form.at(j) != 0) return false;
    }
    return true;
}

} // namespace gkmod
