#pragma once

/**
 * @file structure.hpp
 * @brief Lie relation checks, Casimir scalars, and composition series reports.
 */

#include <complex>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gkmod/errors.hpp"
#include "gkmod/families.hpp"

namespace gkmod {

// Exact verification is restricted to interior weights |j| <= N-4, where every
// operand of every relation is guaranteed present. Truncation can then never
// fake a failure.

// Checks [H,E] = 2E, [H,F] = -2F, [E,F] = H entrywise. A sum of incompatible
// radicals cannot equal a diagonal rational entry, so NonClosedSum means false.
inline bool verify_brackets(const WeightOperator<RadicalScalar>& H,
                            const WeightOperator<RadicalScalar>& E,
                            const WeightOperator<RadicalScalar>& F) {
    const WeightWindow& w = H.window();
    try {
        for (int j : w.weights()) {
            if (!w.is_interior(j)) continue;
            if (!H.has(j) || !H.has(j + 2) || !H.has(j - 2)) return false;
            if (!E.has(j) || !E.has(j - 2) || !F.has(j) || !F.has(j + 2)) return false;
            const RadicalScalar two_e = E.at(j) + E.at(j);
            const RadicalScalar two_f = F.at(j) + F.at(j);
            if ((H.at(j + 2) - H.at(j)) * E.at(j) != two_e) return false;
            if ((H.at(j - 2) - H.at(j)) * F.at(j) != -two_f) return false;
            if (F.at(j) * E.at(j - 2) - E.at(j) * F.at(j + 2) != H.at(j)) return false;
        }
    } catch (const NonClosedSum&) {
        return false;
    }
    return true;
}

inline bool verify_brackets(const ExactTriple& t) { return verify_brackets(t.H, t.E, t.F); }

inline bool verify_brackets_approx(const WeightOperator<std::complex<double>>& H,
                                   const WeightOperator<std::complex<double>>& E,
                                   const WeightOperator<std::complex<double>>& F, double tol) {
    const WeightWindow& w = H.window();
    for (int j : w.weights()) {
        if (!w.is_interior(j)) continue;
        if (!H.has(j) || !H.has(j + 2) || !H.has(j - 2)) return false;
        if (!E.has(j) || !E.has(j - 2) || !F.has(j) || !F.has(j + 2)) return false;
        if (std::abs((H.at(j + 2) - H.at(j)) * E.at(j) - 2.0 * E.at(j)) > tol) return false;
        if (std::abs((H.at(j - 2) - H.at(j)) * F.at(j) + 2.0 * F.at(j)) > tol) return false;
        if (std::abs(F.at(j) * E.at(j - 2) - E.at(j) * F.at(j + 2) - H.at(j)) > tol) return false;
    }
    return true;
}

inline bool verify_brackets_approx(const FloatTriple& t, double tol) {
    return verify_brackets_approx(t.H, t.E, t.F, tol);
}

// Omega = H^2 - 2H + 4EF acts diagonally; returns the common eigenvalue, or
// nullopt when the action is not scalar on the interior.
inline std::optional<RadicalScalar> casimir_scalar(const WeightOperator<RadicalScalar>& H,
                                                   const WeightOperator<RadicalScalar>& E,
                                                   const WeightOperator<RadicalScalar>& F) {
    const WeightWindow& w = H.window();
    std::optional<RadicalScalar> scalar;
    try {
        for (int j : w.weights()) {
            if (!w.is_interior(j)) continue;
            if (!H.has(j) || !F.has(j) || !E.has(j - 2)) return std::nullopt;
            const RadicalScalar h = H.at(j);
            const RadicalScalar ef = F.at(j) * E.at(j - 2);
            const RadicalScalar omega =
                h * h - (h + h) + (ef + ef) + (ef + ef);
            if (!scalar) {
                scalar = omega;
            } else if (*scalar != omega) {
                return std::nullopt;
            }
        }
    } catch (const NonClosedSum&) {
        return std::nullopt;
    }
    return scalar;
}

inline std::optional<RadicalScalar> casimir_scalar(const ExactTriple& t) {
    return casimir_scalar(t.H, t.E, t.F);
}

inline std::optional<std::complex<double>> casimir_scalar_approx(const FloatTriple& t,
                                                                 double tol) {
    const WeightWindow& w = t.H.window();
    std::optional<std::complex<double>> scalar;
    for (int j : w.weights()) {
        if (!w.is_interior(j)) continue;
        if (!t.H.has(j) || !t.F.has(j) || !t.E.has(j - 2)) return std::nullopt;
        const std::complex<double> h = t.H.at(j);
        const std::complex<double> omega = h * h - 2.0 * h + 4.0 * t.F.at(j) * t.E.at(j - 2);
        if (!scalar) {
            scalar = omega;
        } else if (std::abs(*scalar - omega) > tol) {
            return std::nullopt;
        }
    }
    return scalar;
}

// Weights whose raising (resp. lowering) coefficient is exactly zero, over the
// weights where both operators store entries. Stored zeros are genuine; only
// treating a truncated entry as zero could fake an annihilation, and truncated
// entries are never stored.
struct AnnihilationPattern {
    std::set<int> e_zeros;
    std::set<int> f_zeros;
};

inline AnnihilationPattern annihilation_pattern(const WeightOperator<RadicalScalar>& E,
                                                const WeightOperator<RadicalScalar>& F) {
    AnnihilationPattern p;
    const int scope = E.window().bound() - 2;
    for (const auto& [j, v] : E.entries())
        if (std::abs(j) <= scope && v.is_zero()) p.e_zeros.insert(j);
    for (const auto& [j, v] : F.entries())
        if (std::abs(j) <= scope && v.is_zero()) p.f_zeros.insert(j);
    return p;
}

enum class FactorKind { FiniteDim, HoloDS, AntiHoloDS, LimitPlus, LimitMinus, IrreduciblePS };

// F_n (dimension n), D_n (lowest weight n+1), D_{-n} (highest weight -n-1),
// the limits L^+/L^- (lowest weight 1 / highest weight -1), or the whole
// irreducible principal series.
struct FactorLabel {
    FactorKind kind = FactorKind::IrreduciblePS;
    int n = 0;

    std::string str() const {
        switch (kind) {
            case FactorKind::FiniteDim: return "F_" + std::to_string(n);
            case FactorKind::HoloDS: return "D_" + std::to_string(n);
            case FactorKind::AntiHoloDS: return "D_{-" + std::to_string(n) + "}";
            case FactorKind::LimitPlus: return "L^+";
            case FactorKind::LimitMinus: return "L^-";
            case FactorKind::IrreduciblePS: return "PS";
        }
        return {};
    }

    friend auto operator<=>(const FactorLabel&, const FactorLabel&) = default;
};

inline FactorLabel finite_dim(int n) { return {FactorKind::FiniteDim, n}; }
inline FactorLabel holo_ds(int n) { return {FactorKind::HoloDS, n}; }
inline FactorLabel anti_holo_ds(int n) { return {FactorKind::AntiHoloDS, n}; }
inline FactorLabel limit_plus() { return {FactorKind::LimitPlus, 0}; }
inline FactorLabel limit_minus() { return {FactorKind::LimitMinus, 0}; }
inline FactorLabel irreducible_ps() { return {FactorKind::IrreduciblePS, 0}; }

// A maximal run of weights between annihilation walls. Tails truncated by the
// window are marked open; support lists only the in-window weights.
struct Segment {
    FactorLabel label;
    std::vector<int> support;
    bool lower_open = false;
    bool upper_open = false;
    bool is_submodule = false;
};

struct SeriesReport {
    std::vector<FactorLabel> factors;  // ascending weight support order
    std::string bracket;
    bool completely_reducible = true;
    bool indecomposable = false;  // reducible but not a direct sum
    bool reducible = false;
    std::vector<Segment> segments;
};

namespace detail {

// E.v_j = 0 blocks ascent through midpoint j+1; F.v_j = 0 blocks descent
// through midpoint j-1.
struct Wall {
    bool up = false;
    bool down = false;
};

inline FactorLabel lower_tail_label(int top) {
    if (top == -1) return limit_minus();
    if (top <= -2) return anti_holo_ds(-top - 1);
    throw std::logic_error("lower tail reaching nonnegative weight " + std::to_string(top));
}

inline FactorLabel upper_tail_label(int bottom) {
    if (bottom == 1) return limit_plus();
    if (bottom >= 2) return holo_ds(bottom - 1);
    throw std::logic_error("upper tail reaching nonpositive weight " + std::to_string(bottom));
}

} // namespace detail

// Walls from the annihilation pattern partition the weight line; each segment
// carries one composition factor. A wall blocking both directions splits the
// module there, so completely_reducible means every wall is two-sided.
inline SeriesReport series_report(const FamilySpec& spec) {
    const WeightWindow w = spec.make_window();
    const bool reducible = is_reducibility_point(spec.nu, spec.epsilon);
    if (reducible) {
        const long n = std::labs(*reducibility_integer(spec.nu, spec.epsilon));
        if (w.bound() < n + 4)
            throw WindowTooSmall("window bound " + std::to_string(w.bound()) +
                                 " < " + std::to_string(n + 4) +
                                 " needed to resolve the walls at +-" + std::to_string(n));
    }

    const ExactTriple ops = build_family(spec);
    const AnnihilationPattern pat = annihilation_pattern(ops.E, ops.F);

    std::map<int, detail::Wall> walls;
    for (int j : pat.e_zeros) walls[j + 1].up = true;
    for (int j : pat.f_zeros) walls[j - 1].down = true;

    if (walls.empty() == reducible)
        throw std::logic_error("annihilation pattern contradicts the reducibility locus");

    SeriesReport rep;
    rep.reducible = reducible;

    if (walls.empty()) {
        Segment s;
        s.label = irreducible_ps();
        s.support = w.weights();
        s.lower_open = s.upper_open = true;
        s.is_submodule = true;
        rep.segments.push_back(std::move(s));
    } else {
        std::vector<int> mids;
        mids.reserve(walls.size());
        for (const auto& [m, wall] : walls) mids.push_back(m);

        Segment lower;
        lower.lower_open = true;
        for (int j = w.lowest(); j <= mids.front() - 1; j += 2) lower.support.push_back(j);
        lower.is_submodule = walls[mids.front()].up;
        lower.label = detail::lower_tail_label(mids.front() - 1);
        rep.segments.push_back(std::move(lower));

        for (std::size_t i = 0; i + 1 < mids.size(); ++i) {
            Segment mid;
            for (int j = mids[i] + 1; j <= mids[i + 1] - 1; j += 2) mid.support.push_back(j);
            mid.is_submodule = walls[mids[i]].down && walls[mids[i + 1]].up;
            mid.label = finite_dim(static_cast<int>(mid.support.size()));
            rep.segments.push_back(std::move(mid));
        }

        Segment upper;
        upper.upper_open = true;
        for (int j = mids.back() + 1; j <= w.highest(); j += 2) upper.support.push_back(j);
        upper.is_submodule = walls[mids.back()].down;
        upper.label = detail::upper_tail_label(mids.back() + 1);
        rep.segments.push_back(std::move(upper));

        for (const auto& [m, wall] : walls)
            if (!(wall.up && wall.down)) rep.completely_reducible = false;

        std::string bracket = "(";
        for (std::size_t i = 0; i < rep.segments.size(); ++i) {
            if (i > 0) {
                const detail::Wall& wall = walls[mids[i - 1]];
                bracket += wall.up && wall.down ? " ] [ " : wall.up ? " ] " : " [ ";
            }
            bracket += rep.segments[i].label.str();
        }
        bracket += ")";
        rep.bracket = std::move(bracket);
    }

    if (walls.empty()) rep.bracket = "(PS)";
    rep.indecomposable = reducible && !rep.completely_reducible;
    for (const auto& s : rep.segments) rep.factors.push_back(s.label);
    return rep;
}

} // namespace gkmod
