#pragma once

/**
 * @file deform.hpp
 * @brief Diagonal gauge tables, conjugation, limit probes, and the pole
 *        obstruction separating the deformed family from the principal one.
 */

#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gkmod/errors.hpp"
#include "gkmod/families.hpp"
#include "gkmod/structure.hpp"

namespace gkmod {

// phi_j(nu) on the window weights: phi_0 = phi_1 = 1, phi_n scales phi_{n-2}
// by |nu+n-1|^{1/2}/|nu-n+1|^{1/2}, and phi_{-n} = phi_n.
struct PhiTable {
    WeightWindow window;
    NuParameter nu;
    std::map<int, RadicalScalar> values;

    const RadicalScalar& at(int j) const {
        const auto it = values.find(j);
        if (it == values.end())
            throw std::out_of_range("phi has no value at weight " + std::to_string(j));
        return it->second;
    }
};

// The recursion divides by |nu -+ (n-1)| with n-1 running over the opposite
// parity, so it is singular exactly on the reducibility locus.
inline PhiTable phi_table(const NuParameter& nu, const WeightWindow& window) {
    if (std::holds_alternative<FloatNu>(nu))
        throw FloatNotSupported("phi tables are exact; evaluate psi in float form instead");
    if (is_reducibility_point(nu, window.parity().sign()))
        throw AtReducibilityPoint("phi recursion is singular at nu = " + format_nu(nu));

    PhiTable table{window, nu, {}};
    const int base = window.parity().contains(0) ? 0 : 1;

    if (std::holds_alternative<ExactImaginary>(nu)) {
        // |nu+n-1| and |nu-n+1| share the same modulus, every ratio is 1.
        for (int j : window.weights()) table.values.emplace(j, RadicalScalar(1));
        return table;
    }

    const Rat v = std::get<ExactReal>(nu).value;
    table.values.emplace(base, RadicalScalar(1));
    for (int n = base + 2; n <= window.highest(); n += 2) {
        const RadicalScalar step = RadicalScalar::sqrt_of(rat_abs(v + (n - 1))) /
                                   RadicalScalar::sqrt_of(rat_abs(v - (n - 1)));
        table.values.emplace(n, step * table.values.at(n - 2));
    }
    for (int n = base + 2; n <= window.highest(); n += 2)
        table.values.emplace(-n, table.values.at(n));
    if (base == 1) table.values.emplace(-1, RadicalScalar(1));
    return table;
}

// psi_m = phi_{m+1}/phi_{m-1}, pinned to the table's own parameter. Probing
// it at any other parameter is undefined by construction.
inline PsiHandle psi_from_phi(const PhiTable& phi) {
    for (const auto& [j, value] : phi.values)
        if (value.is_zero())
            throw PsiUndefined("phi vanishes at weight " + std::to_string(j));

    PsiHandle h;
    h.description = "phi ratio at nu = " + format_nu(phi.nu);
    const std::complex<double> anchor = to_complex(phi.nu);
    const NuParameter nu = phi.nu;
    const auto table = phi.values;

    const auto ratio = [table](int m) -> RadicalScalar {
        const auto above = table.find(m + 1);
        const auto below = table.find(m - 1);
        if (above == table.end() || below == table.end())
            throw PsiUndefined("phi ratio needs weights " + std::to_string(m - 1) + " and " +
                               std::to_string(m + 1) + " in the window");
        return above->second / below->second;
    };

    h.defined = [anchor, table](int m, std::complex<double> z) {
        return z == anchor && table.count(m + 1) > 0 && table.count(m - 1) > 0;
    };
    h.eval = [anchor, ratio](int m, std::complex<double> z) {
        if (z != anchor) throw PsiUndefined("phi ratio evaluated away from its parameter");
        return ratio(m).to_float();
    };
    h.exact = [nu, ratio](int m, const NuParameter& at) {
        if (!(at == nu)) throw PsiUndefined("phi ratio evaluated away from its parameter");
        return ratio(m);
    };
    h.eval_exact_arg = [nu, ratio](int m, const NuParameter& at) {
        if (!(at == nu)) throw PsiUndefined("phi ratio evaluated away from its parameter");
        return ratio(m).to_float();
    };
    return h;
}

// Conjugation by the diagonal gauge v_j -> v_j / phi_j: an entry from j to
// j+s picks up phi_j/phi_{j+s}. H is untouched; the raising entry at m-1
// becomes e/psi_m and the lowering entry at m+1 becomes f*psi_m.
inline ExactTriple conjugate_by_S(const ExactTriple& ops, const PhiTable& phi) {
    if (!(ops.H.window() == phi.window))
        throw std::invalid_argument("gauge table and operators use different windows");

    ExactTriple out{ops.H, WeightOperator<RadicalScalar>(phi.window, +2),
                    WeightOperator<RadicalScalar>(phi.window, -2)};
    for (const auto& [j, e] : ops.E.entries()) out.E.set(j, e * (phi.at(j) / phi.at(j + 2)));
    for (const auto& [j, f] : ops.F.entries()) out.F.set(j, f * (phi.at(j) / phi.at(j - 2)));
    return out;
}

enum class LimitExpression { RaisingOverPsi, LoweringTimesPsi };
enum class ProbeDirection { FromAbove, FromBelow, Imaginary };

// Dyadic approach to an integer parameter: samples at nu0 +- delta0*2^{-k}
// (or nu0 + i*delta0*2^{-k}), k = 0..steps.
struct LimitProbe {
    long nu0 = 0;
    ProbeDirection direction = ProbeDirection::FromAbove;
    int steps = 20;
    Rat delta0 = Rat(1) / Rat(8);
    double tol = 1e-8;
};

struct ProbeResult {
    bool exists = false;  // final successive difference within tol
    std::complex<double> value{0.0, 0.0};
    double rate = 0.0;  // log2 decay of successive differences
};

namespace detail {

inline std::complex<double> probe_psi_value(const PsiHandle& psi, int m, const NuParameter& nu) {
    const std::complex<double> p = psi_eval_at(psi, m, nu);
    if (p == std::complex<double>(0.0, 0.0))
        throw PsiUndefined("psi evaluated to 0 on the probe path");
    return p;
}

// The linear factor is formed exactly before rounding; at offsets far below
// the double spacing of nu0 +- m, rounding z first would cancel it to 0.
inline std::complex<double> limit_expression_value(const PsiHandle& psi, int m,
                                                   LimitExpression expr, const NuParameter& nu) {
    const std::complex<double> p = probe_psi_value(psi, m, nu);
    std::complex<double> factor;
    if (const auto* r = std::get_if<ExactReal>(&nu)) {
        const Rat linear =
            expr == LimitExpression::RaisingOverPsi ? Rat(r->value + m) : Rat(r->value - m);
        factor = std::complex<double>(to_double(linear), 0.0);
    } else if (const auto* im = std::get_if<ExactImaginary>(&nu)) {
        factor = std::complex<double>(expr == LimitExpression::RaisingOverPsi
                                          ? static_cast<double>(m)
                                          : static_cast<double>(-m),
                                      to_double(im->t));
    } else {
        const std::complex<double> z = to_complex(nu);
        factor = expr == LimitExpression::RaisingOverPsi ? z + static_cast<double>(m)
                                                         : z - static_cast<double>(m);
    }
    return expr == LimitExpression::RaisingOverPsi ? factor / p : factor * p;
}

inline NuParameter probe_point(const LimitProbe& probe, const Rat& delta) {
    switch (probe.direction) {
        case ProbeDirection::FromAbove: return nu_real(Rat(probe.nu0) + delta);
        case ProbeDirection::FromBelow: return nu_real(Rat(probe.nu0) - delta);
        case ProbeDirection::Imaginary:
            if (probe.nu0 == 0) return nu_imag(delta);
            return nu_float({static_cast<double>(probe.nu0), to_double(delta)});
    }
    throw std::logic_error("unreachable probe direction");
}

inline double decay_rate(const std::vector<double>& diffs, double scale) {
    const double cut = 64.0 * std::numeric_limits<double>::epsilon() * scale;
    double sum = 0.0;
    int n = 0;
    for (std::size_t k = 1; k < diffs.size(); ++k) {
        if (diffs[k - 1] > cut && diffs[k] > cut) {
            sum += std::log2(diffs[k - 1] / diffs[k]);
            ++n;
        }
    }
    return n > 0 ? sum / n : 0.0;
}

} // namespace detail

inline ProbeResult probe_limit(const PsiHandle& psi, int m, const LimitProbe& probe,
                               LimitExpression expr) {
    if (probe.steps < 2) throw std::invalid_argument("probe needs at least 2 steps");
    if (!(probe.delta0 > 0)) throw std::invalid_argument("probe offset must be positive");
    if (!(probe.tol > 0)) throw std::invalid_argument("probe tolerance must be positive");

    std::vector<std::complex<double>> samples;
    samples.reserve(probe.steps + 1);
    for (int k = 0; k <= probe.steps; ++k) {
        const Rat delta = probe.delta0 / Rat(Int(1) << k);
        samples.push_back(detail::limit_expression_value(psi, m, expr,
                                                         detail::probe_point(probe, delta)));
    }

    std::vector<double> diffs;
    diffs.reserve(samples.size() - 1);
    bool finite = true;
    for (std::size_t k = 1; k < samples.size(); ++k) {
        if (!std::isfinite(samples[k].real()) || !std::isfinite(samples[k].imag())) finite = false;
        diffs.push_back(std::abs(samples[k] - samples[k - 1]));
    }

    ProbeResult result;
    result.value = samples.back();
    result.exists = finite && diffs.back() <= probe.tol;
    result.rate = detail::decay_rate(diffs, std::max(1.0, std::abs(result.value)));
    return result;
}

// All three approach directions; existence additionally requires the
// directional values to agree within the probe tolerance.
struct DirectionalProbes {
    ProbeResult from_above;
    ProbeResult from_below;
    ProbeResult imaginary;
    bool exists = false;
    std::complex<double> value{0.0, 0.0};  // from-above value when exists
};

inline DirectionalProbes probe_limit_all(const PsiHandle& psi, int m, LimitProbe probe,
                                         LimitExpression expr) {
    DirectionalProbes out;
    probe.direction = ProbeDirection::FromAbove;
    out.from_above = probe_limit(psi, m, probe, expr);
    probe.direction = ProbeDirection::FromBelow;
    out.from_below = probe_limit(psi, m, probe, expr);
    probe.direction = ProbeDirection::Imaginary;
    out.imaginary = probe_limit(psi, m, probe, expr);

    const bool agree =
        std::abs(out.from_above.value - out.from_below.value) <= probe.tol &&
        std::abs(out.from_above.value - out.imaginary.value) <= probe.tol;
    out.exists = out.from_above.exists && out.from_below.exists && out.imaginary.exists && agree;
    if (out.exists) out.value = out.from_above.value;
    return out;
}

// Raising and lowering coefficients indexed by midpoint, read back from built
// operators rather than re-entered formulas.
struct CoefficientFunctions {
    FamilyKind kind = FamilyKind::Principal;
    int epsilon = 1;
    int window = 30;
    std::function<RadicalScalar(int, const NuParameter&)> alpha;
    std::function<RadicalScalar(int, const NuParameter&)> beta;
    std::function<std::complex<double>(int, std::complex<double>)> alpha_float;
    std::function<std::complex<double>(int, std::complex<double>)> beta_float;
};

inline CoefficientFunctions coefficient_functions(FamilyKind kind, int eps, int window) {
    CoefficientFunctions cf;
    cf.kind = kind;
    cf.epsilon = eps;
    cf.window = window;
    const auto make_spec = [kind, eps, window](NuParameter nu) {
        FamilySpec s;
        s.kind = kind;
        s.epsilon = eps;
        s.nu = std::move(nu);
        s.window = window;
        return s;
    };
    cf.alpha = [make_spec](int m, const NuParameter& nu) {
        return build_family(make_spec(nu)).E.at(m - 1);
    };
    cf.beta = [make_spec](int m, const NuParameter& nu) {
        return build_family(make_spec(nu)).F.at(m + 1);
    };
    cf.alpha_float = [make_spec](int m, std::complex<double> z) {
        return build_family_float(make_spec(nu_float(z))).E.at(m - 1);
    };
    cf.beta_float = [make_spec](int m, std::complex<double> z) {
        return build_family_float(make_spec(nu_float(z))).F.at(m + 1);
    };
    return cf;
}

struct PoleObstructionReport {
    bool passed = true;
    double max_deviation = 0.0;
    int checks = 0;
};

// alpha_m(nu) * beta_m(nu) = (nu^2 - m^2)/4 on every interior midpoint:
// exact equality for exact parameters, tolerance for float ones.
inline PoleObstructionReport pole_obstruction_check(const CoefficientFunctions& cf,
                                                    const std::vector<NuParameter>& grid,
                                                    double tol = 1e-12) {
    PoleObstructionReport report;
    const WeightWindow window(Parity(cf.epsilon), cf.window);
    std::vector<int> midpoints;
    for (int m : window.midpoints())
        if (std::abs(m) <= window.bound() - 5) midpoints.push_back(m);

    const CRat quarter{Rat(1) / Rat(4), Rat(0)};
    for (const NuParameter& nu : grid) {
        if (std::holds_alternative<FloatNu>(nu)) {
            const std::complex<double> z = to_complex(nu);
            for (int m : midpoints) {
                const std::complex<double> got = cf.alpha_float(m, z) * cf.beta_float(m, z);
                const std::complex<double> want = 0.25 * (z * z - static_cast<double>(m) *
                                                                      static_cast<double>(m));
                const double dev = std::abs(got - want);
                report.max_deviation = std::max(report.max_deviation, dev);
                if (dev > tol) report.passed = false;
                ++report.checks;
            }
            continue;
        }
        const CRat z = as_crat(nu);
        for (int m : midpoints) {
            const RadicalScalar got = cf.alpha(m, nu) * cf.beta(m, nu);
            const RadicalScalar want{quarter * (z * z - CRat(m * m))};
            if (got != want) {
                report.passed = false;
                report.max_deviation =
                    std::max(report.max_deviation, std::abs(got.to_float() - want.to_float()));
            }
            ++report.checks;
        }
    }
    return report;
}

// Raising coefficient at a fixed midpoint as a float function of real nu.
inline std::function<double(int, double)> entry_function(FamilyKind kind, int eps, int window) {
    return [kind, eps, window](int m, double nu) {
        FamilySpec s;
        s.kind = kind;
        s.epsilon = eps;
        s.nu = nu_float({nu, 0.0});
        s.window = window;
        return build_family_float(s).E.at(m - 1).real();
    };
}

struct SlopeFit {
    double slope = 0.0;
    int points = 0;
};

inline std::vector<double> default_probe_offsets() {
    std::vector<double> offsets;
    for (int k = 6; k <= 18; ++k) offsets.push_back(std::ldexp(1.0, -k));
    return offsets;
}

// Slope of log|q| against log(delta) for the difference quotient
// q = (entry(m0, m0+delta) - entry(m0, m0))/delta. A -1/2 slope certifies a
// square-root cusp; a slope near 0 means the quotient settled to a constant.
// Quotients are anchored at m0 itself: centering across the cusp would
// average the two branches and mask it.
inline SlopeFit differentiability_probe(const std::function<double(int, double)>& entry, int m0,
                                        const std::vector<double>& offsets) {
    const double base = entry(m0, static_cast<double>(m0));
    std::vector<double> xs, ys;
    for (double d : offsets) {
        if (!(d > 0.0)) throw std::invalid_argument("probe offsets must be positive");
        const double q = (entry(m0, static_cast<double>(m0) + d) - base) / d;
        if (q == 0.0 || !std::isfinite(q)) continue;
        xs.push_back(std::log(d));
        ys.push_back(std::log(std::abs(q)));
    }

    SlopeFit fit;
    fit.points = static_cast<int>(xs.size());
    if (fit.points < 2) return fit;
    double mx = 0.0, my = 0.0;
    for (int i = 0; i < fit.points; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= fit.points;
    my /= fit.points;
    double sxy = 0.0, sxx = 0.0;
    for (int i = 0; i < fit.points; ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    if (sxx > 0.0) fit.slope = sxy / sxx;
    return fit;
}

} // namespace gkmod
