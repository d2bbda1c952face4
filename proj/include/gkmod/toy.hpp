#pragma once

/**
 * @file toy.hpp
 * @brief Two-dimensional warm-up: the group generated by scalings e^t and the
 *        involution delta, its diagonal representation pi(nu), the conjugating
 *        matrix S(nu), and the nu -> 0 limit of the conjugated family Pi(nu).
 */

#include <algorithm>
#include <cmath>
#include <string>

#include "gkmod/errors.hpp"

namespace gkmod {

struct Mat2 {
    // row-major entries
    double a = 0, b = 0, c = 0, d = 0;

    static Mat2 identity() { return {1, 0, 0, 1}; }

    double det() const { return a * d - b * c; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Mat2 inverse() const {
        const double dt = det();
        if (std::abs(dt) < 1e-300)
            throw SingularAtZero("matrix with determinant " + std::to_string(dt) +
                                 " cannot be inverted");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }
};

inline double mat2_distance(const Mat2& x, const Mat2& y) {
    return std::max(std::max(std::abs(x.a - y.a), std::abs(x.b - y.b)),
                    std::max(std::abs(x.c - y.c), std::abs(x.d - y.d)));
}

inline bool approx_eq(const Mat2& x, const Mat2& y, double tol) {
    return mat2_distance(x, y) <= tol;
}

// Group coordinates: e^t for t real, or the order-two generator delta.
struct GroupElement {
    bool is_delta = false;
    double t = 0;
};

inline GroupElement group_exp(double t) { return {false, t}; }
inline GroupElement group_delta() { return {true, 0}; }

// sinh(x)/x extended by 1 at x = 0. The explicit series keeps the middle
// entry of Pi(nu)(e^t) free of cancellation as nu -> 0.
inline double sinhc(double x) {
    if (std::abs(x) < 1e-3) {
        const double x2 = x * x;
        return 1.0 + x2 / 6.0 * (1.0 + x2 / 20.0 * (1.0 + x2 / 42.0));
    }
    return std::sinh(x) / x;
}

// pi(nu)(e^t) = diag(e^{t nu}, e^{-t nu}); pi(nu)(delta) swaps the two
// characters.
inline Mat2 toy_pi(double nu, const GroupElement& g) {
    if (g.is_delta) return {0, 1, 1, 0};
    return {std::exp(g.t * nu), 0, 0, std::exp(-g.t * nu)};
}

inline Mat2 toy_X(double nu) { return {nu, 0, 0, -nu}; }
inline Mat2 toy_Y(double nu) { return {nu, 1, 0, -nu}; }
inline Mat2 toy_S(double nu) { return {1, 1, 0, -2 * nu}; }

// Conjugated family in the basis where the limit is visible. The middle
// entry (e^{t nu} - e^{-t nu})/(2 nu) is evaluated as t sinhc(t nu), which is
// also its continuous extension to nu = 0.
inline Mat2 toy_Pi(double nu, const GroupElement& g) {
    if (g.is_delta) return {1, 0, -2 * nu, -1};
    return {std::exp(g.t * nu), g.t * sinhc(g.t * nu), 0, std::exp(-g.t * nu)};
}

// S(nu) X(nu) S(nu)^{-1} = Y(nu) away from nu = 0, where S degenerates.
inline bool toy_conjugation_check(double nu, double tol = 1e-12) {
    if (nu == 0) throw SingularAtZero("S(0) has determinant 0; no conjugation at nu = 0");
    const Mat2 s = toy_S(nu);
    return approx_eq(s * toy_X(nu) * s.inverse(), toy_Y(nu), tol);
}

// Same identity at the group level: S(nu) pi(nu)(g) S(nu)^{-1} = Pi(nu)(g).
inline bool toy_group_conjugation_check(double nu, const GroupElement& g, double tol = 1e-12) {
    if (nu == 0) throw SingularAtZero("S(0) has determinant 0; no conjugation at nu = 0");
    const Mat2 s = toy_S(nu);
    return approx_eq(s * toy_pi(nu, g) * s.inverse(), toy_Pi(nu, g), tol);
}

struct ToyLimit {
    Mat2 exp_limit;    // [[1, t], [0, 1]]
    Mat2 delta_limit;  // [[1, 0], [0, -1]]
    bool converged = false;
    double final_distance = 0;
};

// Walks nu = 2^{-k} toward 0 and confirms Pi(nu) approaches the evaluation
// at nu = 0: a unipotent Jordan block for e^t (so the limit's restriction to
// the scalings is indecomposable) and diag(1,-1) for delta.
inline ToyLimit toy_Pi_limit(double t, int steps = 40, double tol = 1e-8) {
    ToyLimit out{toy_Pi(0.0, group_exp(t)), toy_Pi(0.0, group_delta()), false, 0};
    double nu = 1.0;
    double dist = 0;
    for (int k = 0; k <= steps; ++k, nu /= 2) {
        dist = std::max(mat2_distance(toy_Pi(nu, group_exp(t)), out.exp_limit),
                        mat2_distance(toy_Pi(nu, group_delta()), out.delta_limit));
    }
    out.final_distance = dist;
    out.converged = std::isfinite(dist) && dist <= tol;
    return out;
}

} // namespace gkmod
