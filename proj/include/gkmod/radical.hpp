#pragma once

/**
 * @file radical.hpp
 * @brief Scalars of the form c * sqrt(q): Gaussian-rational coefficient times
 *        the square root of a square-free positive integer.
 *
 * This family of scalars is closed under multiplication and division, and
 * under addition exactly when the radicands agree. The canonical form makes
 * equality decidable: q is a square-free positive integer (square parts and
 * rational denominators are absorbed into c), and c == 0 forces q == 1.
 */

#include <complex>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "gkmod/errors.hpp"
#include "gkmod/gaussian.hpp"
#include "gkmod/rational.hpp"

namespace gkmod {

namespace detail {

// Bound for trial division when extracting square parts. Anything that
// survives division by all primes <= kFactorBound and is below its cube with
// no perfect-square remainder is provably square-free.
inline const Int kFactorBound = 1 << 16;

// n > 0. Returns {s, f} with n == s^2 * f and f square-free.
inline std::pair<Int, Int> split_square(Int n) {
    if (n <= 0) throw std::domain_error("split_square requires a positive integer");
    Int s = 1;
    Int f = 1;
    const auto extract = [&](const Int& d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) s *= d;
        if (e % 2 == 1) f *= d;
    };
    extract(2);
    for (Int d = 3; d <= kFactorBound && d * d <= n; d += 2) extract(d);
    if (n > 1) {
        const Int root = boost::multiprecision::sqrt(n);
        if (root * root == n) {
            s *= root;
        } else if (n < kFactorBound * kFactorBound * kFactorBound) {
            // No factor <= kFactorBound remains and n < bound^3, so n has at
            // most two prime factors; not a square means square-free.
            f *= n;
        } else {
            throw std::domain_error("radicand too large to normalize exactly: " + n.str());
        }
    }
    return {s, f};
}

} // namespace detail

class RadicalScalar {
public:
    RadicalScalar() : c_(0), q_(1) {}
    RadicalScalar(int n) : c_(n), q_(1) {}            // NOLINT: intentional implicit
    RadicalScalar(const Rat& r) : c_(r), q_(1) {}     // NOLINT: intentional implicit
    RadicalScalar(const CRat& c) : c_(c), q_(1) {}    // NOLINT: intentional implicit

    // Value c * sqrt(radicand); any rational radicand is accepted and brought
    // to canonical form. A negative radicand contributes a factor i to c.
    RadicalScalar(CRat c, const Rat& radicand) : c_(std::move(c)), q_(1) {
        if (c_.is_zero() || radicand == 0) {
            c_ = CRat(0);
            return;
        }
        Rat rad = radicand;
        if (rad < 0) {
            c_ = CRat(-c_.im, c_.re); // multiply by i
            rad = -rad;
        }
        if (rad == 1) return;
        const Int a = rat_num(rad);
        const Int b = rat_den(rad);
        c_ /= CRat(Rat(b));
        auto [s, f] = detail::split_square(a * b);
        c_ *= CRat(Rat(s));
        q_ = f;
    }

    static RadicalScalar sqrt_of(const Rat& x) { return RadicalScalar(CRat(1), x); }

    const CRat& coeff() const { return c_; }
    const Int& radicand() const { return q_; }

    bool is_zero() const { return c_.is_zero(); }
    bool is_rational() const { return q_ == 1 && c_.is_real(); }
    bool is_real() const { return c_.is_real(); }

    // Sign of a real value; sqrt(q) > 0, so this is the sign of the coefficient.
    int real_sign() const {
        if (!is_real()) throw std::domain_error("real_sign of a non-real radical");
        return rat_sign(c_.re);
    }

    // Exact rational part; only defined when the radical part is trivial.
    CRat rational_value() const {
        if (q_ != 1) throw std::domain_error("rational_value of a proper radical");
        return c_;
    }

    RadicalScalar conj() const { return raw(c_.conj(), q_); }

    RadicalScalar operator-() const { return raw(-c_, q_); }

    RadicalScalar inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        // 1 / (c sqrt(q)) == (1 / (c q)) sqrt(q)
        return raw(CRat(1) / (c_ * CRat(Rat(q_))), q_);
    }

    friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
        if (a.is_zero() || b.is_zero()) return RadicalScalar();
        const Int g = boost::multiprecision::gcd(a.q_, b.q_);
        // Both radicands are square-free, so (a.q/g)*(b.q/g) is square-free.
        return raw(a.c_ * b.c_ * CRat(Rat(g)), (a.q_ / g) * (b.q_ / g));
    }

    friend RadicalScalar operator/(const RadicalScalar& a, const RadicalScalar& b) {
        return a * b.inverse();
    }

    friend RadicalScalar operator+(const RadicalScalar& a, const RadicalScalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.q_ != b.q_) {
            throw NonClosedSum("sum of sqrt(" + a.q_.str() + ") and sqrt(" + b.q_.str() +
                               ") terms leaves the one-radical scalar model");
        }
        const CRat c = a.c_ + b.c_;
        if (c.is_zero()) return RadicalScalar();
        return raw(c, a.q_);
    }

    friend RadicalScalar operator-(const RadicalScalar& a, const RadicalScalar& b) {
        return a + (-b);
    }

    friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
        return a.c_ == b.c_ && a.q_ == b.q_;
    }
    friend bool operator!=(const RadicalScalar& a, const RadicalScalar& b) { return !(a == b); }

    std::complex<double> to_float() const {
        return to_complex(c_) * std::sqrt(to_double(q_));
    }

    std::string str() const {
        if (q_ == 1) return format_crat(c_);
        if (c_ == CRat(1)) return "sqrt(" + q_.str() + ")";
        return "(" + format_crat(c_) + ")*sqrt(" + q_.str() + ")";
    }

private:
    static RadicalScalar raw(CRat c, Int q) {
        RadicalScalar r;
        if (c.is_zero()) return r;
        r.c_ = std::move(c);
        r.q_ = std::move(q);
        return r;
    }

    CRat c_;
    Int q_;
};

inline std::complex<double> to_complex(const RadicalScalar& x) { return x.to_float(); }

} // namespace gkmod
