#pragma once

/**
 * @file gaussian.hpp
 * @brief Gaussian rationals: exact complex numbers with rational parts.
 */

#include <complex>
#include <stdexcept>
#include <string>

#include "gkmod/rational.hpp"

namespace gkmod {

struct CRat {
    Rat re;
    Rat im;

    CRat() : re(0), im(0) {}
    CRat(int n) : re(n), im(0) {}                 // NOLINT: intentional implicit
    CRat(const Rat& r) : re(r), im(0) {}          // NOLINT: intentional implicit
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    CRat conj() const { return CRat(re, -im); }

    // |z|^2, an exact nonnegative rational.
    Rat norm() const { return re * re + im * im; }

    CRat operator-() const { return CRat(-re, -im); }

    CRat& operator+=(const CRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    CRat& operator-=(const CRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    CRat& operator*=(const CRat& o) {
        const Rat r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    CRat& operator/=(const CRat& o) {
        const Rat n = o.norm();
        if (n == 0) throw std::domain_error("division by zero Gaussian rational");
        const Rat r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = r;
        return *this;
    }

    friend CRat operator+(CRat a, const CRat& b) { return a += b; }
    friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
    friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
    friend CRat operator/(CRat a, const CRat& b) { return a /= b; }
    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }
};

inline std::complex<double> to_complex(const CRat& z) {
    return {to_double(z.re), to_double(z.im)};
}

inline std::string format_crat(const CRat& z) {
    if (z.is_real()) return format_rat(z.re);
    std::string s = format_rat(z.re);
    s += (z.im < 0 ? " - " : " + ");
    s += format_rat(rat_abs(z.im));
    s += "i";
    return s;
}

} // namespace gkmod
