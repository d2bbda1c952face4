#pragma once

/**
 * @file nu.hpp
 * @brief The continuous family parameter: exact real, exact imaginary, or float.
 */

#include <complex>
#include <optional>
#include <string>
#include <variant>

#include "gkmod/errors.hpp"
#include "gkmod/gaussian.hpp"
#include "gkmod/rational.hpp"

namespace gkmod {

struct ExactReal {
    Rat value;
    friend bool operator==(const ExactReal&, const ExactReal&) = default;
};

// The parameter i*t for exact rational t.
struct ExactImaginary {
    Rat t;
    friend bool operator==(const ExactImaginary&, const ExactImaginary&) = default;
};

struct FloatNu {
    std::complex<double> z;
    friend bool operator==(const FloatNu&, const FloatNu&) = default;
};

using NuParameter = std::variant<ExactReal, ExactImaginary, FloatNu>;

inline NuParameter nu_real(const Rat& v) { return ExactReal{v}; }
inline NuParameter nu_real(long v) { return ExactReal{Rat(v)}; }
inline NuParameter nu_imag(const Rat& t) { return ExactImaginary{t}; }
inline NuParameter nu_float(std::complex<double> z) { return FloatNu{z}; }

inline bool is_exact(const NuParameter& nu) { return !std::holds_alternative<FloatNu>(nu); }

inline std::complex<double> to_complex(const NuParameter& nu) {
    if (const auto* r = std::get_if<ExactReal>(&nu)) return {to_double(r->value), 0.0};
    if (const auto* i = std::get_if<ExactImaginary>(&nu)) return {0.0, to_double(i->t)};
    return std::get<FloatNu>(nu).z;
}

// Exact Gaussian-rational value; refuses the float branch.
inline CRat as_crat(const NuParameter& nu) {
    if (const auto* r = std::get_if<ExactReal>(&nu)) return CRat(r->value);
    if (const auto* i = std::get_if<ExactImaginary>(&nu)) return CRat(Rat(0), i->t);
    throw FloatNotSupported("exact value requested from a float parameter");
}

// True when the parameter is an exact integer of parity opposite to eps,
// i.e. lies in Z_{-eps}. Exact imaginary 0 counts as the integer 0.
inline bool is_reducibility_point(const NuParameter& nu, int eps) {
    Rat v;
    if (const auto* r = std::get_if<ExactReal>(&nu)) {
        v = r->value;
    } else if (const auto* i = std::get_if<ExactImaginary>(&nu)) {
        if (i->t != 0) return false;
        v = 0;
    } else {
        return false;
    }
    if (!is_integer(v)) return false;
    const bool even = rat_num(v) % 2 == 0;
    return even == (eps == -1);
}

// The integer value when is_reducibility_point holds.
inline std::optional<long> reducibility_integer(const NuParameter& nu, int eps) {
    if (!is_reducibility_point(nu, eps)) return std::nullopt;
    if (const auto* r = std::get_if<ExactReal>(&nu)) return rat_num(r->value).convert_to<long>();
    return 0L; // exact imaginary 0
}

// nu^2 - 1 as an exact scalar; this is the expected infinitesimal-character value.
inline CRat nu_squared_minus_one(const NuParameter& nu) {
    const CRat z = as_crat(nu);
    return z * z - CRat(1);
}

// Exact parameter strings: "7/2", "-5/2", "i", "2i", "i/3", "i*3/4", "-i/2".
inline NuParameter parse_nu(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty parameter string");
    const std::size_t ipos = s.find('i');
    if (ipos == std::string::npos) return nu_real(parse_rat(s));
    if (s.find('i', ipos + 1) != std::string::npos)
        throw std::invalid_argument("not a parameter: '" + text + "'");
    int sign = 1;
    std::size_t start = 0;
    if (s[0] == '+' || s[0] == '-') {
        if (s[0] == '-') sign = -1;
        start = 1;
    }
    std::string before = s.substr(start, ipos - start);
    std::string after = s.substr(ipos + 1);
    if (!before.empty() && before.back() == '*') before.pop_back();
    if (!after.empty() && after.front() == '*') after = after.substr(1);
    std::string mag = before + after;
    if (mag.empty()) mag = "1";
    if (mag.front() == '/') mag = "1" + mag;
    return nu_imag(Rat(sign) * parse_rat(mag));
}

inline std::string format_nu(const NuParameter& nu) {
    if (const auto* r = std::get_if<ExactReal>(&nu)) return format_rat(r->value);
    if (const auto* i = std::get_if<ExactImaginary>(&nu)) {
        const Rat& t = i->t;
        if (t == 1) return "i";
        if (t == -1) return "-i";
        if (is_integer(t)) return format_rat(t) + "i";
        return (t < 0 ? "-i*" : "i*") + format_rat(rat_abs(t));
    }
    const auto z = std::get<FloatNu>(nu).z;
    return "float(" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
}

} // namespace gkmod
