#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars and string/float conversions.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace gkmod {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline int rat_sign(const Rat& r) { return r.sign(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline double to_double(const Int& n) { return n.convert_to<double>(); }

// "p" or "p/q" in lowest-terms-friendly form; q == 1 prints as "p".
inline std::string format_rat(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) {
        s += '/';
        s += rat_den(r).str();
    }
    return s;
}

// Accepts "p", "p/q", optional leading sign on p. Den must be a positive integer.
inline Rat parse_rat(const std::string& text) {
    const auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("not a rational: '" + text + "'");
    };
    if (text.empty()) throw bad();
    std::size_t pos = 0;
    if (text[pos] == '+' || text[pos] == '-') ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) throw bad();
    Int num(text.substr(0, pos));
    Int den(1);
    if (pos != text.size()) {
        if (text[pos] != '/') throw bad();
        ++pos;
        const std::size_t den_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == den_start || pos != text.size()) throw bad();
        den = Int(text.substr(den_start));
        if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    }
    return Rat(num, den);
}

} // namespace gkmod
