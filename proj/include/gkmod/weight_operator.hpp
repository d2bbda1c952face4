#pragma once

/**
 * @file weight_operator.hpp
 * @brief Banded operators on a truncated weight basis.
 */

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "gkmod/radical.hpp"
#include "gkmod/window.hpp"

namespace gkmod {

// Maps v_j to entry(j) * v_{j+shift}. Entries whose source or target falls
// outside the window are not stored; absence means "dropped by truncation",
// which is distinct from a stored exact zero.
template <class S>
class WeightOperator {
public:
    WeightOperator(WeightWindow window, int shift) : window_(window), shift_(shift) {
        if (shift != -2 && shift != 0 && shift != 2)
            throw std::invalid_argument("weight shift must be -2, 0, or +2");
    }

    const WeightWindow& window() const { return window_; }
    int shift() const { return shift_; }

    void set(int j, S value) {
        if (!window_.contains(j) || !window_.contains(j + shift_))
            throw std::out_of_range("operator entry outside window: weight " + std::to_string(j));
        entries_[j] = std::move(value);
    }

    bool has(int j) const { return entries_.count(j) != 0; }

    const S& at(int j) const {
        const auto it = entries_.find(j);
        if (it == entries_.end())
            throw std::out_of_range("no operator entry at weight " + std::to_string(j));
        return it->second;
    }

    const std::map<int, S>& entries() const { return entries_; }

    friend bool operator==(const WeightOperator& a, const WeightOperator& b) {
        return a.window_ == b.window_ && a.shift_ == b.shift_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const WeightOperator& a, const WeightOperator& b) { return !(a == b); }

private:
    WeightWindow window_;
    int shift_;
    std::map<int, S> entries_;
};

template <class S>
struct OperatorTriple {
    WeightOperator<S> H;
    WeightOperator<S> E;
    WeightOperator<S> F;
};

using ExactTriple = OperatorTriple<RadicalScalar>;
using FloatTriple = OperatorTriple<std::complex<double>>;

} // namespace gkmod
