#pragma once

/**
 * @file window.hpp
 * @brief Weight parities and truncation windows for weight modules.
 */

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "gkmod/errors.hpp"

namespace gkmod {

// eps = +1 selects even weights, eps = -1 odd weights.
class Parity {
public:
    explicit Parity(int eps) : eps_(eps) {
        if (eps != 1 && eps != -1) throw std::invalid_argument("parity sign must be +1 or -1");
    }

    int sign() const { return eps_; }
    bool contains(int j) const { return (j % 2 == 0) == (eps_ == 1); }
    Parity opposite() const { return Parity(-eps_); }

    friend bool operator==(const Parity& a, const Parity& b) { return a.eps_ == b.eps_; }

private:
    int eps_;
};

// The finite weight set {j : (-1)^j = eps, |j| <= bound}. Bounds below 6 leave
// no interior weight to verify anything on, so they are rejected.
class WeightWindow {
public:
    WeightWindow(Parity parity, int bound) : parity_(parity), bound_(bound) {
        if (bound < 6)
            throw WindowTooSmall("window bound " + std::to_string(bound) + " < 6");
    }

    const Parity& parity() const { return parity_; }
    int bound() const { return bound_; }

    bool contains(int j) const { return std::abs(j) <= bound_ && parity_.contains(j); }

    int lowest() const { return parity_.contains(-bound_) ? -bound_ : -bound_ + 1; }
    int highest() const { return parity_.contains(bound_) ? bound_ : bound_ - 1; }

    std::vector<int> weights() const {
        std::vector<int> w;
        for (int j = lowest(); j <= highest(); j += 2) w.push_back(j);
        return w;
    }

    // Weights far enough from the edge that every bracket operand exists.
    int interior_bound() const { return bound_ - 4; }
    bool is_interior(int j) const {
        return std::abs(j) <= interior_bound() && parity_.contains(j);
    }

    // Opposite-parity points m with both neighbours m-1, m+1 in the window;
    // each carries one raising and one lowering coefficient.
    std::vector<int> midpoints() const {
        std::vector<int> ms;
        for (int m = lowest() + 1; m <= highest() - 1; m += 2) ms.push_back(m);
        return ms;
    }

    friend bool operator==(const WeightWindow& a, const WeightWindow& b) {
        return a.parity_ == b.parity_ && a.bound_ == b.bound_;
    }

private:
    Parity parity_;
    int bound_;
};

} // namespace gkmod
