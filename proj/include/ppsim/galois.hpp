// galois.hpp
// GF(p) arithmetic for prime p, monic polynomial handling, and LFSR
// m-sequence generation with primitivity verification by full-period check.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ppsim/common.hpp"

namespace ppsim {

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Group label for sequences: a coefficient vector of length s over GF(p).
// Element-wise product of two phase sequences in a set corresponds to
// addition of their labels mod p.
struct FieldElement {
    std::vector<int> coeffs;

    bool is_zero() const {
        for (int c : coeffs) {
            if (c != 0) return false;
        }
        return true;
    }

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
    friend auto operator<=>(const FieldElement& a, const FieldElement& b) {
        return a.coeffs <=> b.coeffs;
    }
};

inline FieldElement zero_element(int s) {
    return FieldElement{std::vector<int>(static_cast<std::size_t>(s), 0)};
}

inline FieldElement add(const FieldElement& a, const FieldElement& b, int p) {
    if (a.coeffs.size() != b.coeffs.size()) {
        throw std::invalid_argument("field elements have mismatched degree");
    }
    FieldElement r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        r.coeffs[i] = (r.coeffs[i] + b.coeffs[i]) % p;
    }
    return r;
}

inline FieldElement negate(const FieldElement& a, int p) {
    FieldElement r = a;
    for (int& c : r.coeffs) c = (p - c) % p;
    return r;
}

inline FieldElement subtract(const FieldElement& a, const FieldElement& b, int p) {
    return add(a, negate(b, p), p);
}

// Parameters of one sequence set: prime p, degree s, and a monic primitive
// polynomial over GF(p) given as poly[i] = coefficient of x^i (size s+1).
// The derived sequence length is L = p^s.
struct PpsParams {
    int p = 2;
    int s = 1;
    std::vector<int> poly;

    long length() const {
        long n = 1;
        for (int i = 0; i < s; ++i) n *= p;
        return n;
    }
    long period() const { return length() - 1; }

    void validate() const {
        if (!is_prime(p)) {
            throw std::invalid_argument("p must be prime, got " + std::to_string(p));
        }
        if (s < 1) {
            throw std::invalid_argument("degree s must be >= 1, got " + std::to_string(s));
        }
        if (poly.size() != static_cast<std::size_t>(s) + 1) {
            throw std::invalid_argument("polynomial must have s+1 coefficients");
        }
        if (poly.back() != 1) {
            throw std::invalid_argument("polynomial must be monic");
        }
        for (int c : poly) {
            if (c < 0 || c >= p) {
                throw std::invalid_argument("polynomial coefficients must lie in [0, p)");
            }
        }
    }

    friend bool operator==(const PpsParams&, const PpsParams&) = default;
};

// Fibonacci-style LFSR for the recurrence
//   a_n = -(c_{s-1} a_{n-1} + ... + c_0 a_{n-s}) mod p
// where c_i are the low-order coefficients of the monic polynomial.
// State holds the window (a_{n-s}, ..., a_{n-1}).
class Lfsr {
  public:
    explicit Lfsr(const PpsParams& params)
        : p_(params.p), taps_(params.poly.begin(), params.poly.end() - 1),
          state_(seed_state(params.s)) {}

    static std::vector<int> seed_state(int s) {
        std::vector<int> st(static_cast<std::size_t>(s), 0);
        st.back() = 1;
        return st;
    }

    const std::vector<int>& state() const { return state_; }

    // Emits a_{n-s} (the oldest symbol) and advances one step.
    int step() {
        long acc = 0;
        for (std::size_t i = 0; i < taps_.size(); ++i) {
            acc += static_cast<long>(taps_[i]) * state_[i];
        }
        int next = static_cast<int>(((p_ - acc % p_) % p_ + p_) % p_);
        int out = state_.front();
        state_.erase(state_.begin());
        state_.push_back(next);
        return out;
    }

  private:
    int p_;
    std::vector<int> taps_;
    std::vector<int> state_;
};

// True iff the register driven by params.poly from a nonzero seed returns to
// the seed after exactly p^s - 1 steps. Polynomials divisible by x never
// revisit the seed and fall out of the capped search.
inline bool verify_primitive(const PpsParams& params) {
    params.validate();
    const long full = params.period();
    Lfsr reg(params);
    const std::vector<int> seed = reg.state();
    for (long t = 1; t <= full; ++t) {
        reg.step();
        if (reg.state() == seed) return t == full;
    }
    return false;
}

// Base m-sequence of length p^s - 1. Every nonzero symbol occurs p^(s-1)
// times and zero occurs p^(s-1) - 1 times.
inline std::vector<int> generate_m_sequence(const PpsParams& params) {
    if (!verify_primitive(params)) {
        throw std::invalid_argument(
            "polynomial is not primitive over GF(" + std::to_string(params.p) +
            "): full period " + std::to_string(params.period()) + " not reached");
    }
    Lfsr reg(params);
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(params.period()));
    for (long n = 0; n < params.period(); ++n) seq.push_back(reg.step());
    return seq;
}

// Built-in monic primitives for small (p, s). Construction re-verifies each
// entry by the period check, so a bad entry cannot slip through silently.
inline const std::map<std::pair<int, int>, std::vector<int>>& primitive_poly_table() {
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 1}, {1, 1}},              // x + 1
        {{2, 2}, {1, 1, 1}},           // x^2 + x + 1
        {{2, 3}, {1, 1, 0, 1}},        // x^3 + x + 1
        {{2, 4}, {1, 1, 0, 0, 1}},     // x^4 + x + 1
        {{2, 5}, {1, 0, 1, 0, 0, 1}},  // x^5 + x^2 + 1
        {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
        {{3, 1}, {1, 1}},              // x + 1
        {{3, 2}, {2, 1, 1}},           // x^2 + x + 2
        {{3, 3}, {1, 2, 0, 1}},        // x^3 + 2x + 1
        {{5, 1}, {3, 1}},              // x + 3
        {{5, 2}, {2, 1, 1}},           // x^2 + x + 2
        {{7, 1}, {4, 1}},              // x + 4
        {{7, 2}, {3, 1, 1}},           // x^2 + x + 3
    };
    return table;
}

inline PpsParams default_params(int p, int s) {
    auto it = primitive_poly_table().find({p, s});
    if (it == primitive_poly_table().end()) {
        throw std::invalid_argument("no built-in primitive polynomial for p=" +
                                    std::to_string(p) + ", s=" + std::to_string(s) +
                                    "; pass one explicitly");
    }
    return PpsParams{p, s, it->second};
}

}  // namespace ppsim
