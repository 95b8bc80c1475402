#pragma once

// Finite continued fractions over exact rationals.
//
// A value [a0; a1, a2, ...] stands for a0 + 1/(a1 + 1/(a2 + ...)). a0 may be
// any integer; every later quotient must be >= 1. Expansion always yields the
// canonical form (final quotient > 1 unless there is a single element);
// evaluation also accepts the equivalent trailing-1 variant, which recovery
// produces naturally.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ratrec/bigint.hpp"
#include "ratrec/rational.hpp"

namespace ratrec {

class ContinuedFraction {
public:
    explicit ContinuedFraction(std::vector<BigInt> quotients)
        : quotients_(std::move(quotients)) {
        if (quotients_.empty())
            throw std::invalid_argument("ContinuedFraction: needs at least one quotient");
        for (std::size_t i = 1; i < quotients_.size(); ++i) {
            if (quotients_[i] < BigInt(1))
                throw std::invalid_argument(
                    "ContinuedFraction: partial quotient at index " + std::to_string(i) +
                    " must be >= 1");
        }
    }

    std::size_t size() const { return quotients_.size(); }
    const BigInt& operator[](std::size_t i) const { return quotients_[i]; }
    const std::vector<BigInt>& quotients() const { return quotients_; }

    bool is_canonical() const {
        return quotients_.size() == 1 || quotients_.back() > BigInt(1);
    }

    std::string to_string() const {
        std::string out = "[" + quotients_[0].to_string();
        for (std::size_t i = 1; i < quotients_.size(); ++i) {
            out += i == 1 ? "; " : ", ";
            out += quotients_[i].to_string();
        }
        out += "]";
        return out;
    }

    friend bool operator==(const ContinuedFraction& a, const ContinuedFraction& b) {
        return a.quotients_ == b.quotients_;
    }

private:
    std::vector<BigInt> quotients_;
};

// One row of the convergent recurrence h_i = a_i h_{i-1} + h_{i-2},
// k_i = a_i k_{i-1} + k_{i-2} with seeds h_{-1}=1, h_{-2}=0, k_{-1}=0,
// k_{-2}=1. h/k is already reduced: adjacent rows satisfy
// k_i h_{i-1} - k_{i-1} h_i = (-1)^i.
struct ConvergentStep {
    std::size_t index;
    BigInt quotient;
    BigInt h;
    BigInt k;

    Rational value() const { return Rational(h, k); }
};

// Canonical expansion by the Euclidean quotient chain. Total on rationals;
// the remainder chain strictly decreases, so it terminates.
inline ContinuedFraction cf_expand(const Rational& x) {
    std::vector<BigInt> quotients;
    BigInt a = x.floor();
    Rational rest = x - Rational(a);
    quotients.push_back(std::move(a));
    while (!rest.is_zero()) {
        Rational inv = rest.reciprocal();
        BigInt q = inv.floor();
        rest = inv - Rational(q);
        quotients.push_back(std::move(q));
    }
    return ContinuedFraction(std::move(quotients));
}

// Convergent rows for each quotient. The final row equals the value exactly.
inline std::vector<ConvergentStep> convergents(const ContinuedFraction& cf) {
    std::vector<ConvergentStep> steps;
    steps.reserve(cf.size());
    BigInt h_prev(1), h_prev2(0), k_prev(0), k_prev2(1);
    for (std::size_t i = 0; i < cf.size(); ++i) {
        const BigInt& a = cf[i];
        BigInt h = a * h_prev + h_prev2;
        BigInt k = a * k_prev + k_prev2;
        steps.push_back(ConvergentStep{i, a, h, k});
        h_prev2 = std::move(h_prev);
        h_prev = std::move(h);
        k_prev2 = std::move(k_prev);
        k_prev = std::move(k);
    }
    return steps;
}

// Exact value of a finite continued fraction (trailing quotient 1 accepted).
inline Rational cf_eval(const ContinuedFraction& cf) {
    BigInt h_prev(1), h_prev2(0), k_prev(0), k_prev2(1);
    for (std::size_t i = 0; i < cf.size(); ++i) {
        BigInt h = cf[i] * h_prev + h_prev2;
        BigInt k = cf[i] * k_prev + k_prev2;
        h_prev2 = std::move(h_prev);
        h_prev = std::move(h);
        k_prev2 = std::move(k_prev);
        k_prev = std::move(k);
    }
    return Rational(std::move(h_prev), std::move(k_prev));
}

// The two-sided error bounds 1/(k_n(k_{n+1}+k_n)) < |x - h_n/k_n| < 1/(k_n k_{n+1}).
struct ConvergentErrorBound {
    std::size_t index;
    Rational lower;
    Rational upper;
    Rational actual;
};

// Emits bounds for each index n with n+2 <= final index. The last two rows of
// a finite expansion are excluded: at the final row the error is 0 and one row
// earlier it equals the upper bound exactly, so the strict sandwich only holds
// strictly below that.
inline std::vector<ConvergentErrorBound> convergent_error_bounds(
    const Rational& x, const std::vector<ConvergentStep>& steps) {
    std::vector<ConvergentErrorBound> out;
    if (steps.size() < 3) return out;
    for (std::size_t n = 0; n + 2 < steps.size(); ++n) {
        const BigInt& kn = steps[n].k;
        const BigInt& kn1 = steps[n + 1].k;
        out.push_back(ConvergentErrorBound{
            n,
            Rational(BigInt(1), kn * (kn1 + kn)),
            Rational(BigInt(1), kn * kn1),
            (x - steps[n].value()).abs(),
        });
    }
    return out;
}

}  // namespace ratrec
