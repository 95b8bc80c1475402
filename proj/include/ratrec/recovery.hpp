#pragma once

// Recovering the denominator-bounded rational hidden behind an approximation.
//
// The approximation is expanded as a continued fraction one quotient at a
// time; the answer is the last convergent whose denominator stays within the
// bound N. If the true value m/n has n <= N and the approximation error is
// below 1/(4N(N-1)), this returns exactly m/n, and every convergent past the
// returned one has denominator > N, so stopping at the first overflow is safe.
// A result is certified when its residual is inside the uniqueness radius
// 1/(2N(N-1)): no other rational with denominator <= N can sit that close.

#include <optional>
#include <utility>
#include <vector>

#include "ratrec/bounds.hpp"
#include "ratrec/continued_fraction.hpp"
#include "ratrec/errors.hpp"
#include "ratrec/rational.hpp"

namespace ratrec {

enum class Termination {
    DenominatorExceeded,  // stopped at the first convergent with k > N
    ExactTermination,     // the expansion ended with every denominator <= N
};

struct RecoveryResult {
    Rational recovered;
    // Convergent rows of |approx| with denominator <= N; the last row is the
    // recovered value (up to sign).
    std::vector<ConvergentStep> trail;
    // The first row whose denominator exceeds N, present iff the bound was hit.
    std::optional<ConvergentStep> next_step;
    Termination termination = Termination::ExactTermination;
    bool certified = false;
    Rational residual;  // |approx - recovered|
};

inline const char* to_string(Termination t) {
    return t == Termination::DenominatorExceeded ? "DenominatorExceeded"
                                                 : "ExactTermination";
}

inline RecoveryResult recover(const Rational& approx, const BoundedTarget& bound) {
    const BigInt& n_max = bound.value();
    const bool negative = approx.sign() < 0;
    const Rational magnitude = approx.abs();

    RecoveryResult result;
    BigInt h_prev(1), h_prev2(0), k_prev(0), k_prev2(1);
    Rational rest = magnitude;
    std::size_t index = 0;
    while (true) {
        BigInt a = rest.floor();
        BigInt h = a * h_prev + h_prev2;
        BigInt k = a * k_prev + k_prev2;
        if (k > n_max) {
            result.next_step = ConvergentStep{index, std::move(a), std::move(h), std::move(k)};
            result.termination = Termination::DenominatorExceeded;
            result.recovered = Rational(h_prev, k_prev);
            break;
        }
        rest = rest - Rational(a);
        result.trail.push_back(ConvergentStep{index, std::move(a), h, k});
        if (rest.is_zero()) {
            result.termination = Termination::ExactTermination;
            result.recovered = Rational(std::move(h), std::move(k));
            break;
        }
        rest = rest.reciprocal();
        h_prev2 = std::move(h_prev);
        h_prev = std::move(h);
        k_prev2 = std::move(k_prev);
        k_prev = std::move(k);
        ++index;
    }

    if (negative) result.recovered = -result.recovered;
    result.residual = (approx - result.recovered).abs();
    result.certified = result.residual < threshold_uniqueness(bound);
    return result;
}

// True iff |approx - candidate| is strictly inside the uniqueness radius, in
// which case candidate is the only rational with denominator <= N that close.
inline bool certify(const Rational& approx, const Rational& candidate,
                    const BoundedTarget& bound) {
    if (candidate.denominator() > bound.value())
        throw std::invalid_argument("certify: candidate denominator exceeds the bound");
    return (approx - candidate).abs() < threshold_uniqueness(bound);
}

struct CheckedRecovery {
    RecoveryResult result;
    // Set when the stated error bound exceeds 1/(4N(N-1)): recovery may still
    // succeed but is no longer guaranteed.
    bool guarantee_warning = false;
};

// recover(), guarded by the caller's known error bound on the approximation.
// claimed_error is an exclusive bound: the caller asserts |true - approx| <
// claimed_error, so claimed_error equal to a radius still keeps the actual
// error strictly inside it. Throws GuaranteeViolation when the stated bound
// exceeds the uniqueness radius, since then even a certified answer could be
// the wrong one.
inline CheckedRecovery recover_checked(const Rational& approx, const BoundedTarget& bound,
                                       const Rational& claimed_error) {
    const Rational claimed = claimed_error.abs();
    if (claimed > threshold_uniqueness(bound))
        throw GuaranteeViolation(
            "recover_checked: claimed error " + claimed.to_string() +
            " exceeds the uniqueness radius " + threshold_uniqueness(bound).to_string());
    CheckedRecovery out;
    out.guarantee_warning = claimed > threshold_improved(bound);
    out.result = recover(approx, bound);
    return out;
}

}  // namespace ratrec
