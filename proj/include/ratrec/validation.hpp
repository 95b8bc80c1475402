#pragma once

// Independent cross-checks for recovery:
//
//  * farey_oracle: exhaustive nearest-fraction search over every denominator
//    up to N. Slow but trustworthy ground truth for the uniqueness radius.
//  * make_counterexample: the family (n-1)/n with a crafted approximation
//    whose error 1/(2n(n-1)+1) lies strictly between the recovery radius
//    1/(4n(n-1)) and the uniqueness radius 1/(2n(n-1)): the unique candidate
//    exists but the continued-fraction method misses it.
//  * trace_residuals: runs the approximation's quotient chain against the
//    target's Euclidean remainder chain and records the deviations d_i, whose
//    step-to-step contraction is what makes recovery work.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ratrec/bounds.hpp"
#include "ratrec/continued_fraction.hpp"
#include "ratrec/errors.hpp"
#include "ratrec/rational.hpp"
#include "ratrec/recovery.hpp"

namespace ratrec {

inline constexpr unsigned long long kDefaultOracleScanLimit = 100000;

// Scans every denominator q in [1, N], takes the nearest numerator for each,
// and returns the overall closest fraction if it lies strictly inside the
// uniqueness radius 1/(2N(N-1)). Ties prefer the smaller denominator. O(N),
// guarded against oversized scans.
inline std::optional<Rational> farey_oracle(
    const Rational& approx, const BoundedTarget& bound,
    unsigned long long scan_limit = kDefaultOracleScanLimit) {
    if (bound.value() > BigInt(static_cast<long long>(scan_limit)))
        throw CapacityError("farey_oracle: bound " + bound.value().to_string() +
                            " exceeds the exhaustive-search guard " +
                            std::to_string(scan_limit));
    const unsigned long long n_max = *bound.value().to_unsigned_long_long();
    const BigInt& num = approx.numerator();
    const BigInt& den = approx.denominator();

    // error at p/q is |num*q - p*den| / (den*q); den cancels in comparisons
    BigInt best_err_scaled;
    BigInt best_p, best_q;
    for (unsigned long long q = 1; q <= n_max; ++q) {
        BigInt qb(static_cast<long long>(q));
        BigInt t = num * qb;
        BigInt p, r;
        BigInt::divmod(t, den, p, r);
        if (r.sign() < 0) {
            p = p - BigInt(1);
            r = r + den;
        }
        BigInt err_up = den - r;
        if (err_up < r) {
            p = p + BigInt(1);
            r = std::move(err_up);
        }
        if (best_q.is_zero() || r * best_q < best_err_scaled * qb) {
            best_err_scaled = std::move(r);
            best_p = std::move(p);
            best_q = std::move(qb);
        }
    }

    // best error < 1/(2N(N-1))  <=>  err_scaled * 2N(N-1) < den * q
    BigInt radius_den = BigInt(2) * bound.value() * (bound.value() - BigInt(1));
    if (best_err_scaled * radius_den < den * best_q)
        return Rational(std::move(best_p), std::move(best_q));
    return std::nullopt;
}

struct CounterexampleInstance {
    long long n;
    Rational target;  // (n-1)/n
    Rational approx;  // (2n + 2n^3 - 4n^2 - 1) / ((2n^2 - 2n + 1) n)
    Rational error;   // exactly 1/(2n(n-1)+1)
};

// Builds the family member for n >= 3. n = 2 is rejected: the family's
// quotient pattern [0; 1, n-2, 2, n, n-1] degenerates to a zero partial
// quotient there.
inline CounterexampleInstance make_counterexample(long long n) {
    if (n < 3)
        throw std::domain_error("make_counterexample: n must be at least 3");
    BigInt nb(n);
    BigInt n2 = nb * nb;
    BigInt n3 = n2 * nb;
    Rational target(nb - BigInt(1), nb);
    Rational approx(BigInt(2) * nb + BigInt(2) * n3 - BigInt(4) * n2 - BigInt(1),
                    (BigInt(2) * n2 - BigInt(2) * nb + BigInt(1)) * nb);
    Rational error = (approx - target).abs();
    return CounterexampleInstance{n, std::move(target), std::move(approx), std::move(error)};
}

struct GapReport {
    CounterexampleInstance instance;
    RecoveryResult cf;                 // what continued fractions return
    std::optional<Rational> oracle;    // what exhaustive search returns
    bool error_above_improved = false;
    bool error_within_uniqueness = false;
    bool cf_missed = false;
    bool oracle_hit = false;

    // The counterexample works iff uniqueness holds, the CF method misses the
    // target, and the oracle still finds it.
    bool gap_shown() const { return error_within_uniqueness && cf_missed && oracle_hit; }
};

// Runs both recovery routes on the counterexample at N = n.
inline GapReport demonstrate_gap(long long n,
                                 unsigned long long scan_limit = kDefaultOracleScanLimit) {
    CounterexampleInstance inst = make_counterexample(n);
    BoundedTarget bound(n);
    GapReport report{inst, recover(inst.approx, bound), farey_oracle(inst.approx, bound, scan_limit)};
    report.error_above_improved = inst.error > threshold_improved(bound);
    report.error_within_uniqueness = inst.error < threshold_uniqueness(bound);
    report.cf_missed = !(report.cf.recovered == inst.target);
    report.oracle_hit = report.oracle.has_value() && *report.oracle == inst.target;
    return report;
}

// Paired expansion chains of a target n2/n1 in (0,1) and its approximation.
//
// target_remainders holds the Euclidean chain n_1, n_2, ..., n_{L+1} (the last
// entry is 1 since the target is reduced); quotients holds the agreed quotient
// prefix starting at a_0 = b_0 = 0; residuals r_k and deviations
// d_k = r_k - n_{k+2}/n_{k+1} are recorded for k = 0 .. agreed prefix end
// (at most L-1). Empty residuals mean the chains disagreed at step 0.
struct ResidualTrace {
    std::vector<BigInt> target_remainders;
    std::vector<BigInt> quotients;
    std::vector<Rational> residuals;
    std::vector<Rational> deviations;

    std::size_t steps() const { return deviations.size(); }

    // |d_k| < 1/(n_{k+1}(n_{k+1}-1))
    bool hypothesis_holds(std::size_t k) const {
        const BigInt& n_k1 = target_remainders[k];
        return deviations[k].abs() < Rational(BigInt(1), n_k1 * (n_k1 - BigInt(1)));
    }

    // |d_{k+1}| < (n_{k+1}(n_{k+1}-1) / (n_{k+2}(n_{k+2}-1))) * |d_k|.
    // An exactly zero residual propagates as zero, which counts as holding.
    bool contraction_holds(std::size_t k) const {
        const BigInt& n_k1 = target_remainders[k];
        const BigInt& n_k2 = target_remainders[k + 1];
        if (deviations[k].is_zero()) return deviations[k + 1].is_zero();
        Rational ratio(n_k1 * (n_k1 - BigInt(1)), n_k2 * (n_k2 - BigInt(1)));
        return deviations[k + 1].abs() < ratio * deviations[k].abs();
    }

    // Whether the agreed prefix extends all the way to index L-1, where the
    // final-step case takes over.
    bool reached_final_step() const {
        return !target_remainders.empty() && deviations.size() + 1 == target_remainders.size();
    }

    // Final-step condition |d_{L-1}| < 1/(n_L(n_L+1)), which ensures the last
    // quotient lands on a_L or a_L - 1. When it fails, the approximation's
    // expansion drifts off the target's and recovery misses.
    bool final_step_hypothesis_holds() const {
        const BigInt& n_last = target_remainders[deviations.size() - 1];  // n_L
        return deviations.back().abs() < Rational(BigInt(1), n_last * (n_last + BigInt(1)));
    }
};

inline ResidualTrace trace_residuals(const Rational& target, const Rational& approx) {
    if (!(target > Rational(0)) || !(target < Rational(1)) || target.is_integer())
        throw std::domain_error("trace_residuals: target must be a proper fraction in (0,1)");

    ResidualTrace trace;
    // Euclid chain n_1 = denominator, n_2 = numerator, n_{i+2} = n_i mod n_{i+1};
    // ends at n_{L+1} = 1 because the target is stored reduced.
    trace.target_remainders.push_back(target.denominator());
    trace.target_remainders.push_back(target.numerator());
    while (!trace.target_remainders.back().is_one()) {
        const BigInt& a = trace.target_remainders[trace.target_remainders.size() - 2];
        const BigInt& b = trace.target_remainders.back();
        trace.target_remainders.push_back(a % b);
    }
    const std::size_t chain_len = trace.target_remainders.size();  // L + 1

    if (!(approx.floor() == BigInt(0))) return trace;  // disagreement at step 0
    trace.quotients.push_back(BigInt(0));

    Rational r = approx;  // r_0
    for (std::size_t k = 0; k + 2 <= chain_len; ++k) {
        trace.residuals.push_back(r);
        trace.deviations.push_back(
            r - Rational(trace.target_remainders[k + 1], trace.target_remainders[k]));
        if (k + 2 == chain_len) break;  // d_{L-1} recorded; the rest is the final step
        // advance both chains: requires the next quotients to agree
        BigInt a_next = trace.target_remainders[k] / trace.target_remainders[k + 1];
        if (r.is_zero()) break;
        Rational inv = r.reciprocal();
        BigInt b_next = inv.floor();
        if (!(a_next == b_next)) break;
        trace.quotients.push_back(b_next);
        r = inv - Rational(std::move(b_next));
    }
    return trace;
}

}  // namespace ratrec
