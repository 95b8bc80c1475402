#pragma once

// Denominator bound N and the three error radii attached to it:
//
//   legacy      1/((2N+2)N(N-1))   what the earlier reconstruction required
//   improved    1/(4N(N-1))        guarantees continued-fraction recovery
//   uniqueness  1/(2N(N-1))        at most one candidate with denominator <= N
//
// legacy < improved < uniqueness for every N >= 2.

#include <stdexcept>
#include <utility>

#include "ratrec/bigint.hpp"
#include "ratrec/rational.hpp"

namespace ratrec {

// Upper bound on the denominator of the value being recovered. The smallest
// admissible bound is 2; callers that know the denominator is 1 still pass 2.
class BoundedTarget {
public:
    explicit BoundedTarget(BigInt bound) : bound_(std::move(bound)) {
        if (bound_ < BigInt(2))
            throw std::domain_error("BoundedTarget: bound must be at least 2");
    }

    explicit BoundedTarget(long long bound) : BoundedTarget(BigInt(bound)) {}

    const BigInt& value() const { return bound_; }

private:
    BigInt bound_;
};

// 1/(4N(N-1)): error radius within which recovery is guaranteed.
inline Rational threshold_improved(const BoundedTarget& target) {
    const BigInt& n = target.value();
    return Rational(BigInt(1), BigInt(4) * n * (n - BigInt(1)));
}

// 1/(2N(N-1)): error radius within which the candidate is unique.
inline Rational threshold_uniqueness(const BoundedTarget& target) {
    const BigInt& n = target.value();
    return Rational(BigInt(1), BigInt(2) * n * (n - BigInt(1)));
}

// 1/((2N+2)N(N-1)): the stricter radius the improved algorithm replaces.
inline Rational threshold_legacy(const BoundedTarget& target) {
    const BigInt& n = target.value();
    return Rational(BigInt(1), (BigInt(2) * n + BigInt(2)) * n * (n - BigInt(1)));
}

}  // namespace ratrec
