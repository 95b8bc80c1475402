#include <doctest.h>

#include "ratrec/recovery.hpp"
#include "test_support.hpp"

using namespace ratrec;
using testsupport::Rng;

TEST_SUITE_BEGIN("recovery");

TEST_CASE("recover .8106421859 with N = 170") {
    RecoveryResult r = recover(parse_decimal(".8106421859"), BoundedTarget(170));
    CHECK(r.recovered == Rational(137, 169));
    CHECK(r.termination == Termination::DenominatorExceeded);
    CHECK(r.certified);
    REQUIRE(r.trail.size() == 8);
    CHECK(r.trail.back().value() == Rational(137, 169));
    REQUIRE(r.next_step.has_value());
    CHECK(r.next_step->value() == Rational(518, 639));
    CHECK(r.next_step->k > BigInt(170));
    CHECK(r.residual == Rational(14705829LL, 1690000000000LL));
}

TEST_CASE("recover .178870799516605 with N = 1790") {
    RecoveryResult r = recover(parse_decimal(".178870799516605"), BoundedTarget(1790));
    CHECK(r.recovered == Rational(320, 1789));
    CHECK(r.certified);
    REQUIRE(r.next_step.has_value());
    CHECK(r.next_step->value() == Rational(1131, 6323));
}

TEST_CASE("recover 1.881536615 with N = 18") {
    RecoveryResult r = recover(parse_decimal("1.881536615"), BoundedTarget(18));
    CHECK(r.recovered == Rational(32, 17));
    CHECK(r.certified);
    REQUIRE(r.trail.size() == 4);
    CHECK(r.trail[0].value() == Rational(1));
    CHECK(r.trail[1].value() == Rational(2));
    CHECK(r.trail[2].value() == Rational(15, 8));
    CHECK(r.trail[3].value() == Rational(32, 17));
    REQUIRE(r.next_step.has_value());
    CHECK(r.next_step->value() == Rational(111, 59));
}

TEST_CASE("counterexample input recovers the wrong value, uncertified") {
    RecoveryResult r = recover(Rational(23, 39), BoundedTarget(3));
    CHECK(r.recovered == Rational(1, 2));
    CHECK(!r.certified);
    CHECK(r.residual == Rational(7, 78));
    CHECK(r.termination == Termination::DenominatorExceeded);
}

TEST_CASE("exact short input terminates without exceeding") {
    RecoveryResult r = recover(Rational(7, 2), BoundedTarget(10));
    CHECK(r.recovered == Rational(7, 2));
    CHECK(r.termination == Termination::ExactTermination);
    CHECK(!r.next_step.has_value());
    CHECK(r.certified);
    CHECK(r.residual.is_zero());
}

TEST_CASE("zero and negative approximations") {
    RecoveryResult zero = recover(Rational(0), BoundedTarget(5));
    CHECK(zero.recovered == Rational(0));
    CHECK(zero.termination == Termination::ExactTermination);

    RecoveryResult neg = recover(parse_decimal("-.8106421859"), BoundedTarget(170));
    CHECK(neg.recovered == Rational(-137, 169));
    CHECK(neg.certified);
    // trail is for the absolute value
    CHECK(neg.trail.back().value() == Rational(137, 169));
}

TEST_CASE("trail invariants") {
    RecoveryResult r = recover(parse_decimal(".8106421859"), BoundedTarget(170));
    for (std::size_t i = 0; i < r.trail.size(); ++i) {
        CHECK(r.trail[i].index == i);
        CHECK(r.trail[i].k <= BigInt(170));
    }
    CHECK(r.recovered.denominator() <= BigInt(170));
}

TEST_CASE("bound below 2 is rejected") {
    CHECK_THROWS_AS(recover(Rational(1, 2), BoundedTarget(1)), std::domain_error);
}

TEST_CASE("certify") {
    CHECK(certify(parse_decimal(".8106421859"), Rational(137, 169), BoundedTarget(170)));
    CHECK(!certify(Rational(23, 39), Rational(1, 2), BoundedTarget(3)));
    CHECK(certify(Rational(3, 7), Rational(3, 7), BoundedTarget(7)));
    CHECK_THROWS_AS(certify(Rational(1, 2), Rational(1, 9), BoundedTarget(5)),
                    std::invalid_argument);
}

TEST_CASE("certified result agrees at the radius boundary strictly") {
    // residual exactly equal to the uniqueness radius must NOT certify
    BoundedTarget bound(3);
    Rational target(1, 2);
    Rational approx = target + threshold_uniqueness(bound);
    CHECK(!certify(approx, target, bound));
    Rational inside = target + threshold_uniqueness(bound) * Rational(99, 100);
    CHECK(certify(inside, target, bound));
}

TEST_CASE("recover_checked accepts a stated bound equal to the recovery radius") {
    CheckedRecovery c =
        recover_checked(parse_decimal(".8106421859"), BoundedTarget(170), Rational(1, 114920));
    CHECK(c.result.recovered == Rational(137, 169));
    CHECK(!c.guarantee_warning);
}

TEST_CASE("recover_checked warns when the stated bound voids the guarantee") {
    // 1/13 exceeds improved(3) = 1/24 but not uniqueness(3) = 1/12: warning,
    // and indeed recovery misses the true 2/3.
    CheckedRecovery c = recover_checked(Rational(23, 39), BoundedTarget(3), Rational(1, 13));
    CHECK(c.guarantee_warning);
    CHECK(c.result.recovered == Rational(1, 2));
}

TEST_CASE("recover_checked rejects bounds beyond the uniqueness radius") {
    CHECK_THROWS_AS(recover_checked(Rational(23, 39), BoundedTarget(3), Rational(1, 11)),
                    GuaranteeViolation);
    CHECK_NOTHROW(recover_checked(Rational(23, 39), BoundedTarget(3), Rational(1, 12)));
}

TEST_CASE("recover_checked with zero claimed error is always accepted") {
    CheckedRecovery c = recover_checked(Rational(3, 7), BoundedTarget(7), Rational(0));
    CHECK(!c.guarantee_warning);
    CHECK(c.result.recovered == Rational(3, 7));
}

TEST_CASE("soundness on a randomized grid below the recovery radius") {
    Rng rng(0x5eed0008);
    for (int trial = 0; trial < 400; ++trial) {
        long long n_bound = 2 + static_cast<long long>(rng.below(40));
        BoundedTarget bound(n_bound);
        long long den = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(n_bound)));
        long long num = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(2 * den)));
        Rational target(num, den);
        long long j = 1 + static_cast<long long>(rng.below(7));
        Rational eps = threshold_improved(bound) * Rational(j, 8);
        if (rng.flip()) eps = -eps;
        Rational approx = target + eps;

        RecoveryResult r = recover(approx, bound);
        CHECK(r.recovered == target);
        CHECK(r.certified);

        // stopping rule: once the bound is exceeded, the expansion's later
        // convergents only grow
        if (r.next_step) CHECK(r.next_step->k > bound.value());
    }
}

TEST_CASE("quotient-prefix dichotomy between target and approximation") {
    // The recovered value's canonical expansion matches the approximation's
    // quotients either fully or with the b_L = a_L - 1, b_{L+1} = 1 split.
    Rng rng(0x5eed0009);
    for (int trial = 0; trial < 300; ++trial) {
        long long n_bound = 2 + static_cast<long long>(rng.below(60));
        BoundedTarget bound(n_bound);
        long long den = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(n_bound)));
        long long num = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(2 * den)));
        Rational target(num, den);
        long long j = 1 + static_cast<long long>(rng.below(7));
        Rational eps = threshold_improved(bound) * Rational(j, 8);
        if (rng.flip()) eps = -eps;
        Rational approx = target + eps;
        if (approx.is_zero() || approx.sign() < 0) continue;

        auto a = cf_expand(target).quotients();
        auto b = cf_expand(approx).quotients();
        const std::size_t len = a.size();
        REQUIRE(b.size() >= len);
        bool full_match = std::equal(a.begin(), a.end(), b.begin());
        bool split_match = false;
        if (!full_match && b.size() >= len + 1) {
            split_match = std::equal(a.begin(), a.end() - 1, b.begin()) &&
                          b[len - 1] == a[len - 1] - BigInt(1) && b[len] == BigInt(1);
        }
        CHECK((full_match || split_match));
    }
}

TEST_CASE("determinism: identical inputs give identical results") {
    Rational approx = parse_decimal(".178870799516605");
    RecoveryResult a = recover(approx, BoundedTarget(1790));
    RecoveryResult b = recover(approx, BoundedTarget(1790));
    CHECK(a.recovered == b.recovered);
    REQUIRE(a.trail.size() == b.trail.size());
    for (std::size_t i = 0; i < a.trail.size(); ++i) {
        CHECK(a.trail[i].quotient == b.trail[i].quotient);
        CHECK(a.trail[i].h == b.trail[i].h);
        CHECK(a.trail[i].k == b.trail[i].k);
    }
    CHECK(a.certified == b.certified);
    CHECK(a.residual == b.residual);
}

TEST_SUITE_END();
