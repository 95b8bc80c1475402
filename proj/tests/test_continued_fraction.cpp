#include <doctest.h>

#include <vector>

#include "ratrec/continued_fraction.hpp"
#include "test_support.hpp"

using ratrec::BigInt;
using ratrec::ContinuedFraction;
using ratrec::ConvergentStep;
using ratrec::Rational;
using ratrec::cf_eval;
using ratrec::cf_expand;
using ratrec::convergent_error_bounds;
using ratrec::convergents;
using ratrec::parse_decimal;
using testsupport::Rng;

namespace {

ContinuedFraction cf(std::vector<long long> quotients) {
    std::vector<BigInt> q;
    for (long long v : quotients) q.push_back(BigInt(v));
    return ContinuedFraction(std::move(q));
}

std::vector<long long> quotients_of(const ContinuedFraction& c) {
    std::vector<long long> out;
    for (const BigInt& q : c.quotients()) out.push_back(*q.to_long_long());
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("continued_fraction");

TEST_CASE("expansion of known values") {
    CHECK(quotients_of(cf_expand(Rational(4, 5))) == std::vector<long long>{0, 1, 4});
    CHECK(quotients_of(cf_expand(Rational(23, 39))) == std::vector<long long>{0, 1, 1, 2, 3, 2});
    CHECK(quotients_of(cf_expand(Rational(7))) == std::vector<long long>{7});
    CHECK(quotients_of(cf_expand(Rational(137, 169))) ==
          std::vector<long long>{0, 1, 4, 3, 1, 1, 4});
}

TEST_CASE("expansion of negative and zero values uses floor") {
    CHECK(quotients_of(cf_expand(Rational(-1, 2))) == std::vector<long long>{-1, 2});
    CHECK(quotients_of(cf_expand(Rational(-7, 3))) == std::vector<long long>{-3, 1, 2});
    CHECK(quotients_of(cf_expand(Rational(0))) == std::vector<long long>{0});
    CHECK(cf_eval(cf_expand(Rational(-7, 3))) == Rational(-7, 3));
}

TEST_CASE("evaluation") {
    CHECK(cf_eval(cf({0, 1, 4})) == Rational(4, 5));
    CHECK(cf_eval(cf({7})) == Rational(7));
    CHECK(cf_eval(cf({-3})) == Rational(-3));
    // trailing-1 form denotes the same value: [0;1,3,1] = [0;1,4]
    CHECK(cf_eval(cf({0, 1, 3, 1})) == Rational(4, 5));
    CHECK(cf_eval(cf({0, 1, 4})) == cf_eval(cf({0, 1, 3, 1})));
}

TEST_CASE("invalid representations are rejected") {
    CHECK_THROWS_AS(cf({}), std::invalid_argument);
    CHECK_THROWS_AS(cf({1, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(cf({1, -2}), std::invalid_argument);
    CHECK_NOTHROW(cf({-5, 1}));
}

TEST_CASE("canonical form and display") {
    CHECK(cf_expand(Rational(4, 5)).is_canonical());
    CHECK(cf_expand(Rational(7)).is_canonical());
    CHECK(!cf({0, 1, 3, 1}).is_canonical());
    CHECK(cf_expand(Rational(4, 5)).to_string() == "[0; 1, 4]");
    CHECK(cf_expand(Rational(7)).to_string() == "[7]");
}

TEST_CASE("round-trip and canonicality over random rationals") {
    Rng rng(0x5eed0005);
    for (int i = 0; i < 500; ++i) {
        Rational x = testsupport::random_rational(rng, 20);
        ContinuedFraction c = cf_expand(x);
        CHECK(cf_eval(c) == x);
        CHECK(c.is_canonical());
        if (c.size() >= 2) CHECK(c.quotients().back() >= BigInt(2));
    }
}

TEST_CASE("convergent trail of .8106421859") {
    auto steps = convergents(cf_expand(parse_decimal(".8106421859")));
    std::vector<Rational> expected = {
        Rational(0),       Rational(1),        Rational(4, 5),    Rational(13, 16),
        Rational(17, 21),  Rational(30, 37),   Rational(107, 132), Rational(137, 169),
        Rational(518, 639),
    };
    REQUIRE(steps.size() >= expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(steps[i].value() == expected[i]);
}

TEST_CASE("convergent trail of 1.881536615") {
    auto steps = convergents(cf_expand(parse_decimal("1.881536615")));
    std::vector<Rational> expected = {Rational(1), Rational(2), Rational(15, 8), Rational(32, 17),
                                      Rational(111, 59)};
    REQUIRE(steps.size() >= expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(steps[i].value() == expected[i]);
}

TEST_CASE("single-quotient convergent") {
    auto steps = convergents(cf({7}));
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].h == BigInt(7));
    CHECK(steps[0].k == BigInt(1));
    CHECK(steps[0].index == 0);
}

TEST_CASE("recurrence identities over random rationals") {
    Rng rng(0x5eed0006);
    for (int i = 0; i < 200; ++i) {
        Rational x = testsupport::random_rational(rng, 15);
        auto steps = convergents(cf_expand(x));
        const std::size_t last = steps.size() - 1;

        CHECK(steps[last].value() == x);

        // determinant: k_i h_{i-1} - k_{i-1} h_i = (-1)^i
        for (std::size_t n = 1; n < steps.size(); ++n) {
            BigInt det = steps[n].k * steps[n - 1].h - steps[n - 1].k * steps[n].h;
            CHECK(det == BigInt(n % 2 == 0 ? 1 : -1));
        }

        // k strictly increasing from index 1 on
        for (std::size_t n = 2; n < steps.size(); ++n) CHECK(steps[n].k > steps[n - 1].k);

        // alternation: even-indexed convergents below x, odd-indexed above
        for (std::size_t n = 0; n < steps.size(); ++n) {
            if (n % 2 == 0)
                CHECK(steps[n].value() <= x);
            else
                CHECK(steps[n].value() >= x);
        }

        // each convergent strictly closer than every earlier one
        for (std::size_t s = 1; s < steps.size(); ++s) {
            Rational err_s = (x - steps[s].value()).abs();
            Rational err_r = (x - steps[s - 1].value()).abs();
            CHECK(err_s < err_r);
        }

        // consecutive gap: |h_n/k_n - h_{n-1}/k_{n-1}| = 1/(k_n k_{n-1})
        for (std::size_t n = 1; n < steps.size(); ++n) {
            Rational gap = (steps[n].value() - steps[n - 1].value()).abs();
            CHECK(gap == Rational(BigInt(1), steps[n].k * steps[n - 1].k));
        }
    }
}

TEST_CASE("two-sided error bounds sandwich") {
    Rational x(137, 169);
    auto steps = convergents(cf_expand(x));
    auto bounds = convergent_error_bounds(x, steps);
    REQUIRE(steps.size() == 7);
    REQUIRE(bounds.size() == 5);  // indices 0..L-2
    CHECK(bounds[0].lower == Rational(1, 2));
    CHECK(bounds[0].upper == Rational(1));
    CHECK(bounds[0].actual == Rational(137, 169));
    for (const auto& b : bounds) {
        CHECK(b.lower < b.actual);
        CHECK(b.actual < b.upper);
    }
}

TEST_CASE("error bounds exclude the exact tail") {
    // 4/5 = [0; 1, 4]: the final convergent has error 0 and the one before it
    // meets the upper bound exactly, so only index 0 is emitted.
    Rational x(4, 5);
    auto steps = convergents(cf_expand(x));
    auto bounds = convergent_error_bounds(x, steps);
    REQUIRE(bounds.size() == 1);
    CHECK(bounds[0].index == 0);
    CHECK((x - steps.back().value()).is_zero());
    // one step earlier the error equals 1/(k_{L-1} k_L) exactly
    Rational second_last_err = (x - steps[steps.size() - 2].value()).abs();
    CHECK(second_last_err == Rational(BigInt(1), steps[steps.size() - 2].k * steps.back().k));
}

TEST_CASE("error bounds hold on random rationals") {
    Rng rng(0x5eed0007);
    for (int i = 0; i < 200; ++i) {
        Rational x = testsupport::random_rational(rng, 12);
        auto steps = convergents(cf_expand(x));
        for (const auto& b : convergent_error_bounds(x, steps)) {
            CHECK(b.lower < b.actual);
            CHECK(b.actual < b.upper);
        }
    }
}

TEST_SUITE_END();
