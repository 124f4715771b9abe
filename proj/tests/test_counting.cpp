#include <doctest.h>

#include <pfrob/counting.hpp>
#include <pfrob/cyclotomic.hpp>
#include <pfrob/errors.hpp>
#include <pfrob/interval.hpp>

using namespace pfrob;

namespace
{

struct Frozen {
    std::uint32_t p;
    unsigned g;
    std::vector<WeightPair> pairs;
    long value;
};

// Reference values from a 60-digit evaluation of the trigonometric sum.
const Frozen kFrozen[] = {
    {5, 2, {}, 80},
    {7, 2, {{0, 1}}, 224},
    {5, 2, {{0, 1}}, 80},
    {5, 2, {{0, 2}}, 80},
    {11, 3, {{0, 1}, {2, 5}}, 216832},
    {13, 3, {{0, 1}, {1, 3}, {4, 5}}, 378560},
    {7, 0, {{0, 1}, {0, 1}, {0, 1}}, 1},
    {7, 1, {{0, 3}}, 8},
    {11, 2, {{0, 2}, {1, 3}}, 2640},
};

} // namespace

TEST_SUITE("cyclotomic")
{
    TEST_CASE("root powers wrap with period 2p and zeta^p = -1")
    {
        const std::uint32_t p = 7;
        CHECK(CyclotomicElement::root_power(p, 14) == CyclotomicElement::constant(p, 1));
        CHECK(CyclotomicElement::root_power(p, 7) == CyclotomicElement::constant(p, -1));
        CHECK(CyclotomicElement::root_power(p, -3) == CyclotomicElement::root_power(p, 11));
        // 1 - zeta + zeta^2 - ... + zeta^6 = 0
        auto sum = CyclotomicElement::zero(p);
        for (long k = 0; k < 7; ++k) {
            sum += CyclotomicElement::root_power(p, k) * Rational(k % 2 == 0 ? 1 : -1);
        }
        CHECK(sum.is_zero());
    }

    TEST_CASE("inverse")
    {
        for (const std::uint32_t p : {3u, 5u, 7u, 11u}) {
            for (long m = 1; m < static_cast<long>(p); ++m) {
                const auto s = CyclotomicElement::sine_numerator(p, m);
                CHECK(s * s.inverse() == CyclotomicElement::constant(p, 1));
            }
            auto x = CyclotomicElement::root_power(p, 1) + CyclotomicElement::constant(p, Rational(3, 2));
            CHECK(x * x.inverse() == CyclotomicElement::constant(p, 1));
        }
        CHECK_THROWS_AS(CyclotomicElement::zero(5).inverse(), InputError);
    }

    TEST_CASE("sine products")
    {
        const std::uint32_t p = 11;
        const auto base = CyclotomicElement::root_power(p, 3) + CyclotomicElement::constant(p, 2);
        for (long m = -12; m <= 12; ++m) {
            CHECK(base.times_sine_numerator(m) == base * CyclotomicElement::sine_numerator(p, m));
        }
    }

    TEST_CASE("(2i)^2 = -4: squares of sine numerators are -4 sin^2")
    {
        // (zeta - zeta^-1)^2 = zeta^2 - 2 + zeta^-2 = 2 cos(2 pi / p) - 2 = -4 sin^2(pi / p)
        const std::uint32_t p = 5;
        const auto s = CyclotomicElement::sine_numerator(p, 1);
        const auto expected = CyclotomicElement::root_power(p, 2) + CyclotomicElement::root_power(p, -2) -
                              CyclotomicElement::constant(p, 2);
        CHECK(s * s == expected);
    }

    TEST_CASE("validation")
    {
        CHECK_THROWS_AS(CyclotomicElement::zero(2), InputError);
        CHECK_THROWS_AS(CyclotomicElement::zero(9), InputError);
        CHECK_THROWS_AS(CyclotomicElement(5, {1, 2}), InputError);
        CHECK_THROWS_AS(CyclotomicElement::root_power(5, 1).to_rational(), InvariantViolation);
        CHECK_THROWS_AS(CyclotomicElement::zero(5) + CyclotomicElement::zero(7), InputError);
    }

    TEST_CASE("unreduced fractions are accepted")
    {
        const CyclotomicElement x(5, {Rational(2, 4), 0, Rational(-3, 6), 0});
        CHECK(x.coeffs()[0] == Rational(1, 2));
        CHECK(x * x.inverse() == CyclotomicElement::constant(5, 1));
    }
}

TEST_SUITE("interval")
{
    TEST_CASE("sine enclosures")
    {
        CHECK(Interval::sin_pi(Rational(1, 6), 128).contains(Rational(1, 2)));
        CHECK(Interval::sin_pi(Rational(5, 6), 128).contains(Rational(1, 2)));
        CHECK(Interval::sin_pi(Rational(7, 6), 128).contains(Rational(-1, 2)));
        CHECK(Interval::sin_pi(Rational(-1, 6), 128).contains(Rational(-1, 2)));
        CHECK(Interval::sin_pi(Rational(1, 2), 128).contains(1));
        CHECK(Interval::sin_pi(Rational(2, 12), 128).contains(Rational(1, 2)));
        CHECK(Interval::sin_pi(Rational(3), 128).contains(0));
        CHECK(mpfr_zero_p(Interval::sin_pi(Rational(3), 128).width().get()));
        CHECK_FALSE(Interval::sin_pi(Rational(1, 6), 128).contains(Rational(1, 2) + Rational(1, 1000000)));
    }

    TEST_CASE("arithmetic encloses exact results")
    {
        const auto third = Interval::exact(Rational(1, 3), 64);
        CHECK((third + third + third).contains(1));
        CHECK((third * Interval::exact(3, 64)).contains(1));
        CHECK((Interval::exact(1, 64) / Interval::exact(3, 64)).contains(Rational(1, 3)));
        CHECK((third - third).contains(0));
        CHECK(third.pow(3).contains(Rational(1, 27)));
        CHECK_THROWS_AS(third / (third - third), InputError);
    }

    TEST_CASE("copies and moves keep values")
    {
        const auto a = Interval::pi(96);
        Interval b = a;
        Interval c = std::move(b);
        c = a;
        CHECK(mpfr_equal_p(c.lo().get(), a.lo().get()));
        CHECK(c.precision() == 96);
        CHECK(mpfr_cmp_d(c.lo().get(), 3.14159) > 0);
        CHECK(mpfr_cmp_d(c.hi().get(), 3.1416) < 0);
    }
}

TEST_SUITE("counting")
{
    TEST_CASE("input validation")
    {
        CHECK_THROWS_AS(Rank2CountInput(2, 2, {}), InputError);
        CHECK_THROWS_AS(Rank2CountInput(9, 2, {}), InputError);
        CHECK_THROWS_AS(Rank2CountInput(5, 1, {}), InputError);
        CHECK_THROWS_AS(Rank2CountInput(5, 0, {{0, 1}, {0, 1}}), InputError);
        CHECK_THROWS_AS(Rank2CountInput(5, 2, {{1, 1}}), InputError);
        CHECK_THROWS_AS(Rank2CountInput(5, 2, {{2, 1}}), InputError);
        CHECK_THROWS_AS(Rank2CountInput(5, 2, {{0, 5}}), InputError);
        CHECK(Rank2CountInput(5, 2, {{3, 4}, {0, 2}}).sorted_gaps() == std::vector<std::uint32_t>{1, 2});
    }

    TEST_CASE("hypotheses")
    {
        const auto a = check_hypotheses(Rank2CountInput(5, 2, {}), true);
        CHECK(a.parity);
        CHECK(a.gap);
        CHECK(a.prime_bound);
        CHECK(a.all_ok());
        CHECK_FALSE(check_hypotheses(Rank2CountInput(5, 2, {}), false).all_ok());

        const auto b = check_hypotheses(Rank2CountInput(7, 2, {{0, 1}}), true);
        CHECK(b.parity);
        CHECK(b.gap);
        CHECK(b.prime_bound);

        const auto c = check_hypotheses(Rank2CountInput(5, 2, {{0, 1}}), true);
        CHECK_FALSE(c.prime_bound);
        CHECK_FALSE(c.all_ok());

        CHECK_FALSE(check_hypotheses(Rank2CountInput(7, 2, {{0, 2}}), true).parity);
        CHECK_FALSE(check_hypotheses(Rank2CountInput(11, 2, {{0, 3}}), true).gap);
    }

    TEST_CASE("worked counts against the csc^2 closed form")
    {
        // sum_{j=1}^{p-1} csc^2(j pi / p) = (p^2 - 1) / 3
        for (const std::uint32_t p : {5u, 7u, 11u, 13u}) {
            const Rational closed = 2 * Rational(p) * (Rational(p) * p - 1) / 3;
            CHECK(count_rank2(Rank2CountInput(p, 2, {})) == closed);
        }
        CHECK(count_rank2(Rank2CountInput(7, 2, {{0, 1}})) == 224);
        CHECK(pgl_count(Rank2CountInput(5, 2, {})) == 5);
        CHECK(pgl_count(Rank2CountInput(7, 2, {{0, 1}})) == 14);
    }

    TEST_CASE("frozen reference values")
    {
        for (const auto &f : kFrozen) {
            const Rank2CountInput in(f.p, f.g, f.pairs);
            CAPTURE(f.p);
            CAPTURE(f.g);
            CHECK(count_rank2(in) == f.value);
            CHECK(count_rank2_tau(in) == f.value);
            CHECK(float_oracle(in, 128).contains(Rational(f.value)));
        }
    }

    TEST_CASE("the count only sees the gaps")
    {
        CHECK(count_rank2(Rank2CountInput(11, 3, {{0, 1}, {2, 5}})) ==
              count_rank2(Rank2CountInput(11, 3, {{7, 10}, {4, 5}})));
    }

    TEST_CASE("hypothesis-violating inputs still evaluate")
    {
        const Rank2CountInput in(5, 0, {{0, 2}, {0, 1}, {1, 2}});
        const Rational value = count_rank2(in);
        CHECK(value == count_rank2_tau(in));
        CHECK(float_oracle(in, 128).contains(value));
        CHECK_FALSE(check_hypotheses(in, true).all_ok());
    }

    TEST_CASE("a term vanishes when b j is divisible by p")
    {
        // Only the j-th summands with p | b j drop out; here none do since 0 < b, j < p.
        // With g = 1, r = 1 the value is 2 sum_j s_j sin(b j pi/p) / sin(j pi/p).
        const Rank2CountInput in(5, 1, {{0, 4}});
        CHECK(count_rank2(in) == count_rank2_tau(in));
    }

    TEST_CASE("sign identity")
    {
        CHECK(sign_identity(2, 1, 5));
        for (std::uint32_t j = 0; j < 11; ++j) {
            CHECK(sign_identity(1, j, 11));
        }
        for (const std::uint32_t p : {3u, 5u, 7u, 11u}) {
            for (std::uint32_t b = 0; b < p; ++b) {
                for (std::uint32_t j = 0; j < p; ++j) {
                    CHECK(sign_identity(b, j, p));
                }
            }
        }
    }

    TEST_CASE("oracle width and escalation")
    {
        const Rank2CountInput in(5, 2, {});
        const Interval i = float_oracle(in, 128);
        CHECK(i.contains(80));
        CHECK(mpfr_cmp_d(i.width().get(), 1e-20) < 0);
        const Interval lo = float_oracle(in, 64);
        CHECK(mpfr_cmp(i.width().get(), lo.width().get()) < 0);
        CHECK_THROWS_AS(float_oracle(in, 32), InputError);
        const Interval refined = float_oracle_refined(in, Rational(1, 1000000), 64);
        CHECK(refined.contains(80));
        CHECK_THROWS_AS(float_oracle_refined(in, Rational(0), 64, 256), InsufficientPrecision);
    }

    TEST_CASE("evaluator caches by gap multiset")
    {
        CountEvaluator ev;
        CHECK(ev.count(Rank2CountInput(11, 3, {{0, 1}, {2, 5}})) == 216832);
        CHECK(ev.count(Rank2CountInput(11, 3, {{3, 6}, {8, 9}})) == 216832);
        CHECK(ev.distinct_evaluations() == 1);
        CHECK(ev.oracle(Rank2CountInput(11, 3, {{3, 6}, {8, 9}})).contains(216832));
        CHECK(ev.count_tau(Rank2CountInput(13, 3, {{0, 1}, {1, 3}, {4, 5}})) == 378560);
    }
}
