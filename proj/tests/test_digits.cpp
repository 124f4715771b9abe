#include <doctest.h>

#include <pfrob/digits.hpp>
#include <pfrob/errors.hpp>

using namespace pfrob;

namespace
{

std::vector<Integer> ints(std::initializer_list<long> xs)
{
    std::vector<Integer> out;
    for (const long x : xs) {
        out.emplace_back(x);
    }
    return out;
}

} // namespace

TEST_SUITE("digits")
{
    TEST_CASE("context validation")
    {
        CHECK_THROWS_AS(DigitContext(4, 1), InputError);
        CHECK_THROWS_AS(DigitContext(1, 1), InputError);
        CHECK_THROWS_AS(DigitContext(5, 0), InputError);
        const DigitContext ctx(5, 3);
        CHECK(ctx.modulus() == 125);
        CHECK(ctx.power_of_p(0) == 1);
        CHECK(ctx.power_of_p(2) == 25);
        CHECK_THROWS_AS((void)ctx.power_of_p(4), InputError);
    }

    TEST_CASE("lift and digits")
    {
        CHECK(lift_and_digits(0, DigitContext(7, 3)) == std::vector<Residue>{0, 0, 0});
        CHECK(lift_and_digits(13, DigitContext(5, 2)) == std::vector<Residue>{3, 2});
        CHECK(lift_and_digits(-4, DigitContext(3, 2)) == std::vector<Residue>{2, 1});
        CHECK(lift(-4, DigitContext(3, 2)) == 5);
        CHECK(lift(Integer("1000000000000000000000"), DigitContext(2, 3)) == 0);
    }

    TEST_CASE("negated digits")
    {
        CHECK(negate_digits(0, DigitContext(5, 2)) == std::vector<Residue>{0, 0});
        CHECK(negate_digits(4, DigitContext(3, 2)) == std::vector<Residue>{2, 1});
        CHECK(negate_digits(1, DigitContext(5, 1)) == std::vector<Residue>{4});
    }

    TEST_CASE("level split")
    {
        const DigitContext ctx(5, 2);
        CHECK(split_level(13, 1, ctx) == LevelSplit{3, 2});
        CHECK(split_level(13, 0, ctx) == LevelSplit{0, 13});
        CHECK(split_level(13, 2, ctx) == LevelSplit{13, 0});
        CHECK_THROWS_AS(split_level(25, 1, ctx), InputError);
        CHECK_THROWS_AS(split_level(-1, 1, ctx), InputError);
        CHECK_THROWS_AS(split_level(3, 3, ctx), InputError);
    }

    TEST_CASE("tuple split monotonicity")
    {
        const DigitContext ctx(5, 2);
        const auto a = split_tuple_monotone(ExponentTuple(ints({0, 1, 2}), ctx, true), 1);
        CHECK(a.low == ints({0, 1, 2}));
        CHECK(a.high == ints({0, 0, 0}));
        CHECK(a.monotone);

        const auto b = split_tuple_monotone(ExponentTuple(ints({4, 5}), ctx, true), 1);
        CHECK(b.low == ints({4, 0}));
        CHECK(b.high == ints({0, 1}));
        CHECK_FALSE(b.monotone);

        CHECK(split_tuple_monotone(ExponentTuple(ints({0, 0}), ctx, false), 1).monotone);
    }

    TEST_CASE("membership in Xi")
    {
        const DigitContext ctx(5, 1);
        const auto e01 = ints({0, 1}), e11 = ints({1, 1}), e05 = ints({0, 5}), e10 = ints({1, 0});
        CHECK(xi_contains(e01, 2, ctx, true));
        CHECK_FALSE(xi_contains(e11, 2, ctx, true));
        CHECK(xi_contains(e11, 2, ctx, false));
        CHECK_FALSE(xi_contains(e05, 2, ctx, false));
        CHECK_FALSE(xi_contains(e10, 2, ctx, false));
        CHECK_FALSE(xi_contains(e01, 3, ctx, false));
        CHECK_THROWS_AS(ExponentTuple(e11, ctx, true), InputError);
    }

    TEST_CASE("enumeration")
    {
        const auto ones = enumerate_xi(1, DigitContext(2, 1), false);
        REQUIRE(ones.size() == 2);
        CHECK(ones[0].entries() == ints({0}));
        CHECK(ones[1].entries() == ints({1}));

        const auto strict = enumerate_xi(2, DigitContext(3, 1), true);
        REQUIRE(strict.size() == 3);
        CHECK(strict[0].entries() == ints({0, 1}));
        CHECK(strict[1].entries() == ints({0, 2}));
        CHECK(strict[2].entries() == ints({1, 2}));

        CHECK(enumerate_xi(2, DigitContext(2, 1), false).size() == 3);
        CHECK(xi_cardinality(2, DigitContext(2, 1), false) == 3);
        CHECK(xi_cardinality(3, DigitContext(5, 2), true) == 2300);
        CHECK(enumerate_xi(3, DigitContext(5, 2), true).size() == 2300);
        CHECK(enumerate_xi(3, DigitContext(3, 1), false).size() == 10);
        CHECK(enumerate_xi(4, DigitContext(3, 1), true).empty());
    }

    TEST_CASE("enumeration cap")
    {
        CHECK_THROWS_AS(XiEnumerator(4, DigitContext(7, 3), false, 1000), CapExceeded);
        try {
            XiEnumerator(4, DigitContext(7, 3), false, 1000);
        } catch (const CapExceeded &e) {
            // C(343 + 3, 4)
            CHECK(e.estimate() == "586862710");
        }
    }

    TEST_CASE("rho canonical representatives")
    {
        const DigitContext ctx(5, 1);
        CHECK(rho_canonical(ExponentTuple(ints({0, 1}), ctx, true)).entries() == ints({0, 1}));
        CHECK(rho_canonical(ExponentTuple(ints({3, 4}), ctx, true)).entries() == ints({0, 1}));
        CHECK(rho_canonical(ExponentTuple(ints({1, 3}), ctx, true)).entries() == ints({0, 2}));
        CHECK(rho_equivalent(ExponentTuple(ints({1, 3}), ctx, true), ExponentTuple(ints({0, 3}), ctx, true)));
        CHECK_FALSE(rho_equivalent(ExponentTuple(ints({0, 1}), ctx, true), ExponentTuple(ints({0, 2}), ctx, true)));
        CHECK_THROWS_AS(rho_canonical(ExponentTuple(ints({1, 1}), ctx, false)), InputError);
    }

    TEST_CASE("tau")
    {
        CHECK(tau(1, 5) == 0);
        CHECK(tau(2, 5) == 1);
        CHECK(tau(0, 7) == 3);
        CHECK(tau(4, 5) == 0);
        CHECK_THROWS_AS(tau(5, 5), InputError);
        CHECK_THROWS_AS(tau(1, 4), InputError);
    }

    TEST_CASE("primality")
    {
        CHECK(is_prime(2));
        CHECK(is_prime(2147483647));
        CHECK_FALSE(is_prime(1));
        CHECK_FALSE(is_prime(91));
    }
}
