#include <doctest.h>

#include <algorithm>

#include <pfrob/counting.hpp>
#include <pfrob/cyclotomic.hpp>
#include <pfrob/disc.hpp>
#include <pfrob/polygon.hpp>
#include <pfrob/rng.hpp>

using namespace pfrob;

namespace
{

constexpr std::uint32_t kPrimes[] = {2, 3, 5, 7};
constexpr std::uint32_t kOddPrimes[] = {3, 5, 7, 11, 13};

ExponentTuple random_tuple(SeededRng &rng, const DigitContext &ctx, std::size_t m, bool strict)
{
    const auto top = ctx.modulus().get_ui() - 1;
    for (;;) {
        std::vector<Integer> entries;
        for (std::size_t i = 0; i < m; ++i) {
            entries.emplace_back(static_cast<unsigned long>(rng.uniform(0, top)));
        }
        std::sort(entries.begin(), entries.end());
        if (!strict || std::adjacent_find(entries.begin(), entries.end()) == entries.end()) {
            return ExponentTuple(entries, ctx, strict);
        }
    }
}

// Random upper convex polygon of width n ending at (n, 0).
ConvexPolygon random_polygon(SeededRng &rng, Rank n)
{
    std::vector<long> slopes;
    long s = rng.uniform_signed(-5, 5);
    for (Rank k = 0; k < n; ++k) {
        slopes.push_back(s);
        s -= rng.uniform_signed(1, 3);
    }
    long total = 0;
    for (const long v : slopes) {
        total += v;
    }
    std::vector<Vertex> vertices{{0, 0}};
    Rational y = 0;
    const Rational shift = Rational(total) / static_cast<long>(n);
    for (Rank k = 0; k < n; ++k) {
        y += slopes[k] - shift;
        vertices.push_back({Integer(static_cast<unsigned long>(k + 1)), y});
    }
    return ConvexPolygon(vertices);
}

// Dominance straight from vertex heights on the union of breakpoints.
bool dominates_by_heights(const ConvexPolygon &P, const ConvexPolygon &Q)
{
    for (const auto &v : Q.vertices()) {
        if (P.height(Rational(v.x)) < v.y) {
            return false;
        }
    }
    for (const auto &v : P.vertices()) {
        if (v.y < Q.height(Rational(v.x))) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_SUITE("properties")
{
    TEST_CASE("rho canonical form is an idempotent class invariant")
    {
        SeededRng rng(kDefaultSeed);
        for (int trial = 0; trial < 400; ++trial) {
            const auto p = kPrimes[rng.uniform(0, 3)];
            const DigitContext ctx(p, static_cast<unsigned>(rng.uniform(1, 2)));
            const auto m = static_cast<std::size_t>(rng.uniform(1, std::min<std::uint64_t>(4, ctx.modulus().get_ui())));
            const auto t = random_tuple(rng, ctx, m, true);
            const auto c = rho_canonical(t);
            CHECK(rho_canonical(c).entries() == c.entries());
            CHECK(rho_equivalent(t, c));
            CHECK(c.entries().front() == 0);
            // shifting every entry by one and re-sorting stays in the class
            std::vector<Integer> shifted;
            for (const auto &e : t.entries()) {
                shifted.push_back((e + 1) % ctx.modulus());
            }
            std::sort(shifted.begin(), shifted.end());
            CHECK(rho_canonical(ExponentTuple(shifted, ctx, true)).entries() == c.entries());
        }
    }

    TEST_CASE("pull-back then descent is the identity")
    {
        SeededRng rng(kDefaultSeed + 1);
        for (int trial = 0; trial < 400; ++trial) {
            const DigitContext ctx(kPrimes[rng.uniform(0, 3)], static_cast<unsigned>(rng.uniform(1, 3)));
            const auto m = static_cast<std::size_t>(rng.uniform(1, 4));
            const auto weights = random_tuple(rng, ctx, m, false);
            std::vector<Rank> type;
            for (std::size_t i = 0; i < m; ++i) {
                type.push_back(static_cast<Rank>(rng.uniform(1, 3)));
            }
            const LocalParabolicDatum e(weights, type);
            const auto pulled = local_pullback(e);
            CHECK(local_descent(pulled) == e);
            CHECK(pulled.flat.rank() == e.rank());
            CHECK(local_det(pulled.flat) == local_det(e));
        }
    }

    TEST_CASE("operator products are associative")
    {
        SeededRng rng(kDefaultSeed + 2);
        for (int trial = 0; trial < 150; ++trial) {
            const DigitContext ctx(kPrimes[rng.uniform(0, 3)], static_cast<unsigned>(rng.uniform(1, 2)));
            const auto element = [&] {
                auto x = OperatorAlgebraElement::unit(ctx);
                for (int k = 0; k < 3; ++k) {
                    x.add_term(rng.uniform(0, 12), static_cast<Residue>(rng.uniform(0, ctx.p() - 1)));
                }
                return x;
            };
            const auto x = element(), y = element(), z = element();
            CHECK(b_mul(b_mul(x, y), z) == b_mul(x, b_mul(y, z)));
            CHECK(b_mul(x, y) == b_mul(y, x));
        }
    }

    TEST_CASE("dominance agrees with pointwise heights and is a partial order")
    {
        SeededRng rng(kDefaultSeed + 3);
        for (int trial = 0; trial < 300; ++trial) {
            const auto n = static_cast<Rank>(rng.uniform(1, 6));
            const auto P = random_polygon(rng, n), Q = random_polygon(rng, n), R = random_polygon(rng, n);
            CHECK(dominates(P, P));
            CHECK(dominates(P, Q) == dominates_by_heights(P, Q));
            CHECK(dominates(P, ConvexPolygon({{0, 0}, {Integer(static_cast<unsigned long>(n)), 0}})));
            if (dominates(P, Q) && dominates(Q, P)) {
                CHECK(P == Q);
            }
            if (dominates(P, Q) && dominates(Q, R)) {
                CHECK(dominates(P, R));
            }
        }
    }

    TEST_CASE("oper polygons dominate HN polygons with bounded slope gaps")
    {
        SeededRng rng(kDefaultSeed + 4);
        for (int trial = 0; trial < 300; ++trial) {
            const CurveType curve{static_cast<unsigned>(rng.uniform(0, 3)), static_cast<unsigned>(rng.uniform(0, 3))};
            if (curve.euler() <= 0) {
                continue;
            }
            const long K = curve.euler().get_si();
            const auto n = static_cast<Rank>(rng.uniform(1, 5));
            // rank-1 pieces with slope drops in [1, K]
            std::vector<Subquotient> pieces;
            long d = rng.uniform_signed(-4, 4);
            Integer total = 0;
            for (Rank k = 0; k < n; ++k) {
                pieces.push_back({1, d});
                total += d;
                d -= rng.uniform_signed(1, K);
            }
            const auto hn = hn_polygon(pieces);
            CHECK(slope_gap_report(pieces, curve).gaps_within_bound);
            const Integer a = pieces.front().degree;
            const auto oper = oper_polygon(n, a, curve);
            if (oper.end() == hn.end()) {
                CHECK(dominates(oper, hn));
            }
        }
    }

    TEST_CASE("rank-2 counts depend only on the multiset of gaps")
    {
        SeededRng rng(kDefaultSeed + 5);
        CountEvaluator ev;
        for (int trial = 0; trial < 60; ++trial) {
            const auto p = kOddPrimes[rng.uniform(0, 4)];
            const auto g = static_cast<unsigned>(rng.uniform(0, 3));
            const auto r = static_cast<unsigned>(rng.uniform(g == 0 ? 3 : g == 1 ? 1 : 0, 3));
            std::vector<WeightPair> pairs, moved;
            for (unsigned i = 0; i < r; ++i) {
                const auto b = static_cast<std::uint32_t>(rng.uniform(1, p - 1));
                const auto a1 = static_cast<std::uint32_t>(rng.uniform(0, p - 1 - b));
                const auto c1 = static_cast<std::uint32_t>(rng.uniform(0, p - 1 - b));
                pairs.push_back({a1, a1 + b});
                moved.push_back({c1, c1 + b});
            }
            std::reverse(moved.begin(), moved.end());
            const Rank2CountInput in(p, g, pairs), other(p, g, moved);
            const Rational value = count_rank2(in);
            CHECK(value == count_rank2(other));
            CHECK(value == ev.count(other));
            CHECK(float_oracle(in, 128).contains(value));
        }
    }

    TEST_CASE("cyclotomic inverses")
    {
        SeededRng rng(kDefaultSeed + 6);
        for (int trial = 0; trial < 100; ++trial) {
            const auto p = kOddPrimes[rng.uniform(0, 4)];
            std::vector<Rational> coeffs;
            for (std::uint32_t k = 0; k + 1 < p; ++k) {
                coeffs.emplace_back(rng.uniform_signed(-3, 3), static_cast<unsigned long>(rng.uniform(1, 4)));
            }
            const CyclotomicElement x(p, coeffs);
            if (x.is_zero()) {
                continue;
            }
            CHECK(x * x.inverse() == CyclotomicElement::constant(p, 1));
            CHECK(x.pow(3) == x * x * x);
        }
    }
}
