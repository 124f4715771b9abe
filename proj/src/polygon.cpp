#include <pfrob/polygon.hpp>

#include <algorithm>
#include <set>
#include <string>

#include <pfrob/errors.hpp>

namespace pfrob
{

namespace
{

Rational to_rational(Rank n) { return Rational(Integer(static_cast<unsigned long>(n))); }

Integer to_integer(Rank n) { return Integer(static_cast<unsigned long>(n)); }

Rational half(const Integer &z) { return make_rational(z, 2); }

} // namespace

void CurveType::require_hyperbolic() const
{
    if (euler() <= 0) {
        throw InputError("need 2g - 2 + r > 0 (got g = " + std::to_string(g) + ", r = " + std::to_string(r) + ")");
    }
}

ParabolicShape::ParabolicShape(Rank n, Integer degree, std::vector<ParabolicPoint> points)
    : n_(n), degree_(std::move(degree)), points_(std::move(points))
{
    if (n_ < 1) {
        throw InputError("rank must be positive");
    }
    for (const auto &pt : points_) {
        if (pt.weights.size() != pt.kernel_ranks.size()) {
            throw InputError("weights and kernel ranks differ in length at a marked point");
        }
    }
}

ParabolicShape ParabolicShape::from_exponents(Rank n, Integer degree, const std::vector<ExponentTuple> &weights,
                                              const std::vector<std::vector<Rank>> &kernel_ranks)
{
    if (weights.size() != kernel_ranks.size()) {
        throw InputError("one kernel-rank list per marked point is required");
    }
    std::vector<ParabolicPoint> points;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        points.push_back({weights[i].normalized(), kernel_ranks[i]});
    }
    return ParabolicShape(n, std::move(degree), std::move(points));
}

Rational par_degree(const ParabolicShape &s)
{
    Rational total(s.degree());
    for (const auto &pt : s.points()) {
        for (std::size_t j = 0; j < pt.weights.size(); ++j) {
            total += pt.weights[j] * to_rational(pt.kernel_ranks[j]);
        }
    }
    return total;
}

Rational par_slope(const ParabolicShape &s) { return par_degree(s) / to_rational(s.rank()); }

Integer frobenius_degree(const ParabolicShape &s, const DigitContext &ctx)
{
    const Rational value = Rational(ctx.modulus()) * par_degree(s);
    if (!is_integral(value)) {
        throw InvariantViolation("p^N * par-deg = " + value.get_str() + " is not an integer; weights are not in Xi/p^N");
    }
    return value.get_num();
}

StabilityComparison compare_slopes(const ParabolicShape &whole, const ParabolicShape &sub)
{
    StabilityComparison out{par_slope(sub), par_slope(whole), false};
    out.destabilizing = out.sub_slope >= out.whole_slope;
    return out;
}

ConvexPolygon::ConvexPolygon(std::vector<Vertex> vertices) : vertices_(std::move(vertices))
{
    for (auto &v : vertices_) {
        v.y.canonicalize();
    }
    if (vertices_.size() < 2) {
        throw InputError("a polygon needs at least two vertices");
    }
    if (vertices_.front().x != 0 || vertices_.front().y != 0) {
        throw InputError("polygons start at (0, 0)");
    }
    for (std::size_t k = 1; k < vertices_.size(); ++k) {
        if (vertices_[k].x <= vertices_[k - 1].x) {
            throw InputError("vertex abscissae must be strictly increasing");
        }
    }
    const auto s = slopes();
    for (std::size_t k = 1; k < s.size(); ++k) {
        if (s[k] >= s[k - 1]) {
            throw InputError("segment slopes must be strictly decreasing");
        }
    }
}

std::vector<Rational> ConvexPolygon::slopes() const
{
    std::vector<Rational> out;
    for (std::size_t k = 1; k < vertices_.size(); ++k) {
        out.push_back((vertices_[k].y - vertices_[k - 1].y) / Rational(vertices_[k].x - vertices_[k - 1].x));
    }
    return out;
}

Rational ConvexPolygon::height(const Rational &x) const
{
    if (x < 0 || x > Rational(end().x)) {
        throw InputError("abscissa " + x.get_str() + " outside the polygon");
    }
    for (std::size_t k = 1; k < vertices_.size(); ++k) {
        if (x <= Rational(vertices_[k].x)) {
            const auto &a = vertices_[k - 1];
            const auto &b = vertices_[k];
            return a.y + (b.y - a.y) * (x - Rational(a.x)) / Rational(b.x - a.x);
        }
    }
    return end().y;
}

ConvexPolygon oper_polygon(Rank n, const Integer &a, const CurveType &curve)
{
    curve.require_hyperbolic();
    if (n < 1) {
        throw InputError("rank must be positive");
    }
    std::vector<Vertex> vertices;
    for (Rank j = 0; j <= n; ++j) {
        const Integer jz = to_integer(j);
        vertices.push_back({jz, Rational(jz * a) - half(jz * (jz - 1) * curve.euler())});
    }
    return ConvexPolygon(std::move(vertices));
}

ConvexPolygon hn_polygon(const std::vector<Subquotient> &pieces)
{
    std::vector<Vertex> vertices{{Integer(0), Rational(0)}};
    for (const auto &piece : pieces) {
        if (piece.rank == 0) {
            throw InputError("HN pieces have positive rank");
        }
        vertices.push_back({vertices.back().x + to_integer(piece.rank), vertices.back().y + Rational(piece.degree)});
    }
    return ConvexPolygon(std::move(vertices));
}

bool dominates(const ConvexPolygon &P, const ConvexPolygon &Q)
{
    if (!(P.end() == Q.end())) {
        throw InputError("polygons with different endpoints are not comparable");
    }
    std::set<Integer> abscissae;
    for (const auto &v : P.vertices()) {
        abscissae.insert(v.x);
    }
    for (const auto &v : Q.vertices()) {
        abscissae.insert(v.x);
    }
    return std::all_of(abscissae.begin(), abscissae.end(), [&](const Integer &x) {
        return P.height(Rational(x)) >= Q.height(Rational(x));
    });
}

bool oper_match(const ConvexPolygon &P, Rank n, const Integer &a, const CurveType &curve)
{
    const ConvexPolygon oper = oper_polygon(n, a, curve);
    if (!(P.end() == oper.end())) {
        throw InputError("polygon endpoint differs from the oper polygon endpoint");
    }
    return P == oper;
}

SlopeGapReport slope_gap_report(const std::vector<Subquotient> &pieces, const CurveType &curve)
{
    SlopeGapReport out;
    Rank total_rank = 0;
    std::vector<Rational> slopes;
    for (const auto &piece : pieces) {
        if (piece.rank == 0) {
            throw InputError("HN pieces have positive rank");
        }
        slopes.push_back(make_rational(piece.degree, to_integer(piece.rank)));
        total_rank += piece.rank;
    }
    const Rational bound(curve.euler());
    for (std::size_t k = 1; k < slopes.size(); ++k) {
        out.gaps.push_back(slopes[k - 1] - slopes[k]);
        out.gaps_within_bound = out.gaps_within_bound && out.gaps.back() <= bound;
    }
    if (!slopes.empty()) {
        const auto [lo, hi] = std::minmax_element(slopes.begin(), slopes.end());
        out.spread = *hi - *lo;
        out.spread_within_bound = out.spread <= Rational(to_integer(total_rank - 1) * curve.euler());
    }
    return out;
}

std::vector<Integer> destabilizing_degrees(Rank n, const Integer &c, const CurveType &curve)
{
    curve.require_hyperbolic();
    std::vector<Integer> out;
    for (Rank k = 0; k < n; ++k) {
        out.push_back(c - to_integer(k) * curve.euler());
    }
    return out;
}

Integer oper_det_degree(Rank n, const CurveType &curve, const Integer &c)
{
    curve.require_hyperbolic();
    const Integer nz = to_integer(n);
    const Rational value = Rational(nz * c) - half(nz * (nz - 1) * curve.euler());
    if (!is_integral(value)) {
        throw InputError("n (n - 1) (2g - 2 + r) / 2 is not integral");
    }
    return value.get_num();
}

Rational destabilized_par_slope(Rank n, const Integer &c, const CurveType &curve, const DigitContext &ctx)
{
    Integer total = 0;
    for (const auto &deg : destabilizing_degrees(n, c, curve)) {
        total += deg;
    }
    return make_rational(total, ctx.modulus() * to_integer(n));
}

Rational destabilized_par_slope_closed(Rank n, const Integer &c, const CurveType &curve, const DigitContext &ctx)
{
    return (Rational(c) - half(to_integer(n - 1) * curve.euler())) / Rational(ctx.modulus());
}

DestabilizationConditions destabilization_conditions(Rank n, const DigitContext &ctx, const WeightVector &weights,
                                                     const CurveType &curve)
{
    if (n == 0) {
        throw InputError("rank must be positive");
    }
    DestabilizationConditions out;
    out.low_high_monotone = true;
    Integer spread = 0;
    for (const auto &t : weights.tuples()) {
        if (!(t.context() == ctx)) {
            throw InputError("weight tuples must use the given (p, N) context");
        }
        if (!t.strict()) {
            throw InputError("destabilization conditions need strictly increasing weight tuples");
        }
        if (t.size() != n) {
            throw InputError("every weight tuple must have length n");
        }
        const TupleSplit split = split_tuple_monotone(t, 1);
        out.low_high_monotone = out.low_high_monotone && split.monotone;
        spread += split.low.back() - split.low.front();
    }
    const Integer nz = to_integer(n);
    out.spread_sum = Rational(spread);
    out.half_nK = half(nz * curve.euler());
    out.p_over_n = make_rational(Integer(ctx.p()), nz);
    out.inequalities = out.spread_sum < out.half_nK && out.half_nK <= out.p_over_n;
    return out;
}

EmptinessReport emptiness_report(Rank n, const DigitContext &ctx, const CurveType &curve, const Integer &degL,
                                 const std::vector<std::vector<Integer>> &weights)
{
    curve.require_hyperbolic();
    if (n < 1) {
        throw InputError("rank must be positive");
    }
    const Integer nz = to_integer(n);
    EmptinessReport out;
    out.weight_sum_bound = true;
    out.strictness = true;
    Integer weight_total = 0;
    for (const auto &a : weights) {
        if (a.size() != n) {
            throw InputError("each weight tuple must have length n");
        }
        if (!xi_contains(a, n, ctx, false)) {
            throw InputError("weight tuple is not a non-decreasing tuple in [0, p^N)");
        }
        Integer sum = 0;
        for (const auto &x : a) {
            sum += x;
        }
        weight_total += sum;
        out.weight_sum_bound = out.weight_sum_bound && sum < ctx.modulus();
        out.strictness = out.strictness && xi_contains(a, n, ctx, true);
    }
    const Rational main = Rational(ctx.modulus() * degL + weight_total) + half(nz * (nz - 1) * curve.euler());
    out.main_quantity = main.get_num();
    out.divides_main = mpz_divisible_p(out.main_quantity.get_mpz_t(), nz.get_mpz_t()) != 0;
    out.n_divides_degE = mpz_divisible_p(degL.get_mpz_t(), nz.get_mpz_t()) != 0;
    return out;
}

} // namespace pfrob
