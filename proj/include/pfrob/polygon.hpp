#ifndef PFROB_POLYGON_HPP
#define PFROB_POLYGON_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <pfrob/digits.hpp>
#include <pfrob/numeric.hpp>

namespace pfrob
{

// Genus/marked-point data of a pointed curve; K = 2g - 2 + r.
struct CurveType {
    unsigned g = 0;
    unsigned r = 0;

    Integer euler() const { return Integer(2 * static_cast<long>(g) - 2 + static_cast<long>(r)); }
    // Throws InputError unless 2g - 2 + r > 0.
    void require_hyperbolic() const;
};

struct ParabolicPoint {
    std::vector<Rational> weights;  // alpha^[j]
    std::vector<Rank> kernel_ranks; // l^[j]
};

// Rank, degree and parabolic data of a parabolic bundle, for degree and slope arithmetic.
class ParabolicShape
{
public:
    ParabolicShape(Rank n, Integer degree, std::vector<ParabolicPoint> points);

    // Weights a_i^[j] / p^N taken from exponent tuples.
    static ParabolicShape from_exponents(Rank n, Integer degree, const std::vector<ExponentTuple> &weights,
                                         const std::vector<std::vector<Rank>> &kernel_ranks);

    Rank rank() const noexcept { return n_; }
    const Integer &degree() const noexcept { return degree_; }
    const std::vector<ParabolicPoint> &points() const noexcept { return points_; }

private:
    Rank n_;
    Integer degree_;
    std::vector<ParabolicPoint> points_;
};

Rational par_degree(const ParabolicShape &s);
Rational par_slope(const ParabolicShape &s);

// p^N * par-deg, the degree of the Frobenius pull-back. Throws InvariantViolation if not integral.
Integer frobenius_degree(const ParabolicShape &s, const DigitContext &ctx);

struct StabilityComparison {
    Rational sub_slope;
    Rational whole_slope;
    bool destabilizing = false; // par-mu(sub) >= par-mu(whole)
};

// Numeric stability test of one candidate parabolic subbundle.
StabilityComparison compare_slopes(const ParabolicShape &whole, const ParabolicShape &sub);

struct Vertex {
    Integer x;
    Rational y;

    bool operator==(const Vertex &) const = default;
};

// Upper convex polygon from (0, 0) with strictly decreasing segment slopes.
class ConvexPolygon
{
public:
    // Throws InputError if the vertices do not describe such a polygon.
    explicit ConvexPolygon(std::vector<Vertex> vertices);

    const std::vector<Vertex> &vertices() const noexcept { return vertices_; }
    const Vertex &end() const noexcept { return vertices_.back(); }
    std::vector<Rational> slopes() const;

    // Height of the piecewise-linear function at x in [0, end.x].
    Rational height(const Rational &x) const;

    bool operator==(const ConvexPolygon &) const = default;

private:
    std::vector<Vertex> vertices_;
};

// Vertices (j, j a - j (j - 1) K / 2), 0 <= j <= n.
ConvexPolygon oper_polygon(Rank n, const Integer &a, const CurveType &curve);

struct Subquotient {
    Rank rank = 0;
    Integer degree;
};

// Cumulative polygon of HN pieces listed from the top (largest slope) down.
ConvexPolygon hn_polygon(const std::vector<Subquotient> &pieces);

// P lies on or above Q. Throws InputError when the endpoints differ.
bool dominates(const ConvexPolygon &P, const ConvexPolygon &Q);

// P equals the oper polygon for (n, a, curve). Throws InputError when the endpoints differ.
bool oper_match(const ConvexPolygon &P, Rank n, const Integer &a, const CurveType &curve);

struct SlopeGapReport {
    std::vector<Rational> gaps; // mu(piece k) - mu(piece k + 1)
    bool gaps_within_bound = true;
    Rational spread; // mu_max - mu_min
    bool spread_within_bound = true;
};

SlopeGapReport slope_gap_report(const std::vector<Subquotient> &pieces, const CurveType &curve);

// deg F^{n-1} = c, then each lower step loses K: (c, c - K, ..., c - (n-1) K).
std::vector<Integer> destabilizing_degrees(Rank n, const Integer &c, const CurveType &curve);

// -n (n - 1) K / 2 + n c
Integer oper_det_degree(Rank n, const CurveType &curve, const Integer &c);

// par-mu of a maximally destabilized bundle, summed from its destabilizing degrees.
Rational destabilized_par_slope(Rank n, const Integer &c, const CurveType &curve, const DigitContext &ctx);

// The same quantity in closed form (c - (n - 1) K / 2) / p^N.
Rational destabilized_par_slope_closed(Rank n, const Integer &c, const CurveType &curve, const DigitContext &ctx);

struct DestabilizationConditions {
    bool low_high_monotone = false; // s1 and s2 of every tuple are non-decreasing
    bool inequalities = false;      // spread_sum < n K / 2 <= p / n
    Rational spread_sum;            // sum_i (s1(a_i^[n]) - s1(a_i^[1]))
    Rational half_nK;               // n K / 2
    Rational p_over_n;
};

// Numeric conditions on strict weight tuples of length n (rank n >= 1). Throws InputError on
// non-strict tuples, a length other than n, or a foreign context.
DestabilizationConditions destabilization_conditions(Rank n, const DigitContext &ctx, const WeightVector &weights,
                                                     const CurveType &curve);

struct EmptinessReport {
    bool divides_main = false;      // n | p^N deg L + n (n-1) K / 2 + sum a
    bool weight_sum_bound = false;  // sum_j a_i^[j] < p^N for every i
    bool strictness = false;        // every a_i strictly increasing
    bool n_divides_degE = false;    // n | deg L
    Integer main_quantity;
    bool nonempty_candidate() const { return divides_main && weight_sum_bound && strictness && n_divides_degE; }
};

// Numeric emptiness criteria for maximally destabilized bundles of rank n with det of degree degL.
EmptinessReport emptiness_report(Rank n, const DigitContext &ctx, const CurveType &curve, const Integer &degL,
                                 const std::vector<std::vector<Integer>> &weights);

} // namespace pfrob

#endif
