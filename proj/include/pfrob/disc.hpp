#ifndef PFROB_DISC_HPP
#define PFROB_DISC_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <pfrob/digits.hpp>
#include <pfrob/numeric.hpp>

namespace pfrob
{

using Degree = std::uint64_t;

// q_j with j = p^{N-1} q_j + r_j, 0 <= r_j < p^{N-1}.
Integer level_quotient(const Integer &j, const DigitContext &ctx);

// Element of the commutative F_p-algebra spanned by symbols d<j>, j >= 0.
// Zero coefficients are never stored.
class OperatorAlgebraElement
{
public:
    explicit OperatorAlgebraElement(DigitContext ctx) : ctx_(std::move(ctx)) {}

    static OperatorAlgebraElement basis(const DigitContext &ctx, Degree j, Residue coefficient = 1);
    static OperatorAlgebraElement unit(const DigitContext &ctx) { return basis(ctx, 0); }

    const DigitContext &context() const noexcept { return ctx_; }
    const std::map<Degree, Residue> &terms() const noexcept { return terms_; }
    Residue coefficient(Degree j) const;

    // Adds c * d<j>.
    void add_term(Degree j, Residue c);

    OperatorAlgebraElement &operator+=(const OperatorAlgebraElement &other);

    bool operator==(const OperatorAlgebraElement &other) const
    {
        return ctx_ == other.ctx_ && terms_ == other.terms_;
    }

private:
    DigitContext ctx_;
    std::map<Degree, Residue> terms_;
};

// Structure constant of d<j1> * d<j2> at d<j>, as an exact rational before reduction.
// Throws InputError unless max(j1, j2) <= j <= j1 + j2.
Rational b_coeff_exact(Degree j1, Degree j2, Degree j, const DigitContext &ctx);

// The same constant in F_p; throws InvariantViolation if it is not p-integral.
Residue b_coeff(Degree j1, Degree j2, Degree j, const DigitContext &ctx);

// Throws InputError on a context mismatch.
OperatorAlgebraElement b_mul(const OperatorAlgebraElement &x, const OperatorAlgebraElement &y);

// binom(n, j) mod p for any integer n, via Lucas (after binom(-m, j) = (-1)^j binom(m + j - 1, j)).
Residue generalized_binomial_mod_p(const Integer &n, const Integer &j, std::uint32_t p);

// q_j! * binom(n - d~, j) mod p: the scalar by which d<j> acts on t^n in the model module O_{d}.
Residue nabla_action_scalar(const Integer &d, const Integer &j, const Integer &n, const DigitContext &ctx);

// Coefficients mod p of 1, t, ..., t^{M-1}.
class TruncatedSeries
{
public:
    TruncatedSeries(std::uint32_t p, std::vector<Residue> coeffs);

    static TruncatedSeries monomial(std::uint32_t p, std::size_t order, std::size_t n, Residue c = 1);

    std::uint32_t p() const noexcept { return p_; }
    std::size_t order() const noexcept { return coeffs_.size(); }
    const std::vector<Residue> &coeffs() const noexcept { return coeffs_; }
    Residue operator[](std::size_t n) const { return coeffs_[n]; }

    bool operator==(const TruncatedSeries &) const = default;

private:
    std::uint32_t p_;
    std::vector<Residue> coeffs_;
};

// Action of d<j> under the model connection with exponent d: out[n] = nabla_action_scalar(d, j, n) * s[n].
TruncatedSeries apply_operator(const Integer &d, Degree j, const TruncatedSeries &s, const DigitContext &ctx);

// Action of a whole algebra element (linear extension of apply_operator).
TruncatedSeries apply_element(const Integer &d, const OperatorAlgebraElement &x, const TruncatedSeries &s);

// (mu<1>, mu<p>, ..., mu<p^{N-1}>) of the model module with exponent d.
std::vector<Residue> monodromy(const Integer &d, const DigitContext &ctx);

// {n < M : every d<j>, 1 <= j < p^N, kills t^n}, by direct evaluation.
std::vector<std::uint64_t> solution_exponents(const Integer &d, std::uint64_t M, const DigitContext &ctx);

// Split parabolic bundle on the Frobenius twist of the disc: weights a and flag type l.
class LocalParabolicDatum
{
public:
    // Throws InputError if lengths differ, a type entry is zero, or the tuple is empty.
    LocalParabolicDatum(ExponentTuple weights, std::vector<Rank> type);

    const DigitContext &context() const noexcept { return weights_.context(); }
    const ExponentTuple &weights() const noexcept { return weights_; }
    const std::vector<Rank> &type() const noexcept { return type_; }
    Rank rank() const noexcept;

    bool operator==(const LocalParabolicDatum &other) const
    {
        return weights_.entries() == other.weights_.entries() && context() == other.context() && type_ == other.type_;
    }

private:
    ExponentTuple weights_;
    std::vector<Rank> type_;
};

struct FlatAtom {
    Integer exponent;
    Rank multiplicity = 0;

    bool operator==(const FlatAtom &) const = default;
};

// Split p^N-flat module on the disc: direct sum of model modules O_{a} with multiplicities.
// Stored with exponents strictly increasing; equal exponents are merged on construction.
class LocalFlatDatum
{
public:
    LocalFlatDatum(DigitContext ctx, std::vector<FlatAtom> atoms);

    const DigitContext &context() const noexcept { return ctx_; }
    const std::vector<FlatAtom> &atoms() const noexcept { return atoms_; }
    Rank rank() const noexcept;

    bool operator==(const LocalFlatDatum &other) const { return ctx_ == other.ctx_ && atoms_ == other.atoms_; }

private:
    DigitContext ctx_;
    std::vector<FlatAtom> atoms_;
};

// One step of the quasi-parabolic filtration: the summand of the given exponent
// with kernel rank `kernel_rank`; `cumulative_rank` is the rank of the quotient reached at this step.
struct FlagStep {
    Integer exponent;
    Rank kernel_rank = 0;
    Rank cumulative_rank = 0;

    bool operator==(const FlagStep &) const = default;
};

// A flat datum together with its ordered flag (a parabolic p^N-flat bundle on the disc).
struct ParabolicFlatDatum {
    LocalFlatDatum flat;
    std::vector<FlagStep> flag;
};

ParabolicFlatDatum local_pullback(const LocalParabolicDatum &e);

// Inverse of local_pullback; the flag fixes the step structure. Throws InvariantViolation
// if the flag is inconsistent with the atoms.
LocalParabolicDatum local_descent(const ParabolicFlatDatum &f);

// Descent with the flag that has one step per distinct exponent.
LocalParabolicDatum local_descent(const LocalFlatDatum &f);

struct DeterminantData {
    Integer twist;    // s = sum_j a^[j] l^[j]
    Integer exponent; // s mod p^N

    bool operator==(const DeterminantData &) const = default;
};

DeterminantData local_det(const LocalParabolicDatum &e);
DeterminantData local_det(const LocalFlatDatum &f);

// The unique flag when all multiplicities are 1: eigenlines in ascending exponent order.
// Throws InputError on a repeated exponent.
std::vector<FlagStep> canonical_flag(const LocalFlatDatum &f);

// Compares the level-N pull-back with the two-stage pull-back (level N - M with high parts,
// then level M with low parts, exponents recombined as low + p^M high).
// Throws InputError when the split of the weights is not monotone.
bool transitivity_check(const LocalParabolicDatum &e, unsigned M);

} // namespace pfrob

#endif
