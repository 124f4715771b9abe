#include <pfrob/disc.hpp>

#include <algorithm>
#include <string>

#include <pfrob/errors.hpp>

namespace pfrob
{

namespace
{

Residue mul_mod(Residue a, Residue b, std::uint32_t p)
{
    return static_cast<Residue>((std::uint64_t{a} * b) % p);
}

Residue add_mod(Residue a, Residue b, std::uint32_t p)
{
    return static_cast<Residue>((std::uint64_t{a} + b) % p);
}

Residue inverse_mod(Residue a, std::uint32_t p)
{
    Integer inv;
    const Integer a_z(a), p_z(p);
    if (mpz_invert(inv.get_mpz_t(), a_z.get_mpz_t(), p_z.get_mpz_t()) == 0) {
        throw InvariantViolation("no inverse of " + std::to_string(a) + " mod " + std::to_string(p));
    }
    return static_cast<Residue>(inv.get_ui());
}

// binom(n, k) mod p for 0 <= k <= n < p.
Residue small_binomial_mod_p(Residue n, Residue k, std::uint32_t p)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    Residue num = 1;
    Residue den = 1;
    for (Residue i = 1; i <= k; ++i) {
        num = mul_mod(num, n - k + i, p);
        den = mul_mod(den, i, p);
    }
    return mul_mod(num, inverse_mod(den, p), p);
}

Residue lucas_binomial(Integer n, Integer k, std::uint32_t p)
{
    Residue out = 1;
    while (k > 0) {
        const auto n_digit = static_cast<Residue>(mpz_fdiv_q_ui(n.get_mpz_t(), n.get_mpz_t(), p));
        const auto k_digit = static_cast<Residue>(mpz_fdiv_q_ui(k.get_mpz_t(), k.get_mpz_t(), p));
        out = mul_mod(out, small_binomial_mod_p(n_digit, k_digit, p), p);
        if (out == 0) {
            return 0;
        }
    }
    return out;
}

// q! mod p.
Residue factorial_mod_p(const Integer &q, std::uint32_t p)
{
    if (q >= p) {
        return 0;
    }
    Residue out = 1;
    for (unsigned long i = 2; i <= q.get_ui(); ++i) {
        out = mul_mod(out, static_cast<Residue>(i), p);
    }
    return out;
}

} // namespace

Integer level_quotient(const Integer &j, const DigitContext &ctx)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), j.get_mpz_t(), ctx.power_of_p(ctx.N() - 1).get_mpz_t());
    return q;
}

OperatorAlgebraElement OperatorAlgebraElement::basis(const DigitContext &ctx, Degree j, Residue coefficient)
{
    OperatorAlgebraElement out(ctx);
    out.add_term(j, coefficient);
    return out;
}

Residue OperatorAlgebraElement::coefficient(Degree j) const
{
    const auto it = terms_.find(j);
    return it == terms_.end() ? 0 : it->second;
}

void OperatorAlgebraElement::add_term(Degree j, Residue c)
{
    c %= ctx_.p();
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(j, c);
    if (!inserted) {
        it->second = add_mod(it->second, c, ctx_.p());
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

OperatorAlgebraElement &OperatorAlgebraElement::operator+=(const OperatorAlgebraElement &other)
{
    if (!(ctx_ == other.ctx_)) {
        throw InputError("operator algebra elements live over different (p, N)");
    }
    for (const auto &[j, c] : other.terms_) {
        add_term(j, c);
    }
    return *this;
}

Rational b_coeff_exact(Degree j1, Degree j2, Degree j, const DigitContext &ctx)
{
    if (j < std::max(j1, j2) || j > j1 + j2) {
        throw InputError("b_coeff: degree " + std::to_string(j) + " outside [max(j1, j2), j1 + j2]");
    }
    const auto q = [&ctx](Degree deg) { return level_quotient(Integer(static_cast<unsigned long>(deg)), ctx).get_ui(); };
    const Integer num = factorial(j) * factorial(q(j1)) * factorial(q(j2));
    const Integer den = factorial(j1 + j2 - j) * factorial(j - j1) * factorial(j - j2) * factorial(q(j));
    return make_rational(num, den);
}

Residue b_coeff(Degree j1, Degree j2, Degree j, const DigitContext &ctx)
{
    const Rational exact = b_coeff_exact(j1, j2, j, ctx);
    if (mpz_divisible_ui_p(exact.get_den().get_mpz_t(), ctx.p()) != 0) {
        throw InvariantViolation("structure constant " + exact.get_str() + " for (" + std::to_string(j1) + ", "
                                 + std::to_string(j2) + ", " + std::to_string(j) + ") is not p-integral");
    }
    return reduce_rational_mod(exact, ctx.p());
}

OperatorAlgebraElement b_mul(const OperatorAlgebraElement &x, const OperatorAlgebraElement &y)
{
    if (!(x.context() == y.context())) {
        throw InputError("b_mul: operands live over different (p, N)");
    }
    const auto &ctx = x.context();
    OperatorAlgebraElement out(ctx);
    for (const auto &[j1, c1] : x.terms()) {
        for (const auto &[j2, c2] : y.terms()) {
            const Residue scale = mul_mod(c1, c2, ctx.p());
            for (Degree j = std::max(j1, j2); j <= j1 + j2; ++j) {
                out.add_term(j, mul_mod(scale, b_coeff(j1, j2, j, ctx), ctx.p()));
            }
        }
    }
    return out;
}

Residue generalized_binomial_mod_p(const Integer &n, const Integer &j, std::uint32_t p)
{
    if (j < 0) {
        return 0;
    }
    if (n >= 0) {
        return lucas_binomial(n, j, p);
    }
    const Residue magnitude = lucas_binomial(Integer(-n + j - 1), j, p);
    const bool odd = mpz_odd_p(j.get_mpz_t()) != 0;
    return odd && magnitude != 0 ? p - magnitude : magnitude;
}

Residue nabla_action_scalar(const Integer &d, const Integer &j, const Integer &n, const DigitContext &ctx)
{
    const Residue qfac = factorial_mod_p(level_quotient(j, ctx), ctx.p());
    if (qfac == 0) {
        return 0;
    }
    return mul_mod(qfac, generalized_binomial_mod_p(Integer(n - lift(d, ctx)), j, ctx.p()), ctx.p());
}

TruncatedSeries::TruncatedSeries(std::uint32_t p, std::vector<Residue> coeffs) : p_(p), coeffs_(std::move(coeffs))
{
    for (auto &c : coeffs_) {
        c %= p_;
    }
}

TruncatedSeries TruncatedSeries::monomial(std::uint32_t p, std::size_t order, std::size_t n, Residue c)
{
    std::vector<Residue> coeffs(order, 0);
    if (n < order) {
        coeffs[n] = c;
    }
    return TruncatedSeries(p, std::move(coeffs));
}

TruncatedSeries apply_operator(const Integer &d, Degree j, const TruncatedSeries &s, const DigitContext &ctx)
{
    if (s.p() != ctx.p()) {
        throw InputError("series and context disagree on p");
    }
    std::vector<Residue> out(s.order(), 0);
    const Integer jz(static_cast<unsigned long>(j));
    for (std::size_t n = 0; n < s.order(); ++n) {
        if (s[n] != 0) {
            out[n] = mul_mod(nabla_action_scalar(d, jz, Integer(static_cast<unsigned long>(n)), ctx), s[n], ctx.p());
        }
    }
    return TruncatedSeries(ctx.p(), std::move(out));
}

TruncatedSeries apply_element(const Integer &d, const OperatorAlgebraElement &x, const TruncatedSeries &s)
{
    const auto &ctx = x.context();
    std::vector<Residue> out(s.order(), 0);
    for (const auto &[j, c] : x.terms()) {
        const auto part = apply_operator(d, j, s, ctx);
        for (std::size_t n = 0; n < out.size(); ++n) {
            out[n] = add_mod(out[n], mul_mod(c, part[n], ctx.p()), ctx.p());
        }
    }
    return TruncatedSeries(ctx.p(), std::move(out));
}

std::vector<Residue> monodromy(const Integer &d, const DigitContext &ctx)
{
    std::vector<Residue> out;
    out.reserve(ctx.N());
    for (unsigned s = 0; s < ctx.N(); ++s) {
        out.push_back(nabla_action_scalar(d, ctx.power_of_p(s), Integer(0), ctx));
    }
    return out;
}

std::vector<std::uint64_t> solution_exponents(const Integer &d, std::uint64_t M, const DigitContext &ctx)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 0; n < M; ++n) {
        const Integer nz(static_cast<unsigned long>(n));
        bool horizontal = true;
        for (Integer j = 1; j < ctx.modulus() && horizontal; ++j) {
            horizontal = nabla_action_scalar(d, j, nz, ctx) == 0;
        }
        if (horizontal) {
            out.push_back(n);
        }
    }
    return out;
}

LocalParabolicDatum::LocalParabolicDatum(ExponentTuple weights, std::vector<Rank> type)
    : weights_(std::move(weights)), type_(std::move(type))
{
    if (weights_.size() == 0) {
        throw InputError("a parabolic datum needs at least one flag step");
    }
    if (weights_.size() != type_.size()) {
        throw InputError("weights and type have different lengths");
    }
    if (std::find(type_.begin(), type_.end(), Rank{0}) != type_.end()) {
        throw InputError("flag type entries must be positive");
    }
}

Rank LocalParabolicDatum::rank() const noexcept
{
    Rank n = 0;
    for (auto l : type_) {
        n += l;
    }
    return n;
}

LocalFlatDatum::LocalFlatDatum(DigitContext ctx, std::vector<FlatAtom> atoms) : ctx_(std::move(ctx))
{
    std::sort(atoms.begin(), atoms.end(), [](const FlatAtom &a, const FlatAtom &b) { return a.exponent < b.exponent; });
    for (auto &atom : atoms) {
        if (atom.multiplicity == 0) {
            throw InputError("atom multiplicities must be positive");
        }
        if (atom.exponent < 0 || atom.exponent >= ctx_.modulus()) {
            throw InputError("atom exponent " + atom.exponent.get_str() + " outside [0, p^N)");
        }
        if (!atoms_.empty() && atoms_.back().exponent == atom.exponent) {
            atoms_.back().multiplicity += atom.multiplicity;
        } else {
            atoms_.push_back(std::move(atom));
        }
    }
    if (atoms_.empty()) {
        throw InputError("a flat datum needs at least one atom");
    }
}

Rank LocalFlatDatum::rank() const noexcept
{
    Rank n = 0;
    for (const auto &a : atoms_) {
        n += a.multiplicity;
    }
    return n;
}

ParabolicFlatDatum local_pullback(const LocalParabolicDatum &e)
{
    std::vector<FlatAtom> atoms;
    std::vector<FlagStep> flag;
    Rank cumulative = 0;
    for (std::size_t j = 0; j < e.type().size(); ++j) {
        cumulative += e.type()[j];
        atoms.push_back({e.weights()[j], e.type()[j]});
        flag.push_back({e.weights()[j], e.type()[j], cumulative});
    }
    return {LocalFlatDatum(e.context(), std::move(atoms)), std::move(flag)};
}

LocalParabolicDatum local_descent(const ParabolicFlatDatum &f)
{
    std::vector<Integer> weights;
    std::vector<Rank> type;
    std::map<Integer, Rank> seen;
    Rank cumulative = 0;
    for (const auto &step : f.flag) {
        cumulative += step.kernel_rank;
        if (step.kernel_rank == 0 || step.cumulative_rank != cumulative) {
            throw InvariantViolation("flag ranks are inconsistent");
        }
        weights.push_back(step.exponent);
        type.push_back(step.kernel_rank);
        seen[step.exponent] += step.kernel_rank;
    }
    // The steps must account for every atom exactly.
    if (seen.size() != f.flat.atoms().size()) {
        throw InvariantViolation("flag exponents do not match the flat datum");
    }
    for (const auto &atom : f.flat.atoms()) {
        const auto it = seen.find(atom.exponent);
        if (it == seen.end() || it->second != atom.multiplicity) {
            throw InvariantViolation("flag multiplicities do not match the flat datum");
        }
    }
    return LocalParabolicDatum(ExponentTuple(std::move(weights), f.flat.context(), false), std::move(type));
}

LocalParabolicDatum local_descent(const LocalFlatDatum &f)
{
    std::vector<FlagStep> flag;
    Rank cumulative = 0;
    for (const auto &atom : f.atoms()) {
        cumulative += atom.multiplicity;
        flag.push_back({atom.exponent, atom.multiplicity, cumulative});
    }
    return local_descent(ParabolicFlatDatum{f, std::move(flag)});
}

DeterminantData local_det(const LocalParabolicDatum &e)
{
    Integer s = 0;
    for (std::size_t j = 0; j < e.type().size(); ++j) {
        s += e.weights()[j] * static_cast<unsigned long>(e.type()[j]);
    }
    return {s, mod_floor(s, e.context().modulus())};
}

DeterminantData local_det(const LocalFlatDatum &f)
{
    Integer s = 0;
    for (const auto &atom : f.atoms()) {
        s += atom.exponent * static_cast<unsigned long>(atom.multiplicity);
    }
    return {s, mod_floor(s, f.context().modulus())};
}

std::vector<FlagStep> canonical_flag(const LocalFlatDatum &f)
{
    std::vector<FlagStep> flag;
    Rank cumulative = 0;
    for (const auto &atom : f.atoms()) {
        if (atom.multiplicity != 1) {
            throw InputError("exponent " + atom.exponent.get_str()
                             + " is repeated; the flag is unique only for distinct exponents");
        }
        ++cumulative;
        flag.push_back({atom.exponent, 1, cumulative});
    }
    return flag;
}

bool transitivity_check(const LocalParabolicDatum &e, unsigned M)
{
    const auto &ctx = e.context();
    const TupleSplit split = split_tuple_monotone(e.weights(), M);
    if (!split.monotone) {
        throw InputError("transitivity needs monotone low and high parts of the weights");
    }

    const ParabolicFlatDatum direct = local_pullback(e);

    // Stage one: level N - M with the high parts.
    std::vector<Integer> high = split.high;
    std::vector<Rank> type = e.type();
    if (M < ctx.N()) {
        const DigitContext outer(ctx.p(), ctx.N() - M);
        const auto first = local_pullback(LocalParabolicDatum(ExponentTuple(high, outer, false), type));
        high.clear();
        type.clear();
        for (const auto &step : first.flag) {
            high.push_back(step.exponent);
            type.push_back(step.kernel_rank);
        }
    }

    // Stage two: level M with the low parts, on the flag produced by stage one.
    std::vector<Integer> low = split.low;
    if (M > 0) {
        const DigitContext inner(ctx.p(), M);
        const auto second = local_pullback(LocalParabolicDatum(ExponentTuple(low, inner, false), type));
        low.clear();
        type.clear();
        for (const auto &step : second.flag) {
            low.push_back(step.exponent);
            type.push_back(step.kernel_rank);
        }
    }

    std::vector<FlatAtom> atoms;
    std::vector<FlagStep> flag;
    Rank cumulative = 0;
    for (std::size_t j = 0; j < type.size(); ++j) {
        const Integer exponent = low[j] + ctx.power_of_p(M) * high[j];
        cumulative += type[j];
        atoms.push_back({exponent, type[j]});
        flag.push_back({exponent, type[j], cumulative});
    }
    const LocalFlatDatum staged(ctx, std::move(atoms));
    return staged == direct.flat && flag == direct.flag;
}

} // namespace pfrob
