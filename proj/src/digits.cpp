#include <pfrob/digits.hpp>

#include <algorithm>
#include <string>

#include <pfrob/errors.hpp>

namespace pfrob
{

Residue reduce_rational_mod(const Rational &q, std::uint32_t p)
{
    const Residue den = reduce_mod(q.get_den(), p);
    if (den == 0) {
        throw InvariantViolation("rational " + q.get_str() + " is not p-integral for p = " + std::to_string(p));
    }
    const Residue num = reduce_mod(q.get_num(), p);
    Integer inv;
    const Integer den_z(den), p_z(p);
    mpz_invert(inv.get_mpz_t(), den_z.get_mpz_t(), p_z.get_mpz_t());
    return static_cast<Residue>((std::uint64_t{num} * inv.get_ui()) % p);
}

Integer power(const Integer &base, unsigned long exponent)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Integer factorial(unsigned long n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

DigitContext::DigitContext(std::uint32_t p, unsigned N) : p_(p), N_(N)
{
    if (p >= (1u << 31) || !is_prime(p)) {
        throw InputError("p = " + std::to_string(p) + " is not a supported prime");
    }
    if (N < 1) {
        throw InputError("N must be at least 1");
    }
    powers_.reserve(N + 1);
    powers_.emplace_back(1);
    for (unsigned s = 1; s <= N; ++s) {
        powers_.push_back(powers_.back() * p);
    }
}

const Integer &DigitContext::power_of_p(unsigned s) const
{
    if (s > N_) {
        throw InputError("power p^" + std::to_string(s) + " exceeds the horizon p^N");
    }
    return powers_[s];
}

Integer lift(const Integer &d, const DigitContext &ctx) { return mod_floor(d, ctx.modulus()); }

std::vector<Residue> lift_and_digits(const Integer &d, const DigitContext &ctx)
{
    Integer rest = lift(d, ctx);
    std::vector<Residue> digits(ctx.N());
    for (auto &digit : digits) {
        digit = static_cast<Residue>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), ctx.p()));
    }
    return digits;
}

std::vector<Residue> negate_digits(const Integer &d, const DigitContext &ctx)
{
    return lift_and_digits(Integer(-d), ctx);
}

LevelSplit split_level(const Integer &a, unsigned M, const DigitContext &ctx)
{
    if (a < 0 || a >= ctx.modulus()) {
        throw InputError("split: exponent " + a.get_str() + " outside [0, p^N)");
    }
    if (M > ctx.N()) {
        throw InputError("split: level M = " + std::to_string(M) + " exceeds N = " + std::to_string(ctx.N()));
    }
    LevelSplit out;
    mpz_fdiv_qr(out.high.get_mpz_t(), out.low.get_mpz_t(), a.get_mpz_t(), ctx.power_of_p(M).get_mpz_t());
    return out;
}

bool xi_contains(std::span<const Integer> entries, std::size_t m, const DigitContext &ctx, bool strict)
{
    if (entries.size() != m) {
        return false;
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 0 || entries[i] >= ctx.modulus()) {
            return false;
        }
        if (i > 0) {
            if (strict ? entries[i] <= entries[i - 1] : entries[i] < entries[i - 1]) {
                return false;
            }
        }
    }
    return true;
}

ExponentTuple::ExponentTuple(std::vector<Integer> entries, DigitContext ctx, bool strict)
    : entries_(std::move(entries)), ctx_(std::move(ctx)), strict_(strict)
{
    if (!xi_contains(entries_, entries_.size(), ctx_, strict_)) {
        std::string text;
        for (const auto &e : entries_) {
            text += (text.empty() ? "" : ",") + e.get_str();
        }
        throw InputError("(" + text + ") is not a " + (strict_ ? "strictly" : "weakly")
                         + " increasing tuple in [0, p^N)");
    }
}

std::vector<Rational> ExponentTuple::normalized() const
{
    std::vector<Rational> out;
    out.reserve(entries_.size());
    for (const auto &a : entries_) {
        out.push_back(make_rational(a, ctx_.modulus()));
    }
    return out;
}

WeightVector::WeightVector(std::vector<ExponentTuple> tuples) : tuples_(std::move(tuples))
{
    for (const auto &t : tuples_) {
        if (!(t.context() == tuples_.front().context())) {
            throw InputError("weight tuples must share one (p, N) context");
        }
    }
}

std::vector<std::vector<Rational>> WeightVector::normalized() const
{
    std::vector<std::vector<Rational>> out;
    out.reserve(tuples_.size());
    for (const auto &t : tuples_) {
        out.push_back(t.normalized());
    }
    return out;
}

TupleSplit split_tuple_monotone(const ExponentTuple &t, unsigned M)
{
    TupleSplit out;
    out.monotone = true;
    for (const auto &a : t.entries()) {
        auto [low, high] = split_level(a, M, t.context());
        if (!out.low.empty() && (low < out.low.back() || high < out.high.back())) {
            out.monotone = false;
        }
        out.low.push_back(std::move(low));
        out.high.push_back(std::move(high));
    }
    return out;
}

Integer xi_cardinality(std::size_t m, const DigitContext &ctx, bool strict)
{
    const Integer top = strict ? ctx.modulus() : Integer(ctx.modulus() + m - 1);
    if (top < 0) {
        return 0;
    }
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), m);
    return out;
}

XiEnumerator::XiEnumerator(std::size_t m, DigitContext ctx, bool strict, std::uint64_t cap)
    : m_(m), ctx_(std::move(ctx)), strict_(strict), cardinality_(xi_cardinality(m, ctx_, strict))
{
    if (cardinality_ > Integer(static_cast<unsigned long>(cap))) {
        throw CapExceeded("exponent tuple enumeration exceeds the cap of " + std::to_string(cap),
                          cardinality_.get_str());
    }
    done_ = cardinality_ == 0;
}

std::optional<ExponentTuple> XiEnumerator::next()
{
    if (done_) {
        return std::nullopt;
    }
    const Integer step = strict_ ? 1 : 0;
    if (!started_) {
        started_ = true;
        current_.assign(m_, Integer(0));
        for (std::size_t i = 1; i < m_; ++i) {
            current_[i] = current_[i - 1] + step;
        }
        if (m_ == 0) {
            done_ = true;
        }
        return ExponentTuple(current_, ctx_, strict_);
    }
    // Rightmost position below its ceiling p^N - 1 - (slots to its right when strict).
    std::size_t i = m_;
    while (i > 0) {
        const std::size_t pos = i - 1;
        const Integer ceiling = ctx_.modulus() - 1 - step * Integer(static_cast<unsigned long>(m_ - 1 - pos));
        if (current_[pos] < ceiling) {
            break;
        }
        --i;
    }
    if (i == 0) {
        done_ = true;
        return std::nullopt;
    }
    ++current_[i - 1];
    for (std::size_t k = i; k < m_; ++k) {
        current_[k] = current_[k - 1] + step;
    }
    return ExponentTuple(current_, ctx_, strict_);
}

std::vector<ExponentTuple> enumerate_xi(std::size_t m, const DigitContext &ctx, bool strict, std::uint64_t cap)
{
    XiEnumerator it(m, ctx, strict, cap);
    std::vector<ExponentTuple> out;
    while (auto t = it.next()) {
        out.push_back(std::move(*t));
    }
    return out;
}

ExponentTuple rho_canonical(const ExponentTuple &t)
{
    if (!t.strict()) {
        throw InputError("rho_canonical needs a strictly increasing tuple");
    }
    if (t.size() == 0) {
        return t;
    }
    // The least shift starts with 0, so only the shifts c = -a^[k] compete.
    const auto &modulus = t.context().modulus();
    std::vector<Integer> best;
    for (const auto &anchor : t.entries()) {
        std::vector<Integer> shifted;
        shifted.reserve(t.size());
        for (const auto &a : t.entries()) {
            shifted.push_back(mod_floor(a - anchor, modulus));
        }
        std::sort(shifted.begin(), shifted.end());
        if (best.empty() || shifted < best) {
            best = std::move(shifted);
        }
    }
    return ExponentTuple(std::move(best), t.context(), true);
}

bool rho_equivalent(const ExponentTuple &a, const ExponentTuple &b)
{
    return rho_canonical(a) == rho_canonical(b);
}

std::uint32_t tau(std::uint32_t b, std::uint32_t p)
{
    if (p % 2 == 0) {
        throw InputError("tau is defined for odd p only");
    }
    if (b >= p) {
        throw InputError("tau: b = " + std::to_string(b) + " outside [0, p)");
    }
    return b % 2 == 1 ? (b - 1) / 2 : (p - 1 - b) / 2;
}

} // namespace pfrob
