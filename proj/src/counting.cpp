#include <pfrob/counting.hpp>

#include <algorithm>
#include <string>

#include <pfrob/digits.hpp>
#include <pfrob/errors.hpp>

namespace pfrob
{

namespace
{

int sign_factor(std::uint32_t b, std::uint32_t j) { return ((j + 1) % 2 == 1 && (b + 1) % 2 == 1) ? -1 : 1; }

Rational outer_real_factor(std::uint32_t p, unsigned g)
{
    if (g >= 1) {
        return 2 * Rational(power(Integer(p), g - 1));
    }
    return Rational(2, p);
}

// Outer factor 2 p^{g-1} times (2i)^{2g-2} = (-4)^{g-1} from writing each sine as (zeta^m - zeta^-m) / 2i.
Rational outer_factor(std::uint32_t p, unsigned g)
{
    if (g >= 1) {
        return outer_real_factor(p, g) * Rational(power(Integer(-4), g - 1));
    }
    return outer_real_factor(p, g) / Rational(-4);
}

} // namespace

Rank2CountInput::Rank2CountInput(std::uint32_t p, unsigned g, std::vector<WeightPair> pairs)
    : p_(p), g_(g), pairs_(std::move(pairs))
{
    if (p % 2 == 0 || !is_prime(p)) {
        throw InputError("counting formula needs an odd prime p, got " + std::to_string(p));
    }
    if (2 * static_cast<long>(g) - 2 + static_cast<long>(pairs_.size()) <= 0) {
        throw InputError("counting formula needs 2g - 2 + r > 0");
    }
    for (const auto &w : pairs_) {
        if (!(w.low < w.high && w.high < p)) {
            throw InputError("weight pair (" + std::to_string(w.low) + ", " + std::to_string(w.high) +
                             ") must satisfy 0 <= a1 < a2 < p");
        }
    }
}

std::vector<std::uint32_t> Rank2CountInput::sorted_gaps() const
{
    std::vector<std::uint32_t> out;
    out.reserve(pairs_.size());
    for (const auto &w : pairs_) {
        out.push_back(w.gap());
    }
    std::sort(out.begin(), out.end());
    return out;
}

HypothesisReport check_hypotheses(const Rank2CountInput &in, bool degL_even)
{
    HypothesisReport h;
    unsigned long weight_sum = 0, gap_sum = 0;
    for (const auto &w : in.pairs()) {
        weight_sum += w.low + w.high;
        gap_sum += w.gap();
    }
    h.parity = (in.r() + weight_sum) % 2 == 0;
    h.gap = gap_sum < in.euler();
    h.prime_bound = 2UL * in.euler() <= in.p();
    h.degL_even = degL_even;
    return h;
}

bool sign_identity(std::uint32_t b, std::uint32_t j, std::uint32_t p)
{
    const long odd = 2L * tau(b, p) + 1;
    const auto lhs = CyclotomicElement::sine_numerator(p, odd * static_cast<long>(j));
    const auto rhs = CyclotomicElement::sine_numerator(p, static_cast<long>(b) * j) * Rational(sign_factor(b, j));
    return lhs == rhs;
}

Rational pgl_count(const Rational &count, unsigned g) { return count / Rational(power(Integer(2), 2UL * g)); }

Rational count_rank2(const Rank2CountInput &in)
{
    CountEvaluator ev;
    return ev.count(in);
}

Rational count_rank2_tau(const Rank2CountInput &in)
{
    CountEvaluator ev;
    return ev.count_tau(in);
}

Rational pgl_count(const Rank2CountInput &in) { return pgl_count(count_rank2(in), in.g()); }

Interval float_oracle(const Rank2CountInput &in, unsigned precision_bits)
{
    if (precision_bits < 64) {
        throw InputError("oracle precision must be at least 64 bits");
    }
    const std::uint32_t p = in.p();
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits);
    Interval sum(prec);
    for (std::uint32_t j = 1; j < p; ++j) {
        Interval term = Interval::exact(Rational(1), prec);
        for (const auto &w : in.pairs()) {
            const std::uint32_t b = w.gap();
            Interval s = Interval::sin_pi(Rational(static_cast<unsigned long>(b) * j, p), prec);
            term = term * (sign_factor(b, j) < 0 ? -s : s);
        }
        const Interval denom = Interval::sin_pi(Rational(j, p), prec).pow(in.euler());
        sum = sum + term / denom;
    }
    const Interval out = sum * Interval::exact(outer_real_factor(p, in.g()), prec);
    if (mpfr_cmp_d(out.width().get(), 0.25) > 0) {
        throw InsufficientPrecision("oracle enclosure wider than 1/4 at " + std::to_string(precision_bits) + " bits");
    }
    return out;
}

Interval float_oracle_refined(const Rank2CountInput &in, const Rational &max_width, unsigned start_bits,
                              unsigned max_bits)
{
    for (unsigned bits = std::max(start_bits, 64u); bits <= max_bits; bits *= 2) {
        try {
            Interval out = float_oracle(in, bits);
            if (mpfr_cmp_q(out.width().get(), max_width.get_mpq_t()) <= 0) {
                return out;
            }
        } catch (const InsufficientPrecision &) {
        }
    }
    throw InsufficientPrecision("oracle did not reach width " + max_width.get_str() + " within " +
                                std::to_string(max_bits) + " bits");
}

const CyclotomicElement &CountEvaluator::inverse_sine_power(std::uint32_t p, std::uint32_t j, unsigned K)
{
    const auto key = std::make_tuple(p, j, K);
    auto it = inverse_powers_.find(key);
    if (it == inverse_powers_.end()) {
        auto value = CyclotomicElement::sine_numerator(p, j).inverse().pow(K);
        it = inverse_powers_.emplace(key, std::move(value)).first;
    }
    return it->second;
}

Rational CountEvaluator::evaluate(const Rank2CountInput &in, bool tau_form)
{
    const std::uint32_t p = in.p();
    const auto gaps = in.sorted_gaps();
    auto sum = CyclotomicElement::zero(p);
    for (std::uint32_t j = 1; j < p; ++j) {
        CyclotomicElement term = inverse_sine_power(p, j, in.euler());
        int sign = 1;
        for (const auto b : gaps) {
            if (tau_form) {
                term = term.times_sine_numerator((2L * tau(b, p) + 1) * static_cast<long>(j));
            } else {
                term = term.times_sine_numerator(static_cast<long>(b) * j);
                sign *= sign_factor(b, j);
            }
        }
        sum += sign < 0 ? term * Rational(-1) : term;
    }
    return sum.to_rational() * outer_factor(p, in.g());
}

const Rational &CountEvaluator::count(const Rank2CountInput &in)
{
    Key key{in.p(), in.g(), in.sorted_gaps()};
    auto it = counts_.find(key);
    if (it == counts_.end()) {
        it = counts_.emplace(std::move(key), evaluate(in, false)).first;
    }
    return it->second;
}

const Rational &CountEvaluator::count_tau(const Rank2CountInput &in)
{
    Key key{in.p(), in.g(), in.sorted_gaps()};
    auto it = tau_counts_.find(key);
    if (it == tau_counts_.end()) {
        it = tau_counts_.emplace(std::move(key), evaluate(in, true)).first;
    }
    return it->second;
}

const Interval &CountEvaluator::oracle(const Rank2CountInput &in)
{
    Key key{in.p(), in.g(), in.sorted_gaps()};
    auto it = oracles_.find(key);
    if (it == oracles_.end()) {
        it = oracles_.emplace(std::move(key), float_oracle_refined(in, Rational(1, 4), oracle_bits_, oracle_bits_ << 4))
                 .first;
    }
    return it->second;
}

} // namespace pfrob
