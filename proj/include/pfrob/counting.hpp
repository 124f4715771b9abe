#ifndef PFROB_COUNTING_HPP
#define PFROB_COUNTING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include <pfrob/cyclotomic.hpp>
#include <pfrob/interval.hpp>
#include <pfrob/numeric.hpp>

namespace pfrob
{

// (a^[1], a^[2]) with 0 <= a^[1] < a^[2] < p.
struct WeightPair {
    std::uint32_t low = 0;
    std::uint32_t high = 0;

    std::uint32_t gap() const noexcept { return high - low; }
    bool operator==(const WeightPair &) const = default;
};

// Input of the rank-2 counting formula; r is the number of weight pairs.
class Rank2CountInput
{
public:
    // Throws InputError unless p is an odd prime, 2g - 2 + r > 0 and every pair is strict in [0, p).
    Rank2CountInput(std::uint32_t p, unsigned g, std::vector<WeightPair> pairs);

    std::uint32_t p() const noexcept { return p_; }
    unsigned g() const noexcept { return g_; }
    unsigned r() const noexcept { return static_cast<unsigned>(pairs_.size()); }
    const std::vector<WeightPair> &pairs() const noexcept { return pairs_; }
    // 2g - 2 + r
    unsigned euler() const noexcept { return 2 * g_ - 2 + r(); }
    // The differences b_i = a_i^[2] - a_i^[1], sorted; the formula depends on nothing else.
    std::vector<std::uint32_t> sorted_gaps() const;

private:
    std::uint32_t p_;
    unsigned g_;
    std::vector<WeightPair> pairs_;
};

struct HypothesisReport {
    bool parity = false;      // r + sum (a1 + a2) even
    bool gap = false;         // sum (a2 - a1) < 2g - 2 + r
    bool prime_bound = false; // 2g - 2 + r <= p / 2
    bool degL_even = false;

    bool all_ok() const noexcept { return parity && gap && prime_bound && degL_even; }
};

HypothesisReport check_hypotheses(const Rank2CountInput &in, bool degL_even);

// 2 p^{g-1} sum_j prod_i (-1)^{(j+1)(b_i+1)} sin(b_i j pi / p) / sin^{2g-2+r}(j pi / p), exactly.
// Throws InvariantViolation if the cyclotomic sum is not rational.
Rational count_rank2(const Rank2CountInput &in);

// The same quantity through the odd multiples (2 tau(b_i) + 1).
Rational count_rank2_tau(const Rank2CountInput &in);

// sin((2 tau(b) + 1) j pi / p) == (-1)^{(j+1)(b+1)} sin(b j pi / p), checked in Q(zeta_{2p}).
bool sign_identity(std::uint32_t b, std::uint32_t j, std::uint32_t p);

// count / 2^{2g}
Rational pgl_count(const Rational &count, unsigned g);
Rational pgl_count(const Rank2CountInput &in);

inline constexpr unsigned kDefaultOracleBits = 128;

// Rigorous enclosure of the formula value by interval arithmetic on the sines.
// Throws InsufficientPrecision when the enclosure is wider than 1/4, InputError below 64 bits.
Interval float_oracle(const Rank2CountInput &in, unsigned precision_bits = kDefaultOracleBits);

// Doubles the precision until the width is below max_width or max_bits is exceeded.
Interval float_oracle_refined(const Rank2CountInput &in, const Rational &max_width, unsigned start_bits = 64,
                              unsigned max_bits = 1u << 14);

// Memoizing evaluator for sweeps: values are cached per (p, g, sorted gaps) and the
// per-(p, j) cyclotomic denominators are reused across inputs. Not thread-safe.
class CountEvaluator
{
public:
    explicit CountEvaluator(unsigned oracle_bits = kDefaultOracleBits) : oracle_bits_(oracle_bits) {}

    const Rational &count(const Rank2CountInput &in);
    const Rational &count_tau(const Rank2CountInput &in);
    // Starts at the configured precision and doubles it (up to 16x) while the enclosure is wider than 1/4.
    const Interval &oracle(const Rank2CountInput &in);

    std::size_t distinct_evaluations() const noexcept { return counts_.size(); }

private:
    using Key = std::tuple<std::uint32_t, unsigned, std::vector<std::uint32_t>>;

    Rational evaluate(const Rank2CountInput &in, bool tau_form);
    const CyclotomicElement &inverse_sine_power(std::uint32_t p, std::uint32_t j, unsigned K);

    unsigned oracle_bits_;
    std::map<Key, Rational> counts_;
    std::map<Key, Rational> tau_counts_;
    std::map<Key, Interval> oracles_;
    std::map<std::tuple<std::uint32_t, std::uint32_t, unsigned>, CyclotomicElement> inverse_powers_;
};

} // namespace pfrob

#endif
