#ifndef PFROB_DIGITS_HPP
#define PFROB_DIGITS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <pfrob/numeric.hpp>

namespace pfrob
{

// Deterministic trial division; adequate for the 32-bit primes we accept.
bool is_prime(std::uint64_t n);

// The prime p and the level horizon p^N (level N - 1).
class DigitContext
{
public:
    // Throws InputError unless p is prime and N >= 1.
    DigitContext(std::uint32_t p, unsigned N);

    std::uint32_t p() const noexcept { return p_; }
    unsigned N() const noexcept { return N_; }

    // p^N
    const Integer &modulus() const noexcept { return powers_.back(); }

    // p^s for 0 <= s <= N.
    const Integer &power_of_p(unsigned s) const;

    bool operator==(const DigitContext &other) const noexcept { return p_ == other.p_ && N_ == other.N_; }

private:
    std::uint32_t p_;
    unsigned N_;
    std::vector<Integer> powers_;
};

// Unique lift d~ of d mod p^N into [0, p^N).
Integer lift(const Integer &d, const DigitContext &ctx);

// Base-p digits (d~_[0], ..., d~_[N-1]) of the lift of d.
std::vector<Residue> lift_and_digits(const Integer &d, const DigitContext &ctx);

// Digits of the lift of -d.
std::vector<Residue> negate_digits(const Integer &d, const DigitContext &ctx);

struct LevelSplit {
    Integer low;  // s_1^M(a), in [0, p^M)
    Integer high; // s_2^M(a), in [0, p^{N-M})

    bool operator==(const LevelSplit &) const = default;
};

// a = low + p^M * high. Throws InputError for a outside [0, p^N) or M > N.
LevelSplit split_level(const Integer &a, unsigned M, const DigitContext &ctx);

// A member of the set Xi^<= (or Xi^< when strict) of m-tuples 0 <= a^[1] <= ... <= a^[m] < p^N.
class ExponentTuple
{
public:
    // Throws InputError if the entries do not lie in the requested set.
    ExponentTuple(std::vector<Integer> entries, DigitContext ctx, bool strict);

    const std::vector<Integer> &entries() const noexcept { return entries_; }
    const DigitContext &context() const noexcept { return ctx_; }
    bool strict() const noexcept { return strict_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const Integer &operator[](std::size_t i) const { return entries_[i]; }

    // a^[j] / p^N
    std::vector<Rational> normalized() const;

    // Same entries, different strictness request (validated again).
    ExponentTuple as_strict(bool strict) const { return ExponentTuple(entries_, ctx_, strict); }

    bool operator==(const ExponentTuple &other) const
    {
        return ctx_ == other.ctx_ && strict_ == other.strict_ && entries_ == other.entries_;
    }

private:
    std::vector<Integer> entries_;
    DigitContext ctx_;
    bool strict_;
};

// One exponent tuple per marked point; all share a context.
class WeightVector
{
public:
    explicit WeightVector(std::vector<ExponentTuple> tuples);

    const std::vector<ExponentTuple> &tuples() const noexcept { return tuples_; }
    std::size_t size() const noexcept { return tuples_.size(); }
    const ExponentTuple &operator[](std::size_t i) const { return tuples_[i]; }

    // The parabolic weights a_i^[j] / p^N, each in [0, 1).
    std::vector<std::vector<Rational>> normalized() const;

private:
    std::vector<ExponentTuple> tuples_;
};

struct TupleSplit {
    std::vector<Integer> low;
    std::vector<Integer> high;
    // Both component sequences non-decreasing: the hypothesis for using them as weights.
    bool monotone = false;
};

TupleSplit split_tuple_monotone(const ExponentTuple &t, unsigned M);

bool xi_contains(std::span<const Integer> entries, std::size_t m, const DigitContext &ctx, bool strict);

// C(p^N + m - 1, m) for the weak variant, C(p^N, m) for the strict one.
Integer xi_cardinality(std::size_t m, const DigitContext &ctx, bool strict);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Lexicographic enumeration of Xi_{m,N}^<= or Xi_{m,N}^<.
class XiEnumerator
{
public:
    // Throws CapExceeded when the set has more than `cap` elements.
    XiEnumerator(std::size_t m, DigitContext ctx, bool strict, std::uint64_t cap = kDefaultEnumerationCap);

    std::optional<ExponentTuple> next();

    const Integer &cardinality() const noexcept { return cardinality_; }

private:
    std::size_t m_;
    DigitContext ctx_;
    bool strict_;
    Integer cardinality_;
    std::vector<Integer> current_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<ExponentTuple> enumerate_xi(std::size_t m, const DigitContext &ctx, bool strict,
                                        std::uint64_t cap = kDefaultEnumerationCap);

// Canonical representative of the class of a strict tuple under common shifts mod p^N:
// the lexicographically least sorted shift. The relation itself fixes no representative;
// this choice is a convention. Throws InputError on non-strict input.
ExponentTuple rho_canonical(const ExponentTuple &t);

bool rho_equivalent(const ExponentTuple &a, const ExponentTuple &b);

// (b-1)/2 for odd b, (p-1-b)/2 for even b. Requires 0 <= b < p and p odd.
std::uint32_t tau(std::uint32_t b, std::uint32_t p);

} // namespace pfrob

#endif
