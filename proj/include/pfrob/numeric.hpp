#ifndef PFROB_NUMERIC_HPP
#define PFROB_NUMERIC_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace pfrob
{

using Integer = mpz_class;
using Rational = mpq_class;

// Element of F_p stored as its least non-negative representative.
using Residue = std::uint32_t;

// Ranks, multiplicities and flag types.
using Rank = std::uint64_t;

inline Rational make_rational(const Integer &num, const Integer &den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational &q) { return q.get_den() == 1; }

// Least non-negative residue of a mod m (m > 0).
inline Integer mod_floor(const Integer &a, const Integer &m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Residue reduce_mod(const Integer &a, std::uint32_t p)
{
    return static_cast<Residue>(mpz_fdiv_ui(a.get_mpz_t(), p));
}

// Reduce a p-integral rational into F_p; throws InvariantViolation if p divides the denominator.
Residue reduce_rational_mod(const Rational &q, std::uint32_t p);

Integer power(const Integer &base, unsigned long exponent);
Integer factorial(unsigned long n);

inline std::string to_string(const Integer &z) { return z.get_str(); }
inline std::string to_string(const Rational &q) { return q.get_str(); }

} // namespace pfrob

#endif
