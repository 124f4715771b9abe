#ifndef PFROB_CYCLOTOMIC_HPP
#define PFROB_CYCLOTOMIC_HPP

#include <cstdint>
#include <vector>

#include <pfrob/numeric.hpp>

namespace pfrob
{

// Element of Q(zeta) for zeta a primitive 2p-th root of unity (p an odd prime), stored as
// a polynomial of degree < p - 1 in zeta reduced modulo Phi_{2p}(x) = Phi_p(-x).
class CyclotomicElement
{
public:
    // Throws InputError unless p is an odd prime and coeffs has length p - 1.
    CyclotomicElement(std::uint32_t p, std::vector<Rational> coeffs);

    static CyclotomicElement zero(std::uint32_t p);
    static CyclotomicElement constant(std::uint32_t p, const Rational &value);
    // zeta^m for any integer m.
    static CyclotomicElement root_power(std::uint32_t p, long m);
    // zeta^m - zeta^{-m} = 2i sin(m pi / p).
    static CyclotomicElement sine_numerator(std::uint32_t p, long m);

    std::uint32_t p() const noexcept { return p_; }
    const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    // All coefficients of zeta^k, k >= 1, vanish.
    bool is_rational() const;
    // Throws InvariantViolation unless is_rational().
    Rational to_rational() const;

    CyclotomicElement operator+(const CyclotomicElement &other) const;
    CyclotomicElement operator-(const CyclotomicElement &other) const;
    CyclotomicElement operator*(const CyclotomicElement &other) const;
    CyclotomicElement operator*(const Rational &scalar) const;
    CyclotomicElement &operator+=(const CyclotomicElement &other);

    // Multiplication by zeta^m.
    CyclotomicElement shifted(long m) const;
    // Multiplication by zeta^m - zeta^{-m}, in O(p).
    CyclotomicElement times_sine_numerator(long m) const;

    // Inverse via the extended Euclidean algorithm over Q[x]; throws InputError on zero.
    CyclotomicElement inverse() const;
    CyclotomicElement pow(unsigned e) const;

    bool operator==(const CyclotomicElement &other) const { return p_ == other.p_ && coeffs_ == other.coeffs_; }

private:
    // Reduces a polynomial with exponents < 2p into canonical form.
    static CyclotomicElement reduce(std::uint32_t p, std::vector<Rational> full);

    std::uint32_t p_;
    std::vector<Rational> coeffs_;
};

} // namespace pfrob

#endif
