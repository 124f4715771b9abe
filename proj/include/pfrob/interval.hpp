#ifndef PFROB_INTERVAL_HPP
#define PFROB_INTERVAL_HPP

#include <string>

#include <mpfr.h>

#include <pfrob/numeric.hpp>

namespace pfrob
{

// Owning wrapper around an mpfr_t.
class BigFloat
{
public:
    explicit BigFloat(mpfr_prec_t precision);
    BigFloat(const BigFloat &other);
    BigFloat(BigFloat &&other) noexcept;
    BigFloat &operator=(const BigFloat &other);
    BigFloat &operator=(BigFloat &&other) noexcept;
    ~BigFloat();

    mpfr_ptr get() noexcept { return value_; }
    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

    // Decimal scientific notation rounded in the given direction.
    std::string to_string(int digits, mpfr_rnd_t rounding) const;
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

private:
    mpfr_t value_;
};

// Closed interval [lo, hi] with outward rounding on every operation.
class Interval
{
public:
    explicit Interval(mpfr_prec_t precision);

    static Interval exact(const Rational &q, mpfr_prec_t precision);
    // Enclosure of pi.
    static Interval pi(mpfr_prec_t precision);
    // Enclosure of sin(t pi) for rational t.
    static Interval sin_pi(const Rational &t, mpfr_prec_t precision);

    const BigFloat &lo() const noexcept { return lo_; }
    const BigFloat &hi() const noexcept { return hi_; }
    mpfr_prec_t precision() const noexcept { return lo_.precision(); }

    Interval operator+(const Interval &other) const;
    Interval operator-() const;
    Interval operator-(const Interval &other) const { return *this + (-other); }
    Interval operator*(const Interval &other) const;
    // Throws InputError when the divisor contains zero.
    Interval operator/(const Interval &other) const;
    Interval pow(unsigned e) const;

    // Upper bound on hi - lo.
    BigFloat width() const;
    bool contains(const Rational &q) const;
    bool contains_zero() const;

private:
    BigFloat lo_;
    BigFloat hi_;
};

} // namespace pfrob

#endif
