#include <pfrob/interval.hpp>

#include <algorithm>
#include <array>

#include <pfrob/errors.hpp>

namespace pfrob
{

BigFloat::BigFloat(mpfr_prec_t precision) { mpfr_init2(value_, precision); }

BigFloat::BigFloat(const BigFloat &other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN); // same precision: exact
}

BigFloat::BigFloat(BigFloat &&other) noexcept
{
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigFloat &BigFloat::operator=(const BigFloat &other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat &BigFloat::operator=(BigFloat &&other) noexcept
{
    if (this != &other) {
        mpfr_swap(value_, other.value_);
    }
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits, mpfr_rnd_t rounding) const
{
    char *buffer = nullptr;
    const int written = mpfr_asprintf(&buffer, "%.*R*e", digits, rounding, value_);
    if (written < 0 || buffer == nullptr) {
        return "nan";
    }
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

Interval::Interval(mpfr_prec_t precision) : lo_(precision), hi_(precision)
{
    mpfr_set_zero(lo_.get(), 1);
    mpfr_set_zero(hi_.get(), 1);
}

Interval Interval::exact(const Rational &q, mpfr_prec_t precision)
{
    Interval out(precision);
    mpfr_set_q(out.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
    return out;
}

Interval Interval::pi(mpfr_prec_t precision)
{
    Interval out(precision);
    mpfr_const_pi(out.lo_.get(), MPFR_RNDD);
    mpfr_const_pi(out.hi_.get(), MPFR_RNDU);
    return out;
}

Interval Interval::sin_pi(const Rational &angle, mpfr_prec_t precision)
{
    Rational t = angle;
    t.canonicalize();
    // Reduce t to [0, 1/2] exactly, tracking the sign.
    Integer whole;
    mpz_fdiv_q(whole.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    Rational frac = t - Rational(whole);
    bool negative = mpz_odd_p(whole.get_mpz_t()) != 0; // sin((x + 1) pi) = -sin(x pi)
    if (frac > Rational(1, 2)) {
        frac = 1 - frac;
    }
    Interval out(precision);
    if (frac == 0) {
        return out;
    }
    if (frac == Rational(1, 2)) {
        mpfr_set_si(out.lo_.get(), negative ? -1 : 1, MPFR_RNDN);
        mpfr_set_si(out.hi_.get(), negative ? -1 : 1, MPFR_RNDN);
        return out;
    }
    // frac * pi lies in (0, pi/2), where sin is increasing.
    const Interval pi_enclosure = pi(precision);
    BigFloat arg_lo(precision), arg_hi(precision), half_pi_lo(precision);
    mpfr_mul_q(arg_lo.get(), pi_enclosure.lo_.get(), frac.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(arg_hi.get(), pi_enclosure.hi_.get(), frac.get_mpq_t(), MPFR_RNDU);
    mpfr_div_ui(half_pi_lo.get(), pi_enclosure.lo_.get(), 2, MPFR_RNDD);
    mpfr_sin(out.lo_.get(), arg_lo.get(), MPFR_RNDD);
    if (mpfr_cmp(arg_hi.get(), half_pi_lo.get()) <= 0) {
        mpfr_sin(out.hi_.get(), arg_hi.get(), MPFR_RNDU);
    } else {
        mpfr_set_ui(out.hi_.get(), 1, MPFR_RNDN);
    }
    return negative ? -out : out;
}

Interval Interval::operator+(const Interval &other) const
{
    Interval out(std::max(precision(), other.precision()));
    mpfr_add(out.lo_.get(), lo_.get(), other.lo_.get(), MPFR_RNDD);
    mpfr_add(out.hi_.get(), hi_.get(), other.hi_.get(), MPFR_RNDU);
    return out;
}

Interval Interval::operator-() const
{
    Interval out(precision());
    mpfr_neg(out.lo_.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(out.hi_.get(), lo_.get(), MPFR_RNDU);
    return out;
}

Interval Interval::operator*(const Interval &other) const
{
    const mpfr_prec_t prec = std::max(precision(), other.precision());
    const std::array<std::pair<mpfr_srcptr, mpfr_srcptr>, 4> corners{{
        {lo_.get(), other.lo_.get()},
        {lo_.get(), other.hi_.get()},
        {hi_.get(), other.lo_.get()},
        {hi_.get(), other.hi_.get()},
    }};
    Interval out(prec);
    BigFloat down(prec), up(prec);
    bool first = true;
    for (const auto &[a, b] : corners) {
        mpfr_mul(down.get(), a, b, MPFR_RNDD);
        mpfr_mul(up.get(), a, b, MPFR_RNDU);
        if (first || mpfr_less_p(down.get(), out.lo_.get())) {
            mpfr_set(out.lo_.get(), down.get(), MPFR_RNDD);
        }
        if (first || mpfr_greater_p(up.get(), out.hi_.get())) {
            mpfr_set(out.hi_.get(), up.get(), MPFR_RNDU);
        }
        first = false;
    }
    return out;
}

Interval Interval::operator/(const Interval &other) const
{
    if (other.contains_zero()) {
        throw InputError("interval division by an enclosure of zero");
    }
    Interval reciprocal(other.precision());
    mpfr_ui_div(reciprocal.lo_.get(), 1, other.hi_.get(), MPFR_RNDD);
    mpfr_ui_div(reciprocal.hi_.get(), 1, other.lo_.get(), MPFR_RNDU);
    return *this * reciprocal;
}

Interval Interval::pow(unsigned e) const
{
    Interval out = exact(Rational(1), precision());
    for (unsigned k = 0; k < e; ++k) {
        out = out * *this;
    }
    return out;
}

BigFloat Interval::width() const
{
    BigFloat out(precision());
    mpfr_sub(out.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return out;
}

bool Interval::contains(const Rational &q) const
{
    return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

} // namespace pfrob
