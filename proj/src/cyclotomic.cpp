#include <pfrob/cyclotomic.hpp>

#include <string>
#include <utility>

#include <pfrob/digits.hpp>
#include <pfrob/errors.hpp>

namespace pfrob
{

namespace
{

using Poly = std::vector<Rational>;

void trim(Poly &a)
{
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

Poly poly_sub(const Poly &a, const Poly &b)
{
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < a.size(); ++k) {
        out[k] += a[k];
    }
    for (std::size_t k = 0; k < b.size(); ++k) {
        out[k] -= b[k];
    }
    trim(out);
    return out;
}

Poly poly_mul(const Poly &a, const Poly &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

// Quotient and remainder of a by non-zero b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly &b)
{
    Poly q;
    trim(a);
    if (a.size() >= b.size()) {
        q.assign(a.size() - b.size() + 1, Rational(0));
    }
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const Rational factor = a.back() / b.back();
        q[shift] = factor;
        for (std::size_t k = 0; k < b.size(); ++k) {
            a[shift + k] -= factor * b[k];
        }
        a.pop_back(); // leading term cancels exactly
        trim(a);
    }
    trim(q);
    return {std::move(q), std::move(a)};
}

// Phi_{2p}(x) = sum_{k=0}^{p-1} (-1)^k x^k.
Poly modulus_polynomial(std::uint32_t p)
{
    Poly phi(p);
    for (std::uint32_t k = 0; k < p; ++k) {
        phi[k] = (k % 2 == 0) ? 1 : -1;
    }
    return phi;
}

long wrap_exponent(long m, std::uint32_t p)
{
    const long period = 2L * p;
    return ((m % period) + period) % period;
}

} // namespace

CyclotomicElement::CyclotomicElement(std::uint32_t p, std::vector<Rational> coeffs) : p_(p), coeffs_(std::move(coeffs))
{
    if (p % 2 == 0 || !is_prime(p)) {
        throw InputError("cyclotomic arithmetic needs an odd prime, got " + std::to_string(p));
    }
    if (coeffs_.size() != p - 1) {
        throw InputError("cyclotomic element needs exactly p - 1 coefficients");
    }
    for (auto &c : coeffs_) {
        c.canonicalize();
    }
}

CyclotomicElement CyclotomicElement::zero(std::uint32_t p) { return CyclotomicElement(p, std::vector<Rational>(p - 1)); }

CyclotomicElement CyclotomicElement::constant(std::uint32_t p, const Rational &value)
{
    auto out = zero(p);
    out.coeffs_[0] = value;
    return out;
}

CyclotomicElement CyclotomicElement::root_power(std::uint32_t p, long m) { return constant(p, 1).shifted(m); }

CyclotomicElement CyclotomicElement::sine_numerator(std::uint32_t p, long m)
{
    return root_power(p, m) - root_power(p, -m);
}

CyclotomicElement CyclotomicElement::reduce(std::uint32_t p, std::vector<Rational> full)
{
    // zeta^p = -1
    std::vector<Rational> folded(p);
    for (std::size_t k = 0; k < full.size(); ++k) {
        if (full[k] == 0) {
            continue;
        }
        const std::size_t e = k % (2 * p);
        if (e < p) {
            folded[e] += full[k];
        } else {
            folded[e - p] -= full[k];
        }
    }
    // zeta^{p-1} = -sum_{k<p-1} (-1)^k zeta^k
    const Rational top = folded[p - 1];
    folded.pop_back();
    if (top != 0) {
        for (std::uint32_t k = 0; k + 1 < p; ++k) {
            if (k % 2 == 0) {
                folded[k] -= top;
            } else {
                folded[k] += top;
            }
        }
    }
    return CyclotomicElement(p, std::move(folded));
}

bool CyclotomicElement::is_zero() const
{
    for (const auto &c : coeffs_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

bool CyclotomicElement::is_rational() const
{
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0) {
            return false;
        }
    }
    return true;
}

Rational CyclotomicElement::to_rational() const
{
    if (!is_rational()) {
        throw InvariantViolation("cyclotomic value is not rational");
    }
    return coeffs_[0];
}

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement &other) const
{
    CyclotomicElement out = *this;
    out += other;
    return out;
}

CyclotomicElement &CyclotomicElement::operator+=(const CyclotomicElement &other)
{
    if (p_ != other.p_) {
        throw InputError("cyclotomic operands over different p");
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += other.coeffs_[k];
    }
    return *this;
}

CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement &other) const
{
    if (p_ != other.p_) {
        throw InputError("cyclotomic operands over different p");
    }
    CyclotomicElement out = *this;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out.coeffs_[k] -= other.coeffs_[k];
    }
    return out;
}

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement &other) const
{
    if (p_ != other.p_) {
        throw InputError("cyclotomic operands over different p");
    }
    std::vector<Rational> full(2 * coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            if (other.coeffs_[j] != 0) {
                full[i + j] += coeffs_[i] * other.coeffs_[j];
            }
        }
    }
    return reduce(p_, std::move(full));
}

CyclotomicElement CyclotomicElement::operator*(const Rational &scalar) const
{
    CyclotomicElement out = *this;
    for (auto &c : out.coeffs_) {
        c *= scalar;
    }
    return out;
}

CyclotomicElement CyclotomicElement::shifted(long m) const
{
    const long shift = wrap_exponent(m, p_);
    std::vector<Rational> full(2 * p_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0) {
            full[static_cast<std::size_t>(wrap_exponent(static_cast<long>(k) + shift, p_))] += coeffs_[k];
        }
    }
    return reduce(p_, std::move(full));
}

CyclotomicElement CyclotomicElement::times_sine_numerator(long m) const { return shifted(m) - shifted(-m); }

CyclotomicElement CyclotomicElement::inverse() const
{
    Poly a = coeffs_;
    trim(a);
    if (a.empty()) {
        throw InputError("zero has no inverse");
    }
    // Invariant: s * self == r0 (mod Phi).
    Poly r0 = modulus_polynomial(p_), r1 = a;
    Poly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, rem] = poly_divmod(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) {
        throw InvariantViolation("modulus polynomial shares a factor with a non-zero element");
    }
    // s1 * self == r1 (a non-zero constant).
    const Rational scale = 1 / r1[0];
    std::vector<Rational> full(2 * p_);
    for (std::size_t k = 0; k < s1.size(); ++k) {
        full[k] = s1[k] * scale;
    }
    return reduce(p_, std::move(full));
}

CyclotomicElement CyclotomicElement::pow(unsigned e) const
{
    CyclotomicElement result = constant(p_, 1);
    CyclotomicElement base = *this;
    while (e > 0) {
        if (e & 1u) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

} // namespace pfrob
