#include "freepairs/scalar.hpp"

#include <ostream>

namespace freepairs {

BaseField BaseField::prime(const Int& p) {
    if (p < 3 || p % 2 == 0)
        fail(errc::invalid_spec, "BaseField::prime: modulus must be an odd prime, got " + p.str());
    // Primality is asserted by the caller; a cheap trial-division screen
    // catches the obvious misuses without pretending to be a full test.
    for (Int d = 3; d * d <= p && d < 1000; d += 2)
        if (p % d == 0)
            fail(errc::invalid_spec, "BaseField::prime: " + p.str() + " is divisible by " + d.str());
    return BaseField(Kind::prime, p);
}

std::string BaseField::str() const {
    return is_rationals() ? "Q" : "GF(" + p_.str() + ")";
}

Scalar::Scalar(BaseField f, const Rat& value) : field_(std::move(f)), v_(value) { reduce(); }

void Scalar::reduce() {
    if (field_.is_prime()) {
        const Int& p = field_.characteristic();
        Int num = boost::multiprecision::numerator(v_);
        Int den = boost::multiprecision::denominator(v_);
        Int d = den % p;
        if (d < 0) d += p;
        if (d == 0)
            fail(errc::division_by_zero, "Scalar: denominator vanishes mod " + p.str());
        Int n = num % p;
        if (n < 0) n += p;
        if (d != 1) {
            // invert d mod p by extended Euclid
            Int r0 = p, r1 = d, s0 = 0, s1 = 1;
            while (r1 != 0) {
                Int q = r0 / r1;
                Int r2 = r0 - q * r1; r0 = r1; r1 = r2;
                Int s2 = s0 - q * s1; s0 = s1; s1 = s2;
            }
            if (r0 != 1)
                fail(errc::division_by_zero, "Scalar: non-invertible denominator mod " + p.str());
            Int dinv = s0 % p;
            if (dinv < 0) dinv += p;
            n = (n * dinv) % p;
        }
        v_ = Rat(n);
    }
}

void Scalar::check_same(const Scalar& o) const {
    if (field_ != o.field_)
        fail(errc::descriptor_mismatch,
             "Scalar: mixed fields " + field_.str() + " and " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const { check_same(o); return Scalar(field_, v_ + o.v_); }
Scalar Scalar::operator-(const Scalar& o) const { check_same(o); return Scalar(field_, v_ - o.v_); }
Scalar Scalar::operator*(const Scalar& o) const { check_same(o); return Scalar(field_, v_ * o.v_); }

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    if (o.is_zero()) fail(errc::division_by_zero, "Scalar: division by zero");
    return Scalar(field_, v_ / o.v_);
}

Scalar Scalar::operator-() const { return Scalar(field_, -v_); }

Scalar Scalar::inv() const {
    if (is_zero()) fail(errc::division_by_zero, "Scalar: inverse of zero");
    return Scalar(field_, Rat(1) / v_);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar acc = Scalar::one(field_), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string Scalar::str() const {
    Int num = boost::multiprecision::numerator(v_);
    Int den = boost::multiprecision::denominator(v_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace freepairs
