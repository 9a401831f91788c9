#include "catdef/field.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

namespace catdef {

Field Field::prime(const Int& p) {
    if (p < 2)
        throw error("field modulus must be a prime >= 2");
    bool is_prime = (p == 2) || (p % 2 != 0 && boost::multiprecision::miller_rabin_test(p, 32));
    if (!is_prime)
        throw error("field modulus " + p.str() + " is not prime");
    return Field(Kind::Prime, p);
}

Scalar Field::reduce(Scalar a) const {
    if (kind_ == Kind::Rationals)
        return a;
    // Residue representative in [0, p): clear the denominator first.
    Int num = numerator(a.v);
    Int den = denominator(a.v);
    Int d = den % p_;
    if (d < 0) d += p_;
    Int n = num % p_;
    if (n < 0) n += p_;
    if (d != 1) {
        Scalar dinv = inv(Scalar(Rational(d)));
        n = (n * numerator(dinv.v)) % p_;
        if (n < 0) n += p_;
    }
    return Scalar(Rational(n));
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a))
        throw error("division by zero");
    if (kind_ == Kind::Rationals)
        return Scalar(Rational(1) / a.v);
    // Extended Euclid on (residue, p).
    Int r0 = numerator(a.v) % p_, r1 = p_;
    if (r0 < 0) r0 += p_;
    Int s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1)
        throw error("non-invertible residue " + numerator(a.v).str());
    Int s = s0 % p_;
    if (s < 0) s += p_;
    return Scalar(Rational(s));
}

Scalar Field::parse(const std::string& s) const {
    if (s.empty())
        throw error("empty scalar literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return reduce(Scalar(Rational(Int(s))));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0)
            throw error("scalar literal with zero denominator: " + s);
        return reduce(Scalar(Rational(num, den)));
    } catch (const std::exception& e) {
        throw error("bad scalar literal '" + s + "': " + e.what());
    }
}

std::string Field::str(const Scalar& a) const {
    if (kind_ == Kind::Prime)
        return numerator(a.v).str();
    return numerator(a.v).str() + "/" + denominator(a.v).str();
}

} // namespace catdef
