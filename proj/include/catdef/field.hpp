/**
 * Exact field arithmetic: the rationals and prime fields F_p.
 *
 * Every scalar in the engine is an element of one of these fields and all
 * arithmetic is exact; there is no floating point anywhere.  A Scalar is a
 * plain value (a reduced rational, or a canonical residue with denominator 1)
 * and all operations go through a Field, which knows how to reduce.
 */

#ifndef CATDEF_FIELD_HPP
#define CATDEF_FIELD_HPP

#include <stdexcept>
#include <string>
#include <boost/multiprecision/cpp_int.hpp>

namespace catdef {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/** Error type for structural misuse (dimension mismatch, bad indices, ...). */
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct Scalar {
    Rational v;

    Scalar() = default;
    explicit Scalar(Rational r) : v(std::move(r)) {}

    bool operator==(const Scalar& o) const { return v == o.v; }
    bool operator!=(const Scalar& o) const { return v != o.v; }
};

class Field {
public:
    enum class Kind { Rationals, Prime };

    static Field rationals() { return Field(Kind::Rationals, 0); }
    static Field prime(const Int& p);

    Kind kind() const { return kind_; }
    const Int& modulus() const { return p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Scalar zero() const { return Scalar(Rational(0)); }
    Scalar one() const { return Scalar(Rational(1)); }
    bool is_zero(const Scalar& a) const { return a.v == 0; }

    Scalar from_int(long n) const { return reduce(Scalar(Rational(n))); }
    Scalar from_rational(const Rational& q) const { return reduce(Scalar(q)); }

    Scalar add(const Scalar& a, const Scalar& b) const { return reduce(Scalar(a.v + b.v)); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(Scalar(a.v - b.v)); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(Scalar(a.v * b.v)); }
    Scalar neg(const Scalar& a) const { return reduce(Scalar(-a.v)); }
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    /** Parses "a", "-a", or "a/b"; residues are reduced mod p. */
    Scalar parse(const std::string& s) const;
    /** Canonical serialization: "a/b" over Q, decimal residue over F_p. */
    std::string str(const Scalar& a) const;

private:
    Field(Kind k, Int p) : kind_(k), p_(std::move(p)) {}
    Scalar reduce(Scalar a) const;

    Kind kind_;
    Int p_;
};

} // namespace catdef

#endif
