#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>

#include "errors.hpp"

namespace aon {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class FieldKind { rational, prime };

// Runtime description of the coefficient field: the rationals, or F_p for a
// prime p that fits in a machine word. Every scalar and matrix carries one,
// and mixing fields in a single operation is an error, never a coercion.
class FieldSpec {
public:
    static FieldSpec rational() { return FieldSpec(FieldKind::rational, 0); }

    // Validates primality by trial division; moduli are desk-scale.
    static FieldSpec prime(std::int64_t p) {
        if (p < 2)
            throw ParseError("field modulus must be a prime >= 2, got " + std::to_string(p));
        for (std::int64_t f = 2; f * f <= p; ++f) {
            if (p % f == 0)
                throw ParseError("field modulus " + std::to_string(p) + " is not prime");
        }
        return FieldSpec(FieldKind::prime, p);
    }

    FieldKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == FieldKind::rational; }
    bool is_prime() const { return kind_ == FieldKind::prime; }
    std::int64_t modulus() const { return p_; }

    bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string str() const {
        return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
    }

private:
    FieldSpec(FieldKind k, std::int64_t p) : kind_(k), p_(p) {}

    FieldKind kind_;
    std::int64_t p_;
};

inline void require_same_field(const FieldSpec& a, const FieldSpec& b) {
    if (a != b)
        throw FieldMismatchError("field mismatch: " + a.str() + " vs " + b.str());
}

// One field element. Rationals are kept reduced with a positive denominator
// (cpp_rational maintains that canonical form); prime-field values are the
// canonical residues 0..p-1.
class Scalar {
public:
    static Scalar zero(const FieldSpec& spec) { return Scalar(spec, Rat(0), 0); }

    static Scalar one(const FieldSpec& spec) {
        return spec.is_rational() ? Scalar(spec, Rat(1), 0) : Scalar(spec, Rat(0), 1);
    }

    static Scalar of_int(const FieldSpec& spec, long long v) {
        if (spec.is_rational())
            return Scalar(spec, Rat(v), 0);
        return Scalar(spec, Rat(0), mod_reduce(Int(v), spec.modulus()));
    }

    // num/den in the field; den must be invertible there.
    static Scalar of_fraction(const FieldSpec& spec, long long num, long long den) {
        return of_int(spec, num) / of_int(spec, den);
    }

    static Scalar of_rat(const FieldSpec& spec, Rat v) {
        if (spec.is_rational())
            return Scalar(spec, std::move(v), 0);
        Scalar n(spec, Rat(0), mod_reduce(numerator(v), spec.modulus()));
        Scalar d(spec, Rat(0), mod_reduce(denominator(v), spec.modulus()));
        return n / d;
    }

    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const { return spec_.is_rational() ? q_.is_zero() : r_ == 0; }
    bool is_one() const { return *this == one(spec_); }

    const Rat& rat() const {
        if (!spec_.is_rational())
            throw FieldMismatchError("rat() called on a prime-field scalar");
        return q_;
    }

    std::int64_t residue() const {
        if (!spec_.is_prime())
            throw FieldMismatchError("residue() called on a rational scalar");
        return r_;
    }

    Scalar operator+(const Scalar& o) const {
        require_same_field(spec_, o.spec_);
        if (spec_.is_rational())
            return Scalar(spec_, q_ + o.q_, 0);
        std::int64_t s = r_ + o.r_;
        if (s >= spec_.modulus())
            s -= spec_.modulus();
        return Scalar(spec_, Rat(0), s);
    }

    Scalar operator-(const Scalar& o) const { return *this + (-o); }

    Scalar operator-() const {
        if (spec_.is_rational())
            return Scalar(spec_, -q_, 0);
        return Scalar(spec_, Rat(0), r_ == 0 ? 0 : spec_.modulus() - r_);
    }

    Scalar operator*(const Scalar& o) const {
        require_same_field(spec_, o.spec_);
        if (spec_.is_rational())
            return Scalar(spec_, q_ * o.q_, 0);
        auto prod = static_cast<__int128>(r_) * static_cast<__int128>(o.r_);
        return Scalar(spec_, Rat(0), static_cast<std::int64_t>(prod % spec_.modulus()));
    }

    Scalar inverse() const {
        if (is_zero())
            throw DivisionByZeroError("inverse of zero in " + spec_.str());
        if (spec_.is_rational())
            return Scalar(spec_, Rat(1) / q_, 0);
        return Scalar(spec_, Rat(0), mod_inverse(r_, spec_.modulus()));
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    bool operator==(const Scalar& o) const {
        require_same_field(spec_, o.spec_);
        return spec_.is_rational() ? q_ == o.q_ : r_ == o.r_;
    }

    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical deterministic order: numeric for rationals, residue value
    // for prime fields. Used only to break ties reproducibly.
    static bool less(const Scalar& a, const Scalar& b) {
        require_same_field(a.spec_, b.spec_);
        return a.spec_.is_rational() ? a.q_ < b.q_ : a.r_ < b.r_;
    }

    // Canonical text: "a" or "a/b" with b > 0 in lowest terms, or the
    // decimal residue.
    std::string str() const {
        if (spec_.is_prime())
            return std::to_string(r_);
        std::string s = numerator(q_).str();
        if (denominator(q_) != 1)
            s += "/" + denominator(q_).str();
        return s;
    }

private:
    Scalar(FieldSpec spec, Rat q, std::int64_t r) : spec_(spec), q_(std::move(q)), r_(r) {}

    static std::int64_t mod_reduce(const Int& v, std::int64_t p) {
        Int r = v % p;
        if (r < 0)
            r += p;
        return static_cast<std::int64_t>(r);
    }

    static std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
        // extended Euclid on (a, p); a is in 1..p-1 and p is prime
        std::int64_t old_r = a, r = p;
        std::int64_t old_s = 1, s = 0;
        while (r != 0) {
            std::int64_t q = old_r / r;
            std::int64_t t = old_r - q * r;
            old_r = r;
            r = t;
            t = old_s - q * s;
            old_s = s;
            s = t;
        }
        std::int64_t inv = old_s % p;
        if (inv < 0)
            inv += p;
        return inv;
    }

    FieldSpec spec_;
    Rat q_;
    std::int64_t r_;
};

// Strict scalar grammar. Rationals: -?digits or -?digits/digits with a
// nonzero denominator. Prime fields: -?digits, reduced mod p on load.
inline Scalar parse_scalar(const FieldSpec& spec, const std::string& text) {
    auto fail = [&]() -> Scalar {
        throw ParseError("malformed scalar \"" + text + "\" for " + spec.str());
    };
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-')
        ++pos;
    std::size_t num_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
        ++pos;
    if (pos == num_begin)
        return fail();
    Int num(text.substr(0, pos));
    if (pos == text.size())
        return Scalar::of_rat(spec, Rat(num));
    if (spec.is_prime() || text[pos] != '/')
        return fail();
    ++pos;
    std::size_t den_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
        ++pos;
    if (pos == den_begin || pos != text.size())
        return fail();
    Int den(text.substr(den_begin, pos - den_begin));
    if (den == 0)
        throw ParseError("zero denominator in scalar \"" + text + "\"");
    return Scalar::of_rat(spec, Rat(num, den));
}

} // namespace aon
