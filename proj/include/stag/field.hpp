// Exact field arithmetic: arbitrary-precision rationals and prime fields F_p.
//
// Every scalar carries its field tag; mixing scalars from different fields is
// a programmer error and throws. No floating point anywhere.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stag {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class FieldKind { rationals, prime };

class Scalar;

/// Field descriptor: the rationals, or F_p for a prime p < 2^31.
struct Field {
    FieldKind kind = FieldKind::rationals;
    std::int64_t p = 0;  // modulus, used iff kind == prime

    static Field Q() { return Field{FieldKind::rationals, 0}; }
    static Field Fp(std::int64_t p);

    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t n) const;

    std::string to_string() const {
        return kind == FieldKind::rationals ? "Q" : "Fp:" + std::to_string(p);
    }
};

inline Field Field::Fp(std::int64_t p) {
    if (p < 2 || p > (std::int64_t(1) << 31))
        throw std::invalid_argument("Field::Fp: modulus out of range");
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("Field::Fp: modulus not prime");
    return Field{FieldKind::prime, p};
}

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (cpp_rational maintains that); F_p residues live in [0, p).
class Scalar {
public:
    Scalar() = default;  // zero of Q
    Scalar(Field f, std::int64_t n) : field_(f) {
        if (f.kind == FieldKind::rationals) {
            q_ = n;
        } else {
            r_ = n % f.p;
            if (r_ < 0) r_ += f.p;
        }
    }
    Scalar(Field f, BigRational q) : field_(f) {
        if (f.kind != FieldKind::rationals)
            throw std::invalid_argument("Scalar: rational value in prime field");
        q_ = std::move(q);
    }

    const Field& field() const { return field_; }
    bool is_zero() const {
        return field_.kind == FieldKind::rationals ? q_.is_zero() : r_ == 0;
    }
    bool is_one() const {
        return field_.kind == FieldKind::rationals ? q_ == 1 : r_ == 1;
    }

    const BigRational& rational() const { return q_; }
    std::int64_t residue() const { return r_; }

    Scalar operator-() const {
        Scalar s(*this);
        if (field_.kind == FieldKind::rationals) s.q_ = -s.q_;
        else if (s.r_ != 0) s.r_ = field_.p - s.r_;
        return s;
    }

    Scalar& operator+=(const Scalar& o) {
        check(o);
        if (field_.kind == FieldKind::rationals) q_ += o.q_;
        else r_ = (r_ + o.r_) % field_.p;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) { return *this += -o; }
    Scalar& operator*=(const Scalar& o) {
        check(o);
        if (field_.kind == FieldKind::rationals) q_ *= o.q_;
        else r_ = (r_ * o.r_) % field_.p;  // p < 2^31, no overflow in int64
        return *this;
    }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar::inverse: zero");
        if (field_.kind == FieldKind::rationals) {
            Scalar s(field_, 0);
            s.q_ = 1 / q_;
            return s;
        }
        return Scalar(field_, egcd_inverse(r_, field_.p));
    }

    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    bool operator==(const Scalar& o) const {
        if (field_ != o.field_) return false;
        return field_.kind == FieldKind::rationals ? q_ == o.q_ : r_ == o.r_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const {
        if (field_.kind == FieldKind::prime) return std::to_string(r_);
        return q_.str();
    }

private:
    static std::int64_t egcd_inverse(std::int64_t a, std::int64_t m) {
        std::int64_t old_r = a, r = m, old_s = 1, s = 0;
        while (r != 0) {
            std::int64_t q = old_r / r;
            std::int64_t t = r; r = old_r - q * r; old_r = t;
            t = s; s = old_s - q * s; old_s = t;
        }
        std::int64_t inv = old_s % m;
        if (inv < 0) inv += m;
        return inv;
    }

    void check(const Scalar& o) const {
        if (field_ != o.field_)
            throw std::invalid_argument("Scalar: field mismatch");
    }

    Field field_ = Field::Q();
    BigRational q_;
    std::int64_t r_ = 0;
};

inline Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
inline Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
inline Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
inline Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

inline Scalar Field::zero() const { return Scalar(*this, 0); }
inline Scalar Field::one() const { return Scalar(*this, 1); }
inline Scalar Field::from_int(std::int64_t n) const { return Scalar(*this, n); }

}  // namespace stag
