#pragma once

#include <iosfwd>
#include <string>

#include "fkd/rational.hpp"

namespace fkd {

// a + b*zeta with zeta^2 = -1 - zeta
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t a) : a_(a) {}  // NOLINT: implicit by design
    Scalar(Rational a) : a_(std::move(a)) {}  // NOLINT
    Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Scalar zeta() { return {Rational(0), Rational(1)}; }
    static Scalar zeta2() { return {Rational(-1), Rational(-1)}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    Scalar operator-() const { return {-a_, -b_}; }
    Scalar conj() const { return {a_ - b_, -b_}; }
    Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
    Scalar inv() const;

    friend Scalar operator+(const Scalar& x, const Scalar& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend Scalar operator-(const Scalar& x, const Scalar& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inv(); }
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

    friend bool operator==(const Scalar& x, const Scalar& y) = default;

    std::size_t height() const { return a_.height() + b_.height(); }
    std::size_t hash() const { return a_.hash() * 31u + b_.hash(); }
    std::string str() const;

private:
    Rational a_, b_;
};

inline Scalar scalar_mul(const Scalar& x, const Scalar& y) { return x * y; }
inline Scalar scalar_inv(const Scalar& x) { return x.inv(); }
inline Scalar scalar_conj(const Scalar& x) { return x.conj(); }

// zeta^k for any integer k
Scalar zeta_pow(int k);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace fkd
