#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace fkd {

// Rational number in lowest terms. Values that fit in int64 are kept inline;
// everything else lives in a shared immutable mpq_class.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : n_(n) {}  // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);
    static Rational from_string(const std::string& num, const std::string& den);

    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    bool is_integer() const;
    int sign() const;
    bool is_small() const { return !big_; }

    std::string num_str() const;
    std::string den_str() const;
    std::string str() const;
    mpq_class to_mpq() const;
    double to_double() const;
    // size of numerator plus denominator in bits; used to pick pivots
    std::size_t height() const;

    Rational operator-() const;
    Rational inv() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::size_t hash() const;

    // small-path accessors (valid only when is_small())
    std::int64_t num() const { return n_; }
    std::int64_t den() const { return d_; }

private:
    static Rational make(const mpq_class& q);
    static Rational make128(__int128 n, __int128 d);

    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace fkd
