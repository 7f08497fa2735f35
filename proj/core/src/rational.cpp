#include "fkd/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace fkd {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    if (a == 0) return b;
    if (b == 0) return a;
    int shift = __builtin_ctzll(a | b);
    a >>= __builtin_ctzll(a);
    do {
        b >>= __builtin_ctzll(b);
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b);
    return a << shift;
}

std::uint64_t uabs(std::int64_t x) {
    return x < 0 ? std::uint64_t(0) - std::uint64_t(x) : std::uint64_t(x);
}

bool fits64(i128 x) {
    return x >= i128(std::numeric_limits<std::int64_t>::min()) + 1 &&
           x <= i128(std::numeric_limits<std::int64_t>::max());
}

void set_i128(mpz_class& z, i128 x) {
    bool neg = x < 0;
    u128 u = neg ? u128(0) - u128(x) : u128(x);
    auto hi = std::uint64_t(u >> 64);
    auto lo = std::uint64_t(u);
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &hi);
    z <<= 64;
    mpz_class l;
    mpz_import(l.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &lo);
    z += l;
    if (neg) z = -z;
}

bool mpz_to_i64(const mpz_class& z, std::int64_t& out) {
    if (!z.fits_slong_p()) return false;
    out = z.get_si();
    return out != std::numeric_limits<std::int64_t>::min();
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    *this = make128(n, d);
}

Rational::Rational(const mpq_class& q) { *this = make(q); }

Rational Rational::from_string(const std::string& num, const std::string& den) {
    mpq_class q{mpz_class(num), mpz_class(den)};
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
    q.canonicalize();
    return make(q);
}

Rational Rational::make(const mpq_class& q) {
    Rational r;
    std::int64_t n, d;
    if (mpz_to_i64(q.get_num(), n) && mpz_to_i64(q.get_den(), d)) {
        r.n_ = n;
        r.d_ = d;
    } else {
        r.big_ = std::make_shared<const mpq_class>(q);
    }
    return r;
}

Rational Rational::make128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational();
    if (d == 1 && fits64(n)) {
        Rational r;
        r.n_ = std::int64_t(n);
        return r;
    }
    if (fits64(n) && fits64(d)) {
        std::uint64_t g = gcd64(n < 0 ? std::uint64_t(0) - std::uint64_t(std::int64_t(n)) : std::uint64_t(n), std::uint64_t(d));
        Rational r;
        r.n_ = std::int64_t(n) / std::int64_t(g);
        r.d_ = std::int64_t(d) / std::int64_t(g);
        return r;
    }
    u128 g = gcd128(n < 0 ? u128(0) - u128(n) : u128(n), u128(d));
    n /= i128(g);
    d /= i128(g);
    if (fits64(n) && fits64(d)) {
        Rational r;
        r.n_ = std::int64_t(n);
        r.d_ = std::int64_t(d);
        return r;
    }
    mpq_class q;
    set_i128(q.get_num(), n);
    set_i128(q.get_den(), d);
    return make(q);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    q.get_num() = mpz_class(static_cast<long>(n_));
    q.get_den() = mpz_class(static_cast<long>(d_));
    return q;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
}

std::string Rational::num_str() const { return big_ ? big_->get_num().get_str() : std::to_string(n_); }
std::string Rational::den_str() const { return big_ ? big_->get_den().get_str() : std::to_string(d_); }

std::string Rational::str() const {
    if (is_integer()) return num_str();
    return num_str() + "/" + den_str();
}

double Rational::to_double() const {
    return big_ ? big_->get_d() : double(n_) / double(d_);
}

std::size_t Rational::height() const {
    if (big_) return mpz_sizeinbase(big_->get_num_mpz_t(), 2) + mpz_sizeinbase(big_->get_den_mpz_t(), 2);
    return std::size_t(64 - __builtin_clzll(uabs(n_) | 1)) + std::size_t(64 - __builtin_clzll(std::uint64_t(d_)));
}

Rational Rational::operator-() const {
    if (big_) return make(-*big_);
    Rational r;
    r.n_ = -n_;
    r.d_ = d_;
    return r;
}

Rational Rational::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (big_) return make(1 / *big_);
    return make128(d_, n_);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.n_ == 0) return b;
        if (b.n_ == 0) return a;
        if (a.d_ == b.d_) return Rational::make128(i128(a.n_) + b.n_, a.d_);
        return Rational::make128(i128(a.n_) * b.d_ + i128(b.n_) * a.d_, i128(a.d_) * b.d_);
    }
    return Rational::make(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.n_ == 0 || b.n_ == 0) return Rational();
        std::uint64_t g1 = gcd64(uabs(a.n_), std::uint64_t(b.d_));
        std::uint64_t g2 = gcd64(uabs(b.n_), std::uint64_t(a.d_));
        i128 n = i128(a.n_ / std::int64_t(g1)) * (b.n_ / std::int64_t(g2));
        i128 d = i128(a.d_ / std::int64_t(g2)) * (b.d_ / std::int64_t(g1));
        if (fits64(n) && fits64(d)) {
            Rational r;
            r.n_ = std::int64_t(n);
            r.d_ = std::int64_t(d);
            return r;
        }
        return Rational::make128(n, d);
    }
    return Rational::make(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical form: a big value never equals a small one
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 l = i128(a.n_) * b.d_, r = i128(b.n_) * a.d_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::size_t Rational::hash() const {
    if (big_) return std::hash<std::string>{}(big_->get_str());
    return std::hash<std::int64_t>{}(n_) * 1000003u ^ std::hash<std::int64_t>{}(d_);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace fkd
