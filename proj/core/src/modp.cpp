#include "fkd/modp.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace fkd::modp {

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("modular inverse of zero");
    return pow(a, p - 2);
}

namespace {

std::optional<std::uint32_t> reduce(const Rational& q, const Field& f) {
    std::uint32_t n, d;
    if (q.is_small()) {
        long long nn = q.num() % static_cast<long long>(f.p);
        if (nn < 0) nn += f.p;
        n = std::uint32_t(nn);
        d = std::uint32_t(q.den() % static_cast<long long>(f.p));
    } else {
        mpq_class m = q.to_mpq();
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), m.get_num_mpz_t(), f.p);
        n = std::uint32_t(r.get_ui());
        mpz_fdiv_r_ui(r.get_mpz_t(), m.get_den_mpz_t(), f.p);
        d = std::uint32_t(r.get_ui());
    }
    if (d == 0) return std::nullopt;
    return f.mul(n, f.inv(d));
}

}  // namespace

std::optional<std::uint32_t> Field::embed(const Scalar& s, std::uint32_t root) const {
    auto a = reduce(s.a(), *this);
    if (!a) return std::nullopt;
    if (s.b().is_zero()) return a;
    auto b = reduce(s.b(), *this);
    if (!b) return std::nullopt;
    return add(*a, mul(*b, root));
}

const Field& field(int k) {
    static std::mutex mu;
    static std::vector<Field> fields;
    std::lock_guard<std::mutex> lock(mu);
    while (int(fields.size()) <= k) {
        mpz_class c = fields.empty() ? mpz_class((1u << 31) - 1) : mpz_class(fields.back().p - 1);
        while (true) {
            // previous prime = 1 mod 3
            do {
                c -= 1;
            } while (c % 3 != 1 || mpz_probab_prime_p(c.get_mpz_t(), 30) == 0);
            break;
        }
        Field f{std::uint32_t(c.get_ui()), 0};
        for (std::uint32_t g = 2;; ++g) {
            std::uint32_t w = f.pow(g, (f.p - 1) / 3);
            if (w != 1) {
                f.w = w;
                break;
            }
        }
        fields.push_back(f);
    }
    return fields[k];
}

std::pair<std::uint32_t, std::uint32_t> unembed(const Field& f, std::uint32_t u1, std::uint32_t u2) {
    std::uint32_t w2 = f.mul(f.w, f.w);
    std::uint32_t b = f.mul(f.sub(u1, u2), f.inv(f.sub(f.w, w2)));
    std::uint32_t a = f.sub(u1, f.mul(b, f.w));
    return {a, b};
}

void crt_accumulate(mpz_class& value, mpz_class& modulus, std::uint32_t r, std::uint32_t p) {
    if (modulus == 0 || modulus == 1) {
        value = r;
        modulus = p;
        return;
    }
    // value + modulus * k = r mod p
    mpz_class vp = value % p, mp = modulus % p;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), mp.get_mpz_t(), mpz_class(p).get_mpz_t());
    mpz_class k = ((mpz_class(r) - vp) * inv) % p;
    if (k < 0) k += p;
    value += modulus * k;
    modulus *= p;
}

std::optional<Rational> rational_reconstruct(const mpz_class& u, const mpz_class& m) {
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m, r1 = u % m;
    if (r1 < 0) r1 += m;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    mpq_class q(r1, t1);
    q.canonicalize();
    return Rational(q);
}

std::optional<Rational> rational_reconstruct_small(std::uint64_t u, std::uint64_t m) {
    // bound = floor(sqrt(m / 2))
    std::int64_t bound = std::int64_t(std::sqrt(double(m / 2)));
    while ((bound + 1) * (bound + 1) <= std::int64_t(m / 2)) ++bound;
    while (bound * bound > std::int64_t(m / 2)) --bound;
    std::int64_t r0 = std::int64_t(m), r1 = std::int64_t(u % m), t0 = 0, t1 = 1;
    while (r1 > bound) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || std::llabs(t1) > bound) return std::nullopt;
    if (std::gcd(r1, t1) != 1) return std::nullopt;
    if (t1 < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    return Rational(r1) / Rational(t1);
}

}  // namespace fkd::modp
