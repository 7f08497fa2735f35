#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "fkd/scalar.hpp"

namespace fkd::modp {

// Prime p = 1 mod 3 below 2^31 with a primitive cube root of unity w.
struct Field {
    std::uint32_t p;
    std::uint32_t w;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { std::uint32_t s = a + b; return s >= p ? s - p : s; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return std::uint32_t(std::uint64_t(a) * b % p); }
    std::uint32_t neg(std::uint32_t a) const { return a ? p - a : 0; }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;
    // image of a + b*zeta under zeta -> root; nullopt if a denominator vanishes
    std::optional<std::uint32_t> embed(const Scalar& s, std::uint32_t root) const;
};

// k-th prime of the fixed descending sequence used for modular solves
const Field& field(int k);

// recover (a, b) mod p from the images at w and w^2
std::pair<std::uint32_t, std::uint32_t> unembed(const Field& f, std::uint32_t at_w, std::uint32_t at_w2);

// Chinese remaindering of residues into a running (value, modulus)
void crt_accumulate(mpz_class& value, mpz_class& modulus, std::uint32_t r, std::uint32_t p);
// smallest-height fraction congruent to u mod m, if one with |num|, den <= sqrt(m/2) exists
std::optional<Rational> rational_reconstruct(const mpz_class& u, const mpz_class& m);
// same for a single word-sized modulus
std::optional<Rational> rational_reconstruct_small(std::uint64_t u, std::uint64_t m);

}  // namespace fkd::modp
