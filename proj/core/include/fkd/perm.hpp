#pragma once

#include <array>
#include <string>
#include <string_view>

namespace fkd {

// Element of S3 stored as the image triple (g(1), g(2), g(3)).
// Composition is right to left: (g*h)(x) = g(h(x)).
class Perm {
public:
    constexpr Perm() : img_{1, 2, 3} {}
    constexpr Perm(int a, int b, int c) : img_{a, b, c} {}

    constexpr int operator()(int x) const { return img_[x - 1]; }
    constexpr Perm operator*(const Perm& h) const { return {(*this)(h(1)), (*this)(h(2)), (*this)(h(3))}; }
    constexpr Perm inv() const {
        Perm r;
        for (int x = 1; x <= 3; ++x) r.img_[img_[x - 1] - 1] = x;
        return r;
    }
    constexpr int sgn() const {
        int inv = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (img_[i] > img_[j]) ++inv;
        return inv % 2 ? -1 : 1;
    }
    // position in the fixed enumeration e, (12), (13), (23), (123), (132)
    constexpr int index() const {
        for (int i = 0; i < 6; ++i)
            if (all()[i] == *this) return i;
        return -1;
    }
    constexpr bool is_transposition() const { return index() >= 1 && index() <= 3; }
    constexpr bool is_cycle() const { return index() >= 4; }

    static constexpr Perm e() { return {1, 2, 3}; }
    static constexpr Perm t12() { return {2, 1, 3}; }
    static constexpr Perm t13() { return {3, 2, 1}; }
    static constexpr Perm t23() { return {1, 3, 2}; }
    static constexpr Perm c123() { return {2, 3, 1}; }
    static constexpr Perm c132() { return {3, 1, 2}; }
    static constexpr std::array<Perm, 6> all() { return {e(), t12(), t13(), t23(), c123(), c132()}; }
    static constexpr Perm from_index(int i) { return all()[i]; }

    // "e", "12", "13", "23", "123", "132"
    std::string_view name() const;
    static Perm parse(std::string_view s);

    constexpr bool operator==(const Perm& o) const = default;

private:
    std::array<int, 3> img_;
};

static_assert(Perm::t13() * Perm::t12() == Perm::c123());
static_assert(Perm::t12() * Perm::t13() == Perm::c132());
static_assert(Perm::t12() * Perm::t13() * Perm::t12() == Perm::t23());

}  // namespace fkd
