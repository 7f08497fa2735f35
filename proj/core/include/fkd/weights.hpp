#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fkd/matrix.hpp"
#include "fkd/perm.hpp"

namespace fkd {

enum class WeightLabel { eps, e_minus, e_rho, s_plus, s_minus, t0, t1, t2 };

inline constexpr std::array<WeightLabel, 8> kAllLabels = {
    WeightLabel::eps, WeightLabel::e_minus, WeightLabel::e_rho, WeightLabel::s_plus,
    WeightLabel::s_minus, WeightLabel::t0, WeightLabel::t1, WeightLabel::t2};

inline constexpr int idx(WeightLabel l) { return static_cast<int>(l); }
int label_dim(WeightLabel l);
// the distinguished subset {e-, s+, t1, t2}
bool in_sp(WeightLabel l);
// "eps", "e-", "erho", "s+", "s-", "t0", "t1", "t2"
std::string_view label_name(WeightLabel l);
// "ε", "(e,−)", "(e,ρ)", ...
std::string_view label_pretty(WeightLabel l);
WeightLabel parse_label(std::string_view s);
// lowest weight of L(l): swaps erho and t0
WeightLabel label_bar(WeightLabel l);

// Explicit simple D(S3)-module.
struct Weight {
    WeightLabel label;
    std::vector<std::string> names;
    std::vector<Perm> degrees;
    std::array<Mat, 3> action;  // (12), (13), (23)

    int dim() const { return int(names.size()); }
    Mat group_matrix(const Perm& g) const;
};

Weight weight_build(WeightLabel l);

// Multiplicities of the eight weights in a D(S3)-module described by traces:
// e-part: dim, tr(12), tr(123); (12)-part: dim, tr(12); (123)-part: dim, tr(123), tr(132).
struct ClassTraces {
    Scalar e_dim, e_t12, e_c123;
    Scalar s_dim, s_t12;
    Scalar c_dim, c_c123, c_c132;
};
std::array<long, 8> multiplicities_from_traces(const ClassTraces& t);

using FusionTable = std::array<std::array<std::array<int, 8>, 8>, 8>;
// cached table: fusion_table()[a][b][c] = multiplicity of c in a(x)b
const FusionTable& fusion_table();
// recomputed from scratch by solving for D(S3)-intertwiners
FusionTable derive_fusion_table();
std::vector<WeightLabel> weight_tensor_decompose(WeightLabel a, WeightLabel b);
WeightLabel label_dual(WeightLabel l);

// Integer Laurent polynomial in t.
class Laurent {
public:
    Laurent() = default;
    Laurent(long c) { if (c) c_[0] = c; }  // NOLINT
    static Laurent mono(int e, long c = 1) { Laurent p; if (c) p.c_[e] = c; return p; }
    const std::map<int, long>& coeffs() const { return c_; }
    long at(int e) const { auto it = c_.find(e); return it == c_.end() ? 0 : it->second; }
    bool is_zero() const { return c_.empty(); }
    long eval1() const;
    Laurent bar() const;
    Laurent shifted(int k) const;
    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    bool operator==(const Laurent& o) const = default;
    std::string str() const;

private:
    std::map<int, long> c_;
};

// Element of K[t, t^-1]: finitely supported integer combination of (label, degree).
class GradedChar {
public:
    GradedChar() = default;
    static GradedChar of(WeightLabel l, int z = 0, long c = 1);
    // sum over the terms p_i * l_i
    static GradedChar of(const std::vector<std::pair<WeightLabel, Laurent>>& terms);

    long at(WeightLabel l, int z) const;
    void add(WeightLabel l, int z, long c);
    bool is_zero() const { return c_.empty(); }
    // (z, label) -> coefficient, z descending
    const std::map<std::pair<int, int>, long, std::greater<>>& terms() const { return c_; }
    int max_degree() const;
    int min_degree() const;
    long dim() const;  // evaluate at t=1 with weight dimensions
    long mass() const; // sum of coefficients
    bool nonnegative() const;

    GradedChar shifted(int k) const;  // multiply by t^k
    GradedChar bar() const;           // t -> t^-1
    GradedChar scaled(const Laurent& p) const;
    // degree-z slice as a vector of 8 coefficients
    std::array<long, 8> layer(int z) const;

    friend GradedChar operator+(const GradedChar& a, const GradedChar& b);
    friend GradedChar operator-(const GradedChar& a, const GradedChar& b);
    friend GradedChar operator*(const GradedChar& a, const GradedChar& b);
    bool operator==(const GradedChar& o) const = default;

    // "(e,ρ) + (σ,+)·t^-1 + (τ,0)·t^-2"
    std::string pretty() const;
    // "erho + s+·t^-1 + t0·t^-2"
    std::string str() const;

private:
    std::map<std::pair<int, int>, long, std::greater<>> c_;
};

inline GradedChar char_mul(const GradedChar& p, const GradedChar& q) { return p * q; }

// ch B(V) = eps + s- t^-1 + (t1+t2) t^-2 + s- t^-3 + eps t^-4
GradedChar char_nichols();
// tabulated graded characters of the simple D-modules
GradedChar char_of_simple(WeightLabel l);

}  // namespace fkd
