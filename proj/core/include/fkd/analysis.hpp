#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fkd/gmodule.hpp"
#include "fkd/hom.hpp"
#include "fkd/weights.hpp"

namespace fkd {

// Multiset of shifted simples: (label, shift) -> multiplicity.
struct SimpleDecomposition {
    std::map<std::pair<WeightLabel, int>, long> terms;
    long mult(WeightLabel l, int shift) const;
    // summed over shifts
    long total(WeightLabel l) const;
    GradedChar character() const;
    bool operator==(const SimpleDecomposition&) const = default;
    // "L(t1) + L(t2) + t^-2 L(eps)"
    std::string str() const;
    // "L(τ,1) ⊕ L(τ,2) ⊕ t⁻²L(ε)"
    std::string pretty() const;
};

// Composition factors with multiplicities; throws if c is not a nonnegative combination.
SimpleDecomposition decompose_character(const GradedChar& c);

// Graded subspace filtration 0 = F0 < F1 < ... < Fn = m (socle) or m = R0 > R1 > ... > Rn = 0 (radical).
struct Filtration {
    std::vector<GradedSubspace> steps;
    std::vector<SimpleDecomposition> layers;  // F_i / F_{i-1} resp. R_{i-1} / R_i
    int length() const { return int(layers.size()); }
    // "soc M ≃ ...\nsoc²M/soc M ≃ ..." for a socle filtration
    std::string render(const std::string& name, bool socle) const;
};

GradedSubspace socle(const GModule& m);
Filtration socle_filtration(const GModule& m);
GradedSubspace radical(const GModule& m);
Filtration radical_filtration(const GModule& m);
GModule head(const GModule& m);
// subspace of m annihilated by a subspace of dual(m)
GradedSubspace annihilator_in(const GModule& m, const GradedSubspace& in_dual);
// socle as {v : rad(A) v = 0} for the image A of D in End(m); for small modules only
GradedSubspace socle_bruteforce(const GModule& m);

// simple: the x-invariants form a single weight and generate m
bool is_simple(const GModule& m);

struct Summand {
    GModule module;
    HomMap inclusion;   // summand -> m
    HomMap projection;  // m -> summand
};

struct Decomposition {
    std::vector<Summand> summands;
    bool certified = false;  // inclusions and projections are intertwiners and assemble to an isomorphism
};

// End(m) is local with End/rad one-dimensional
bool is_indecomposable(const GModule& m);
Decomposition decompose(const GModule& m);

struct IsoResult {
    bool iso = false;
    std::optional<HomMap> witness;  // m -> n, invertible intertwiner
    std::string reason;
};

// isomorphism of indecomposables: some g o f is not nilpotent
std::optional<HomMap> iso_indecomposable(const GModule& x, const GModule& y);
IsoResult iso_test(const GModule& m, const GModule& n);
IsoResult iso_test(const GModule& m, const GModule& n, const Decomposition& dm, const Decomposition& dn);

// dim Ext^1(L(a), L(b)) summed over shifts, read off rad P(a) / rad^2 P(a)
int ext_dim(WeightLabel a, WeightLabel b);
using QuiverMatrix = std::array<std::array<int, 8>, 8>;
// arrow counts of the separated quiver, a -> b'
QuiverMatrix separated_quiver();

}  // namespace fkd
