#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fkd/analysis.hpp"
#include "fkd/gmodule.hpp"
#include "fkd/weights.hpp"

namespace fkd::catalog {

// B(V) as the quotient of the free algebra on x12, x13, x23 (letters 0, 1, 2).
struct NicholsAlgebra {
    std::array<int, 6> dims{};                    // degrees 0..5
    std::vector<std::vector<std::vector<int>>> basis;  // normal words per degree
    std::vector<Subspace> ideal;                  // degree-n part of the ideal, in the word basis
    std::array<GradedChar, 5> layers;             // D(S3)-character of degree n, placed at t^-n
    std::vector<int> x_top;

    // coordinates of a word in the normal-word basis of its degree
    Vec normal_form(const std::vector<int>& word) const;
    static std::string word_name(const std::vector<int>& word);
};

const NicholsAlgebra& nichols();
NicholsAlgebra build_nichols();

// the 1-dimensional module and the three appendix modules (L(t0), L(erho), L(s-))
GModule build_tabulated(WeightLabel l);
GModule build_t01();

enum class Named { A, B, C, T01 };

const GModule& simple(WeightLabel l);
const GModule& projective(WeightLabel l);
const GModule& named(Named n);
// L(a) (x) L(b), memoized
const GModule& tensor_of(WeightLabel a, WeightLabel b);
const Decomposition& tensor_decomposition(WeightLabel a, WeightLabel b);
// radical filtration of P(l)
const Filtration& radical_layers(WeightLabel l);

// "L(eps)", "P(s-)", "A", "T01", "Ind(e-,s+)", optionally followed by "*" and a shift "[k]"
GModule build(std::string_view key);
bool is_key(std::string_view key);
std::vector<std::string> base_keys();

GradedChar verma_char(WeightLabel l);
GradedChar coverma_char(WeightLabel l);
GradedChar ind_char(WeightLabel l);
// the five formulas for ch P(l), expanded through Verma characters
GradedChar projective_char(WeightLabel l);

// d in L(t0) (x) L(erho) and eps_-2 in L(s-) (x) L(s-)
Vec vector_d(const GModule& t0_erho);
Vec vector_eps_m2(const GModule& sm_sm);

// name of an indecomposable up to shift ("L(s+)", "B*", "P(erho)[-2]"), or nullopt
std::optional<std::string> identify(const GModule& x);

}  // namespace fkd::catalog
