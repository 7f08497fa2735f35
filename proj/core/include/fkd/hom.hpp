#pragma once

#include <vector>

#include "fkd/gmodule.hpp"

namespace fkd {

// Degree-0 graded map m -> n, one block per block of m:
// blocks[b] is |n block with the same key| x |m block b| (0 rows if n has no such block).
struct HomMap {
    std::vector<Mat> blocks;
    bool is_zero() const;
    bool operator==(const HomMap&) const = default;
};

// Basis of the graded intertwiners m -> n.
struct HomBasis {
    std::vector<HomMap> maps;
    int dim() const { return int(maps.size()); }
};

HomBasis hom_space(const GModule& m, const GModule& n);

HomMap hom_zero(const GModule& m, const GModule& n);
HomMap hom_identity(const GModule& m);
HomMap hom_combination(const std::vector<HomMap>& maps, const Vec& coeffs);
HomMap hom_add(const HomMap& f, const HomMap& g);
HomMap hom_scaled(const HomMap& f, const Scalar& s);
// g o f for f: a -> b, g: b -> c
HomMap hom_compose(const GModule& a, const GModule& b, const HomMap& g, const HomMap& f);
HVec hom_apply(const GModule& m, const GModule& n, const HomMap& f, const HVec& v);
Mat hom_dense(const GModule& m, const GModule& n, const HomMap& f);
HomMap hom_from_dense(const GModule& m, const GModule& n, const Mat& f);
// commutes with all nine generators
bool is_intertwiner(const GModule& m, const GModule& n, const HomMap& f);
// bijective (blockwise square and invertible)
bool hom_is_iso(const GModule& m, const GModule& n, const HomMap& f);
HomMap hom_inverse(const GModule& m, const GModule& n, const HomMap& f);
GradedSubspace hom_image(const GModule& m, const GModule& n, const HomMap& f);
GradedSubspace hom_kernel(const GModule& m, const GModule& n, const HomMap& f);

}  // namespace fkd
