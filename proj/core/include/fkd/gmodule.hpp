#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fkd/matrix.hpp"
#include "fkd/perm.hpp"
#include "fkd/weights.hpp"

namespace fkd {

enum class Gen { t12, t13, t23, x12, x13, x23, y12, y13, y23 };
inline constexpr std::array<Gen, 9> kAllGens = {Gen::t12, Gen::t13, Gen::t23, Gen::x12, Gen::x13,
                                                Gen::x23, Gen::y12, Gen::y13, Gen::y23};
// t12, t13, x12 and y12 generate D together with the delta's
inline constexpr std::array<Gen, 4> kGeneratingGens = {Gen::t12, Gen::t13, Gen::x12, Gen::y12};

std::string_view gen_name(Gen g);
Gen parse_gen(std::string_view s);
// 0 group, 1 x, 2 y
inline int gen_kind(Gen g) { return static_cast<int>(g) / 3; }
Perm gen_transposition(Gen g);
Gen make_gen(int kind, const Perm& t);

struct BasisVector {
    std::string name;
    int z = 0;
    Perm s3;
    bool operator==(const BasisVector&) const = default;
};

struct BlockKey {
    int z = 0;
    int s3 = 0;  // Perm::index()
    // z descending, then the fixed S3 enumeration
    bool operator<(const BlockKey& o) const { return z != o.z ? z > o.z : s3 < o.s3; }
    bool operator==(const BlockKey& o) const = default;
};

// degree of the image of a vector of degree k under the generator
BlockKey gen_target(Gen h, const BlockKey& k);

struct Block {
    BlockKey key;
    std::vector<int> members;  // global basis indices
};

struct BlockAction {
    int target = -1;  // -1: no block of the target degree (action must be zero)
    Mat m;            // |target| x |source|
};

// Vector supported in a single block, in local coordinates.
struct HVec {
    int block = -1;
    Vec v;
};

class GModule {
public:
    using Actions = std::array<SparseMat, 9>;

    GModule();
    GModule(std::vector<BasisVector> basis, Actions actions);

    int dim() const { return int(basis_.size()); }
    const std::vector<BasisVector>& basis() const { return basis_; }
    const SparseMat& action(Gen g) const { return act_[static_cast<int>(g)]; }
    const Actions& actions() const { return act_; }
    int index_of(std::string_view name) const;

    SparseMat group_matrix(const Perm& g) const;
    SparseMat delta(const Perm& g) const;

    int num_blocks() const { return int(blocks_.size()); }
    const std::vector<Block>& blocks() const { return blocks_; }
    const Block& block(int b) const { return blocks_[b]; }
    int block_size(int b) const { return int(blocks_[b].members.size()); }
    int find_block(const BlockKey& k) const;
    int block_of(int i) const { return where_[i].first; }
    int local_of(int i) const { return where_[i].second; }
    // false if some action entry breaks the degree rules; block actions are then unavailable
    bool covariant() const { return covariant_; }
    const BlockAction& block_action(Gen h, int b) const;
    HVec apply(Gen h, const HVec& v) const;

    Vec to_global(const HVec& v) const;
    HVec unit(int i) const;

    int min_z() const;
    int max_z() const;
    GradedChar character() const;

    bool operator==(const GModule& o) const { return basis_ == o.basis_ && act_ == o.act_; }

private:
    std::vector<BasisVector> basis_;
    Actions act_;
    std::vector<Block> blocks_;
    std::map<BlockKey, int> block_id_;
    std::vector<std::pair<int, int>> where_;
    std::vector<std::array<BlockAction, 9>> bact_;
    bool covariant_ = true;
};

struct ValidationReport {
    bool ok = true;
    std::string relation;  // first failing relation
    std::string witness;   // basis vector on which it fails
    std::vector<std::string> failures;
};

ValidationReport validate(const GModule& m);
// the cross relation and its S3-conjugates; sign = +1 checks the printed form,
// sign = -1 the form with the last term negated (the one that holds)
bool cross_relation_holds(const GModule& m, int sign);

GModule zero_module();
GModule tensor(const GModule& m, const GModule& n);
GModule dual(const GModule& m);
GModule shift(const GModule& m, int k);
GModule direct_sum(const std::vector<GModule>& ms);

// Graded subspace: one subspace per block of the ambient module.
struct GradedSubspace {
    std::vector<Subspace> parts;
    int dim() const;
    bool contains(const HVec& v) const { return parts[v.block].contains(v.v); }
    void add(const GradedSubspace& o);
    bool operator==(const GradedSubspace& o) const { return parts == o.parts; }
};

GradedSubspace empty_subspace(const GModule& m);
GradedSubspace full_subspace(const GModule& m);
bool is_invariant(const GModule& m, const GradedSubspace& s);
GradedSubspace closure(const GModule& m, const std::vector<HVec>& vs);
GradedSubspace closure(const GModule& m, GradedSubspace s);
// split a global vector into homogeneous components
std::vector<HVec> homogeneous_parts(const GModule& m, const Vec& v);
GradedSubspace submodule_generated(const GModule& m, const std::vector<Vec>& vectors);
GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b);
// with respect to the dual basis of dual(m)
GradedSubspace annihilator(const GModule& m, const GradedSubspace& s);

// module structure on an invariant subspace (basis: the RREF rows)
GModule restrict_to(const GModule& m, const GradedSubspace& s);
// module structure on m/s (basis: the non-pivot standard vectors)
GModule quotient(const GModule& m, const GradedSubspace& s);
// subspace of m given by the images of a quotient subspace plus s
GradedSubspace preimage(const GModule& m, const GradedSubspace& s, const GradedSubspace& in_quotient);

}  // namespace fkd
