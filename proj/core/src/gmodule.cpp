#include "fkd/gmodule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fkd {

namespace {
constexpr std::array<std::string_view, 9> kGenNames = {"t12", "t13", "t23", "x12", "x13", "x23", "y12", "y13", "y23"};
const std::array<Perm, 3> kT = {Perm::t12(), Perm::t13(), Perm::t23()};
}  // namespace

std::string_view gen_name(Gen g) { return kGenNames[static_cast<int>(g)]; }

Gen parse_gen(std::string_view s) {
    for (int i = 0; i < 9; ++i)
        if (kGenNames[i] == s) return kAllGens[i];
    throw std::invalid_argument("unknown generator '" + std::string(s) + "'");
}

Perm gen_transposition(Gen g) { return kT[static_cast<int>(g) % 3]; }

Gen make_gen(int kind, const Perm& t) {
    for (int i = 0; i < 3; ++i)
        if (kT[i] == t) return kAllGens[kind * 3 + i];
    throw std::invalid_argument("not a transposition");
}

BlockKey gen_target(Gen h, const BlockKey& k) {
    Perm t = gen_transposition(h);
    Perm g = Perm::from_index(k.s3);
    switch (gen_kind(h)) {
        case 0: return {k.z, (t * g * t).index()};
        case 1: return {k.z - 1, (t * g).index()};
        default: return {k.z + 1, (t * g).index()};
    }
}

GModule::GModule() : GModule({}, {}) {}

GModule::GModule(std::vector<BasisVector> basis, Actions actions) : basis_(std::move(basis)), act_(std::move(actions)) {
    int n = dim();
    for (auto& a : act_)
        if (a.rows() != n || a.cols() != n) {
            if (a.rows() == 0 && a.cols() == 0) a = SparseMat(n, n);
            else throw std::invalid_argument("action matrix has wrong shape");
        }
    for (int i = 0; i < n; ++i) block_id_[{basis_[i].z, basis_[i].s3.index()}] = 0;
    int b = 0;
    for (auto& [k, id] : block_id_) {
        id = b++;
        blocks_.push_back({k, {}});
    }
    where_.resize(n);
    for (int i = 0; i < n; ++i) {
        int id = block_id_.at({basis_[i].z, basis_[i].s3.index()});
        where_[i] = {id, int(blocks_[id].members.size())};
        blocks_[id].members.push_back(i);
    }
    bact_.resize(blocks_.size());
    for (int g = 0; g < 9; ++g) {
        Gen h = kAllGens[g];
        for (int bb = 0; bb < num_blocks(); ++bb) {
            BlockKey tk = gen_target(h, blocks_[bb].key);
            int tb = find_block(tk);
            BlockAction ba;
            ba.target = tb;
            ba.m = Mat(tb < 0 ? 0 : block_size(tb), block_size(bb));
            bact_[bb][g] = std::move(ba);
        }
        for (int j = 0; j < n; ++j)
            for (const auto& [i, v] : act_[g].column(j)) {
                auto [sb, sl] = where_[j];
                auto [tb, tl] = where_[i];
                if (bact_[sb][g].target != tb) {
                    covariant_ = false;
                    continue;
                }
                bact_[sb][g].m(tl, sl) = v;
            }
    }
}

int GModule::index_of(std::string_view name) const {
    for (int i = 0; i < dim(); ++i)
        if (basis_[i].name == name) return i;
    return -1;
}

int GModule::find_block(const BlockKey& k) const {
    auto it = block_id_.find(k);
    return it == block_id_.end() ? -1 : it->second;
}

const BlockAction& GModule::block_action(Gen h, int b) const {
    if (!covariant_) throw std::logic_error("module is not degree-covariant");
    return bact_[b][static_cast<int>(h)];
}

HVec GModule::apply(Gen h, const HVec& v) const {
    const BlockAction& ba = block_action(h, v.block);
    if (ba.target < 0) return {-1, {}};
    return {ba.target, ba.m.apply(v.v)};
}

Vec GModule::to_global(const HVec& v) const {
    Vec out(dim());
    if (v.block < 0) return out;
    const auto& mem = blocks_[v.block].members;
    for (std::size_t k = 0; k < mem.size(); ++k) out[mem[k]] = v.v[k];
    return out;
}

HVec GModule::unit(int i) const {
    HVec h{where_[i].first, Vec(block_size(where_[i].first))};
    h.v[where_[i].second] = Scalar(1);
    return h;
}

SparseMat GModule::group_matrix(const Perm& g) const {
    const SparseMat& a = action(Gen::t12);
    const SparseMat& b = action(Gen::t13);
    switch (g.index()) {
        case 0: return SparseMat::identity(dim());
        case 1: return a;
        case 2: return b;
        case 3: return action(Gen::t23);
        case 4: return b * a;
        default: return a * b;
    }
}

SparseMat GModule::delta(const Perm& g) const {
    std::vector<Scalar> d(dim());
    for (int i = 0; i < dim(); ++i)
        if (basis_[i].s3 == g) d[i] = Scalar(1);
    return SparseMat::diagonal(d);
}

int GModule::min_z() const {
    if (blocks_.empty()) throw std::domain_error("zero module has no degrees");
    return blocks_.back().key.z;
}

int GModule::max_z() const {
    if (blocks_.empty()) throw std::domain_error("zero module has no degrees");
    return blocks_.front().key.z;
}

GradedChar GModule::character() const {
    std::map<int, ClassTraces> per_z;
    auto blk = [&](int z, const Perm& g) { return find_block({z, g.index()}); };
    for (const auto& b : blocks_) per_z[b.key.z];
    for (auto& [z, t] : per_z) {
        int e = blk(z, Perm::e());
        if (e >= 0) {
            const Mat& a = block_action(Gen::t12, e).m;
            const Mat& c = block_action(Gen::t13, e).m;
            t.e_dim = block_size(e);
            t.e_t12 = a.trace();
            t.e_c123 = (c * a).trace();
        }
        int s = blk(z, Perm::t12());
        if (s >= 0) {
            t.s_dim = block_size(s);
            t.s_t12 = block_action(Gen::t12, s).m.trace();
        }
        int c1 = blk(z, Perm::c123()), c2 = blk(z, Perm::c132());
        if (c1 >= 0) {
            t.c_dim = block_size(c1);
            if (c2 >= 0) {
                // (123) = (13)(12): c1 -> c2 -> c1 ; (132) = (12)(13)
                Mat a12 = block_action(Gen::t12, c1).m, a13b = block_action(Gen::t13, c2).m;
                Mat a13 = block_action(Gen::t13, c1).m, a12b = block_action(Gen::t12, c2).m;
                t.c_c123 = (a13b * a12).trace();
                t.c_c132 = (a12b * a13).trace();
            }
        }
    }
    GradedChar ch;
    for (auto& [z, t] : per_z) {
        auto m = multiplicities_from_traces(t);
        for (int l = 0; l < 8; ++l) ch.add(kAllLabels[l], z, m[l]);
    }
    return ch;
}

namespace {

struct Checker {
    const GModule& m;
    ValidationReport rep;
    void expect_zero(const SparseMat& d, const std::string& rel) {
        if (d.is_zero()) return;
        std::string w;
        for (int j = 0; j < d.cols(); ++j)
            if (!d.column(j).empty()) {
                w = m.basis()[j].name;
                break;
            }
        if (rep.ok) {
            rep.ok = false;
            rep.relation = rel;
            rep.witness = w;
        }
        rep.failures.push_back(rel + " (on " + w + ")");
    }
};

std::string tname(const Perm& t) { return "(" + std::string(t.name()) + ")"; }

}  // namespace

bool cross_relation_holds(const GModule& m, int sign) {
    // (23)y23 y13 x12 = (23)x12 y13 y23 - (23)(12)(d23 - d(23)(12)) y23 - sign (23)y23 (12)(d13 - d(13)(12)),
    // conjugated by every g in S3
    for (const Perm& g : Perm::all()) {
        SparseMat G = m.group_matrix(g), Gi = m.group_matrix(g.inv());
        auto conj_gen = [&](int kind, const Perm& t) { return G * m.action(make_gen(kind, t)) * Gi; };
        auto conj_grp = [&](const Perm& h) { return m.group_matrix(g * h * g.inv()); };
        auto conj_delta = [&](const Perm& h) { return m.delta(g * h * g.inv()); };
        SparseMat t23 = conj_grp(Perm::t23()), t12 = conj_grp(Perm::t12());
        SparseMat y23 = conj_gen(2, Perm::t23()), y13 = conj_gen(2, Perm::t13()), x12 = conj_gen(1, Perm::t12());
        SparseMat lhs = t23 * y23 * y13 * x12;
        SparseMat r1 = t23 * x12 * y13 * y23;
        SparseMat r2 = t23 * t12 * (conj_delta(Perm::t23()) - conj_delta(Perm::t23() * Perm::t12())) * y23;
        SparseMat r3 = t23 * y23 * t12 * (conj_delta(Perm::t13()) - conj_delta(Perm::t13() * Perm::t12()));
        SparseMat diff = lhs - r1 + r2 + r3.scaled(Scalar(sign));
        if (!diff.is_zero()) return false;
    }
    return true;
}

ValidationReport validate(const GModule& m) {
    Checker c{m, {}};
    int n = m.dim();
    SparseMat I = SparseMat::identity(n);
    std::array<SparseMat, 3> t = {m.action(Gen::t12), m.action(Gen::t13), m.action(Gen::t23)};
    for (int i = 0; i < 3; ++i) c.expect_zero(t[i] * t[i] - I, tname(kT[i]) + "^2 = 1");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            Perm k = kT[i] * kT[j] * kT[i];
            int kk = k == kT[0] ? 0 : (k == kT[1] ? 1 : 2);
            c.expect_zero(t[i] * t[j] * t[i] - t[kk], tname(kT[i]) + tname(kT[j]) + tname(kT[i]) + " = " + tname(k));
        }
    // degree covariance
    for (Gen h : kAllGens) {
        const SparseMat& a = m.action(h);
        for (int j = 0; j < n; ++j)
            for (const auto& [i, v] : a.column(j)) {
                BlockKey src{m.basis()[j].z, m.basis()[j].s3.index()};
                BlockKey want = gen_target(h, src);
                BlockKey got{m.basis()[i].z, m.basis()[i].s3.index()};
                if (!(want == got)) {
                    std::string rel = "degree covariance of " + std::string(gen_name(h));
                    if (c.rep.ok) {
                        c.rep.ok = false;
                        c.rep.relation = rel;
                        c.rep.witness = m.basis()[j].name;
                    }
                    c.rep.failures.push_back(rel + " (on " + m.basis()[j].name + ")");
                    goto next_gen;
                }
            }
    next_gen:;
    }
    for (int kind = 1; kind <= 2; ++kind) {
        const char* L = kind == 1 ? "x" : "y";
        auto X = [&](const Perm& p) -> const SparseMat& { return m.action(make_gen(kind, p)); };
        // g L_t g^-1 = sgn(g) L_{g t g^-1}
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Perm k = kT[i] * kT[j] * kT[i];
                c.expect_zero(t[i] * X(kT[j]) * t[i] + X(k),
                              tname(kT[i]) + L + tname(kT[j]) + tname(kT[i]) + " = -" + L + tname(k));
            }
        for (int i = 0; i < 3; ++i) c.expect_zero(X(kT[i]) * X(kT[i]), std::string(L) + tname(kT[i]) + "^2 = 0");
        const SparseMat &a = X(Perm::t12()), &b = X(Perm::t13()), &d = X(Perm::t23());
        c.expect_zero(a * b + d * a + b * d, std::string(L) + "12 " + L + "13 + " + L + "23 " + L + "12 + " + L + "13 " + L + "23 = 0");
        c.expect_zero(b * a + a * d + d * b, std::string(L) + "13 " + L + "12 + " + L + "12 " + L + "23 + " + L + "23 " + L + "13 = 0");
    }
    if (!c.rep.ok && c.rep.relation.rfind("degree", 0) == 0) return c.rep;
    // y_s x_t + x_t y_{tst} = delta_{s,t} + t (delta_s - delta_{st})
    for (const Perm& s : kT)
        for (const Perm& tt : kT) {
            SparseMat lhs = m.action(make_gen(2, s)) * m.action(make_gen(1, tt)) +
                            m.action(make_gen(1, tt)) * m.action(make_gen(2, tt * s * tt));
            SparseMat rhs = m.action(make_gen(0, tt)) * (m.delta(s) - m.delta(s * tt));
            if (s == tt) rhs = rhs + I;
            c.expect_zero(lhs - rhs, "y" + tname(s) + "x" + tname(tt) + " + x" + tname(tt) + "y" +
                                         tname(tt * s * tt) + " = commutator rule");
        }
    if (!cross_relation_holds(m, -1)) {
        if (c.rep.ok) {
            c.rep.ok = false;
            c.rep.relation = "cross relation (23)y23y13x12";
        }
        c.rep.failures.push_back("cross relation (23)y23y13x12");
    }
    return c.rep;
}

GModule zero_module() { return GModule(); }

GModule tensor(const GModule& m, const GModule& n) {
    std::vector<BasisVector> basis;
    basis.reserve(std::size_t(m.dim()) * n.dim());
    for (const auto& u : m.basis())
        for (const auto& v : n.basis()) basis.push_back({u.name + "⊗" + v.name, u.z + v.z, u.s3 * v.s3});
    GModule::Actions act;
    SparseMat In = SparseMat::identity(n.dim());
    for (int i = 0; i < 3; ++i) act[i] = SparseMat::kron(m.action(kAllGens[i]), n.action(kAllGens[i]));
    for (int i = 0; i < 3; ++i) {
        Gen x = kAllGens[3 + i];
        act[3 + i] = SparseMat::kron(m.action(x), In) + SparseMat::kron(m.action(kAllGens[i]), n.action(x));
    }
    for (int i = 0; i < 3; ++i) {
        Gen y = kAllGens[6 + i];
        Perm t = kT[i];
        SparseMat s = SparseMat::kron(m.action(y), In);
        for (const Perm& g : Perm::all()) {
            SparseMat d = m.delta(g);
            if (d.is_zero()) continue;
            SparseMat term = SparseMat::kron(d, n.action(make_gen(2, g.inv() * t * g)));
            s = s + (g.sgn() > 0 ? term : term.scaled(Scalar(-1)));
        }
        act[6 + i] = std::move(s);
    }
    return GModule(std::move(basis), std::move(act));
}

GModule dual(const GModule& m) {
    std::vector<BasisVector> basis;
    for (const auto& b : m.basis()) basis.push_back({b.name + "*", -b.z, b.s3.inv()});
    GModule::Actions act;
    for (int i = 0; i < 3; ++i) act[i] = m.action(kAllGens[i]).transpose();
    for (int i = 0; i < 3; ++i) act[3 + i] = (m.action(kAllGens[i]) * m.action(kAllGens[3 + i])).scaled(Scalar(-1)).transpose();
    for (int i = 0; i < 3; ++i) {
        Perm t = kT[i];
        SparseMat s(m.dim(), m.dim());
        for (const Perm& g : Perm::all()) {
            SparseMat term = m.delta(g.inv()) * m.action(make_gen(2, g.inv() * t * g));
            s = s + term.scaled(Scalar(-g.sgn()));
        }
        act[6 + i] = s.transpose();
    }
    return GModule(std::move(basis), std::move(act));
}

GModule shift(const GModule& m, int k) {
    auto basis = m.basis();
    for (auto& b : basis) b.z += k;
    return GModule(std::move(basis), m.actions());
}

GModule direct_sum(const std::vector<GModule>& ms) {
    std::vector<BasisVector> basis;
    std::map<std::string, int> seen;
    int n = 0;
    for (const auto& m : ms) n += m.dim();
    GModule::Actions act;
    for (auto& a : act) a = SparseMat(n, n);
    int off = 0, part = 0;
    for (const auto& m : ms) {
        for (const auto& b : m.basis()) {
            BasisVector c = b;
            if (seen[b.name]++) c.name += "#" + std::to_string(part);
            basis.push_back(std::move(c));
        }
        for (int g = 0; g < 9; ++g)
            for (int j = 0; j < m.dim(); ++j)
                for (const auto& [i, v] : m.action(kAllGens[g]).column(j)) act[g].column(off + j).emplace_back(off + i, v);
        off += m.dim();
        ++part;
    }
    return GModule(std::move(basis), std::move(act));
}

int GradedSubspace::dim() const {
    int d = 0;
    for (const auto& p : parts) d += p.dim();
    return d;
}

void GradedSubspace::add(const GradedSubspace& o) {
    for (std::size_t b = 0; b < parts.size(); ++b) parts[b].add(o.parts[b]);
}

GradedSubspace empty_subspace(const GModule& m) {
    GradedSubspace s;
    for (int b = 0; b < m.num_blocks(); ++b) s.parts.emplace_back(m.block_size(b));
    return s;
}

GradedSubspace full_subspace(const GModule& m) {
    GradedSubspace s;
    for (int b = 0; b < m.num_blocks(); ++b) s.parts.push_back(Subspace::whole(m.block_size(b)));
    return s;
}

bool is_invariant(const GModule& m, const GradedSubspace& s) {
    for (int b = 0; b < m.num_blocks(); ++b)
        for (const auto& r : s.parts[b].basis())
            for (Gen h : kGeneratingGens) {
                HVec w = m.apply(h, {b, r});
                if (w.block < 0) continue;
                if (!s.contains(w)) return false;
            }
    return true;
}

GradedSubspace closure(const GModule& m, GradedSubspace s) {
    std::vector<HVec> queue;
    for (int b = 0; b < m.num_blocks(); ++b)
        for (const auto& r : s.parts[b].basis()) queue.push_back({b, r});
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (Gen h : kGeneratingGens) {
            HVec w = m.apply(h, queue[q]);
            if (w.block < 0 || is_zero(w.v)) continue;
            if (s.parts[w.block].insert(w.v)) queue.push_back(std::move(w));
        }
    return s;
}

GradedSubspace closure(const GModule& m, const std::vector<HVec>& vs) {
    GradedSubspace s = empty_subspace(m);
    std::vector<HVec> seeds;
    for (const auto& v : vs)
        if (v.block >= 0 && s.parts[v.block].insert(v.v)) seeds.push_back(v);
    return closure(m, std::move(s));
}

std::vector<HVec> homogeneous_parts(const GModule& m, const Vec& v) {
    std::vector<HVec> out;
    for (int b = 0; b < m.num_blocks(); ++b) {
        HVec h{b, Vec(m.block_size(b))};
        bool nz = false;
        for (int k = 0; k < m.block_size(b); ++k) {
            h.v[k] = v[m.block(b).members[k]];
            nz = nz || !h.v[k].is_zero();
        }
        if (nz) out.push_back(std::move(h));
    }
    return out;
}

GradedSubspace submodule_generated(const GModule& m, const std::vector<Vec>& vectors) {
    std::vector<HVec> hs;
    for (const auto& v : vectors)
        for (auto& h : homogeneous_parts(m, v)) hs.push_back(std::move(h));
    return closure(m, hs);
}

GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b) {
    GradedSubspace s;
    for (std::size_t k = 0; k < a.parts.size(); ++k) s.parts.push_back(intersect(a.parts[k], b.parts[k]));
    return s;
}

GradedSubspace annihilator(const GModule& m, const GradedSubspace& s) {
    // the dual basis vector of block (z, g) lives in block (-z, g^-1) of dual(m); the
    // block ids of dual(m) are recovered by key
    GModule d = dual(m);
    GradedSubspace out = empty_subspace(d);
    for (int b = 0; b < m.num_blocks(); ++b) {
        BlockKey k = m.block(b).key;
        int db = d.find_block({-k.z, Perm::from_index(k.s3).inv().index()});
        out.parts[db] = annihilator(s.parts[b]);
    }
    return out;
}

GModule restrict_to(const GModule& m, const GradedSubspace& s) {
    std::vector<BasisVector> basis;
    std::vector<std::pair<int, int>> origin;  // (block, row)
    for (int b = 0; b < m.num_blocks(); ++b) {
        const Subspace& p = s.parts[b];
        for (int r = 0; r < p.dim(); ++r) {
            const Vec& v = p.basis()[r];
            int nz = 0;
            for (const auto& x : v)
                if (!x.is_zero()) ++nz;
            const BasisVector& pv = m.basis()[m.block(b).members[p.pivots()[r]]];
            basis.push_back({nz == 1 ? pv.name : pv.name + "~", pv.z, pv.s3});
            origin.emplace_back(b, r);
        }
    }
    std::vector<int> offset(m.num_blocks() + 1, 0);
    for (int b = 0; b < m.num_blocks(); ++b) offset[b + 1] = offset[b] + s.parts[b].dim();
    int n = int(basis.size());
    GModule::Actions act;
    for (auto& a : act) a = SparseMat(n, n);
    for (int j = 0; j < n; ++j) {
        auto [b, r] = origin[j];
        for (int g = 0; g < 9; ++g) {
            HVec w = m.apply(kAllGens[g], {b, s.parts[b].basis()[r]});
            if (w.block < 0 || is_zero(w.v)) continue;
            const Subspace& tp = s.parts[w.block];
            Vec rem = w.v;
            tp.reduce(rem);
            if (!is_zero(rem)) throw std::invalid_argument("subspace is not invariant");
            Vec c = tp.coords(w.v);
            for (int i = 0; i < int(c.size()); ++i)
                if (!c[i].is_zero()) act[g].column(j).emplace_back(offset[w.block] + i, c[i]);
        }
    }
    return GModule(std::move(basis), std::move(act));
}

GModule quotient(const GModule& m, const GradedSubspace& s) {
    if (!is_invariant(m, s)) throw std::invalid_argument("quotient by a non-invariant subspace");
    std::vector<BasisVector> basis;
    std::vector<std::vector<int>> free(m.num_blocks());
    std::vector<std::vector<int>> qidx(m.num_blocks());
    for (int b = 0; b < m.num_blocks(); ++b) {
        free[b] = s.parts[b].free_columns();
        qidx[b].assign(m.block_size(b), -1);
        for (int k : free[b]) {
            qidx[b][k] = int(basis.size());
            basis.push_back(m.basis()[m.block(b).members[k]]);
        }
    }
    int n = int(basis.size());
    GModule::Actions act;
    for (auto& a : act) a = SparseMat(n, n);
    for (int b = 0; b < m.num_blocks(); ++b)
        for (int k : free[b]) {
            int j = qidx[b][k];
            for (int g = 0; g < 9; ++g) {
                HVec w = m.apply(kAllGens[g], m.unit(m.block(b).members[k]));
                if (w.block < 0) continue;
                s.parts[w.block].reduce(w.v);
                for (int i = 0; i < int(w.v.size()); ++i)
                    if (!w.v[i].is_zero()) act[g].column(j).emplace_back(qidx[w.block][i], w.v[i]);
            }
        }
    return GModule(std::move(basis), std::move(act));
}

GradedSubspace preimage(const GModule& m, const GradedSubspace& s, const GradedSubspace& in_quotient) {
    GModule q = quotient(m, s);
    GradedSubspace out = s;
    for (int qb = 0; qb < q.num_blocks(); ++qb) {
        int b = m.find_block(q.block(qb).key);
        auto free = s.parts[b].free_columns();
        for (const auto& r : in_quotient.parts[qb].basis()) {
            Vec v(m.block_size(b));
            for (int k = 0; k < int(free.size()); ++k) v[free[k]] = r[k];
            out.parts[b].insert(std::move(v));
        }
    }
    return out;
}

}  // namespace fkd
