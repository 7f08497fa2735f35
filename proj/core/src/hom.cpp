#include "fkd/hom.hpp"

#include <algorithm>
#include <future>
#include <tuple>
#include <stdexcept>

#include "fkd/modp.hpp"

namespace fkd {

bool HomMap::is_zero() const {
    return std::all_of(blocks.begin(), blocks.end(), [](const Mat& m) { return m.is_zero(); });
}

namespace {

int target_rows(const GModule& n, const BlockKey& k) {
    int c = n.find_block(k);
    return c < 0 ? 0 : n.block_size(c);
}

// ---- exact spinning of the source --------------------------------------------------------

struct Node {
    int block;
    Vec v;
    int parent = -1;  // -1: free generator
    Gen h = Gen::t12;
};

struct Relation {
    int node;
    Gen h;
    int tblock;                 // block of m holding h.node; -1 if h.node = 0 structurally
    std::vector<std::pair<int, Scalar>> coeffs;  // node ids
};

// Echelon form of the nodes spanned so far in one block, tracking node coefficients.
struct TrackedSpan {
    std::vector<int> nodes;
    std::vector<Vec> rows;
    std::vector<int> piv;
    std::vector<Vec> comb;  // rows[k] = sum comb[k][l] * node(nodes[l])

    // residual and combination with w - residual = sum combo[l] node(nodes[l])
    std::pair<Vec, Vec> reduce(Vec w) const {
        Vec combo(nodes.size());
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const Scalar f = w[piv[k]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < w.size(); ++j)
                if (!rows[k][j].is_zero()) w[j] -= f * rows[k][j];
            for (std::size_t l = 0; l < comb[k].size(); ++l)
                if (!comb[k][l].is_zero()) combo[l] += f * comb[k][l];
        }
        return {std::move(w), std::move(combo)};
    }

    void add_node(int id, Vec residual, Vec combo) {
        int p = 0;
        while (residual[p].is_zero()) ++p;
        Scalar inv = residual[p].inv();
        for (auto& x : residual) x *= inv;
        combo.resize(nodes.size() + 1);
        for (auto& x : combo) x = -x;
        combo.back() = Scalar(1);
        for (auto& x : combo) x *= inv;
        for (auto& c : comb) c.resize(nodes.size() + 1);
        nodes.push_back(id);
        rows.push_back(std::move(residual));
        piv.push_back(p);
        comb.push_back(std::move(combo));
    }
};

struct Spin {
    std::vector<Node> nodes;
    std::vector<Relation> rels;
    std::vector<std::vector<int>> block_nodes;
};

Spin spin(const GModule& m) {
    Spin s;
    std::vector<TrackedSpan> spans(m.num_blocks());
    auto visit = [&](std::size_t start) {
        for (std::size_t q = start; q < s.nodes.size(); ++q) {
            for (Gen h : kGeneratingGens) {
                const BlockAction& ba = m.block_action(h, s.nodes[q].block);
                Relation rel{int(q), h, ba.target, {}};
                if (ba.target < 0) {
                    s.rels.push_back(std::move(rel));
                    continue;
                }
                Vec w = ba.m.apply(s.nodes[q].v);
                auto [res, combo] = spans[ba.target].reduce(w);
                if (is_zero(res)) {
                    for (std::size_t l = 0; l < combo.size(); ++l)
                        if (!combo[l].is_zero()) rel.coeffs.emplace_back(spans[ba.target].nodes[l], combo[l]);
                    s.rels.push_back(std::move(rel));
                } else {
                    int id = int(s.nodes.size());
                    s.nodes.push_back({ba.target, std::move(w), int(q), h});
                    spans[ba.target].add_node(id, std::move(res), std::move(combo));
                }
            }
        }
    };
    for (int b = 0; b < m.num_blocks(); ++b) {
        int n = m.block_size(b);
        for (int i = 0; i < n && int(spans[b].nodes.size()) < n; ++i) {
            Vec e(n);
            e[i] = Scalar(1);
            auto [res, combo] = spans[b].reduce(e);
            if (is_zero(res)) continue;
            int id = int(s.nodes.size());
            s.nodes.push_back({b, e, -1, Gen::t12});
            spans[b].add_node(id, std::move(res), std::move(combo));
            visit(std::size_t(id));
        }
    }
    s.block_nodes.resize(m.num_blocks());
    for (int b = 0; b < m.num_blocks(); ++b) s.block_nodes[b] = spans[b].nodes;
    return s;
}

// ---- modular solve -------------------------------------------------------------------------

using Row = std::vector<std::uint32_t>;

struct ModMat {
    int r = 0, c = 0;
    std::vector<std::uint32_t> a;
};

struct ModResult {
    bool ok = false;
    std::vector<int> pivots;
    std::vector<Row> null;  // nullspace basis (canonical from the RREF)
    std::vector<Row> maps;  // the corresponding block matrices, flattened
};

class Echelon {
public:
    Echelon(const modp::Field& f, int n) : f_(f), n_(n), pivot_row_(n, -1) {}
    int rank() const { return int(rows_.size()); }
    void insert(Row r) {
        for (int c = 0; c < n_; ++c) {
            if (r[c] == 0) continue;
            int k = pivot_row_[c];
            if (k < 0) {
                std::uint32_t inv = f_.inv(r[c]);
                for (int j = c; j < n_; ++j) r[j] = f_.mul(r[j], inv);
                pivot_row_[c] = int(rows_.size());
                rows_.push_back(std::move(r));
                return;
            }
            std::uint64_t m = f_.p - r[c];
            const Row& R = rows_[k];
            for (int j = c; j < n_; ++j)
                if (R[j]) r[j] = std::uint32_t((r[j] + m * R[j]) % f_.p);
        }
    }
    ModResult finish() {
        ModResult out;
        out.ok = true;
        std::vector<int> order;
        for (int c = 0; c < n_; ++c)
            if (pivot_row_[c] >= 0) order.push_back(c);
        // back substitution to RREF
        for (int ii = int(order.size()) - 1; ii >= 0; --ii) {
            Row& R = rows_[pivot_row_[order[ii]]];
            for (int jj = ii + 1; jj < int(order.size()); ++jj) {
                int c = order[jj];
                if (R[c] == 0) continue;
                std::uint64_t m = f_.p - R[c];
                const Row& S = rows_[pivot_row_[c]];
                for (int j = c; j < n_; ++j)
                    if (S[j]) R[j] = std::uint32_t((R[j] + m * S[j]) % f_.p);
            }
        }
        out.pivots = order;
        for (int fc = 0; fc < n_; ++fc) {
            if (pivot_row_[fc] >= 0) continue;
            Row v(n_, 0);
            v[fc] = 1;
            for (int c : order) v[c] = f_.neg(rows_[pivot_row_[c]][fc]);
            out.null.push_back(std::move(v));
        }
        return out;
    }

private:
    const modp::Field& f_;
    int n_;
    std::vector<int> pivot_row_;
    std::vector<Row> rows_;
};

struct Problem {
    const GModule& m;
    const GModule& n;
    const Spin& sp;
    std::vector<int> nblock;  // n block for each m block, -1 if absent
    std::vector<int> offset;  // unknown offset of each generator node, -1 if none
    int unknowns = 0;
    std::vector<Mat> binv;    // inverse of the node matrix of each m block
    std::vector<std::size_t> map_offset;
    std::size_t map_size = 0;
};

ModResult solve_mod(const Problem& P, const modp::Field& f, std::uint32_t root) {
    const GModule& n = P.n;
    const int U = P.unknowns;
    // embedded block actions of n
    std::vector<std::array<ModMat, 4>> act(n.num_blocks());
    for (int c = 0; c < n.num_blocks(); ++c)
        for (int gi = 0; gi < 4; ++gi) {
            const BlockAction& ba = n.block_action(kGeneratingGens[gi], c);
            ModMat mm{ba.m.rows(), ba.m.cols(), {}};
            mm.a.resize(std::size_t(mm.r) * mm.c);
            for (int i = 0; i < mm.r; ++i)
                for (int j = 0; j < mm.c; ++j) {
                    auto e = f.embed(ba.m(i, j), root);
                    if (!e) return {};
                    mm.a[std::size_t(i) * mm.c + j] = *e;
                }
            act[c][gi] = std::move(mm);
        }
    auto gidx = [](Gen h) {
        for (int i = 0; i < 4; ++i)
            if (kGeneratingGens[i] == h) return i;
        return -1;
    };
    // a (r x c) times x (c x w), row-major
    auto mult = [&](const ModMat& a, const std::vector<std::uint32_t>& x, int w) {
        std::vector<std::uint32_t> out(std::size_t(a.r) * w, 0);
        std::vector<std::uint64_t> acc(w);
        for (int i = 0; i < a.r; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (int k = 0; k < a.c; ++k) {
                std::uint64_t s = a.a[std::size_t(i) * a.c + k];
                if (!s) continue;
                const std::uint32_t* xr = &x[std::size_t(k) * w];
                for (int j = 0; j < w; ++j) acc[j] = (acc[j] + s * xr[j]) % f.p;
            }
            for (int j = 0; j < w; ++j) out[std::size_t(i) * w + j] = std::uint32_t(acc[j]);
        }
        return out;
    };
    const auto& nodes = P.sp.nodes;
    // image of each node: (rows of its n block) x (unknowns of its root generator)
    std::vector<int> origin(nodes.size()), width(nodes.size(), 0);
    std::vector<std::vector<std::uint32_t>> phi(nodes.size());
    for (std::size_t q = 0; q < nodes.size(); ++q) {
        const Node& nd = nodes[q];
        origin[q] = nd.parent < 0 ? int(q) : origin[nd.parent];
        int c = P.nblock[nd.block];
        int rows = c < 0 ? 0 : n.block_size(c);
        if (nd.parent < 0) {
            width[q] = rows;
            phi[q].assign(std::size_t(rows) * rows, 0);
            for (int i = 0; i < rows; ++i) phi[q][std::size_t(i) * rows + i] = 1;
            continue;
        }
        int w = width[q] = width[nd.parent];
        int pc = P.nblock[nodes[nd.parent].block];
        if (pc < 0 || c < 0) {
            phi[q].assign(std::size_t(rows) * w, 0);
            continue;
        }
        phi[q] = mult(act[pc][gidx(nd.h)], phi[nd.parent], w);
    }
    Echelon ech(f, U);
    std::vector<std::uint64_t> acc;
    for (const Relation& rel : P.sp.rels) {
        if (ech.rank() == U) break;
        int pc = P.nblock[nodes[rel.node].block];
        if (pc < 0) continue;
        const ModMat& a = act[pc][gidx(rel.h)];
        if (a.r == 0) continue;
        acc.assign(std::size_t(a.r) * U, 0);
        auto scatter = [&](const std::vector<std::uint32_t>& x, int q, std::uint64_t s) {
            int w = width[q], off = P.offset[origin[q]];
            if (w == 0 || s == 0) return;
            for (int i = 0; i < a.r; ++i)
                for (int j = 0; j < w; ++j)
                    if (x[std::size_t(i) * w + j])
                        acc[std::size_t(i) * U + off + j] = (acc[std::size_t(i) * U + off + j] + s * x[std::size_t(i) * w + j]) % f.p;
        };
        if (width[rel.node]) scatter(mult(a, phi[rel.node], width[rel.node]), rel.node, 1);
        for (const auto& [l, cf] : rel.coeffs) {
            auto e = f.embed(cf, root);
            if (!e) return {};
            scatter(phi[l], l, f.neg(*e));
        }
        for (int i = 0; i < a.r; ++i) {
            Row r(U);
            bool nz = false;
            for (int j = 0; j < U; ++j) nz |= (r[j] = std::uint32_t(acc[std::size_t(i) * U + j])) != 0;
            if (nz) ech.insert(std::move(r));
        }
    }
    ModResult res = ech.finish();
    // block matrices F_b = Phi_b * Binv_b for each nullspace vector
    std::vector<ModMat> binv(P.m.num_blocks());
    for (int b = 0; b < P.m.num_blocks(); ++b) {
        if (P.nblock[b] < 0) continue;
        const Mat& x = P.binv[b];
        ModMat mm{x.rows(), x.cols(), std::vector<std::uint32_t>(std::size_t(x.rows()) * x.cols())};
        for (int i = 0; i < x.rows(); ++i)
            for (int j = 0; j < x.cols(); ++j) {
                auto e = f.embed(x(i, j), root);
                if (!e) return {};
                mm.a[std::size_t(i) * x.cols() + j] = *e;
            }
        binv[b] = std::move(mm);
    }
    for (const Row& u : res.null) {
        Row flat(P.map_size, 0);
        for (int b = 0; b < P.m.num_blocks(); ++b) {
            int c = P.nblock[b];
            if (c < 0) continue;
            int rows = n.block_size(c), k = P.m.block_size(b);
            const auto& bn = P.sp.block_nodes[b];
            // Phi_b: rows x k
            std::vector<std::uint64_t> ph(std::size_t(rows) * k, 0);
            for (int l = 0; l < k; ++l) {
                const auto& x = phi[bn[l]];
                int w = width[bn[l]], off = w ? P.offset[origin[bn[l]]] : 0;
                for (int i = 0; i < rows && w; ++i) {
                    std::uint64_t s = 0;
                    const std::uint32_t* xr = &x[std::size_t(i) * w];
                    for (int j = 0; j < w; ++j)
                        if (xr[j] && u[off + j]) s = (s + std::uint64_t(xr[j]) * u[off + j]) % f.p;
                    ph[std::size_t(i) * k + l] = s;
                }
            }
            const ModMat& bi = binv[b];
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < k; ++j) {
                    std::uint64_t acc = 0;
                    for (int l = 0; l < k; ++l) acc = (acc + ph[std::size_t(i) * k + l] * bi.a[std::size_t(l) * k + j]) % f.p;
                    flat[P.map_offset[b] + std::size_t(i) * k + j] = std::uint32_t(acc);
                }
        }
        res.maps.push_back(std::move(flat));
    }
    return res;
}

// ---- exact certification -------------------------------------------------------------------

// f * g for a sparse g
Mat times_sparse(const Mat& f, const Mat& g) {
    std::vector<std::vector<std::pair<int, const Scalar*>>> rows(g.rows());
    for (int k = 0; k < g.rows(); ++k)
        for (int j = 0; j < g.cols(); ++j)
            if (!g(k, j).is_zero()) rows[k].emplace_back(j, &g(k, j));
    Mat out(f.rows(), g.cols());
    for (int i = 0; i < f.rows(); ++i)
        for (int k = 0; k < f.cols(); ++k) {
            const Scalar& x = f(i, k);
            if (x.is_zero()) continue;
            for (const auto& [j, y] : rows[k]) out(i, j) += x * *y;
        }
    return out;
}

bool commutes_with(const GModule& m, const GModule& n, const HomMap& f, Gen h) {
    for (int b = 0; b < m.num_blocks(); ++b) {
        const BlockAction& mb = m.block_action(h, b);
        int c = n.find_block(m.block(b).key);
        Mat lhs;  // n_h F_b
        if (c >= 0) {
            const BlockAction& nb = n.block_action(h, c);
            if (nb.target >= 0) lhs = nb.m * f.blocks[b];
        }
        Mat rhs;  // F_t m_h
        if (mb.target >= 0 && f.blocks[mb.target].rows() > 0) rhs = times_sparse(f.blocks[mb.target], mb.m);
        bool lz = lhs.rows() == 0 || lhs.is_zero(), rz = rhs.rows() == 0 || rhs.is_zero();
        if (lz && rz) continue;
        if (lz != rz || !(lhs == rhs)) return false;
    }
    return true;
}

}  // namespace

HomBasis hom_space(const GModule& m, const GModule& n) {
    HomBasis out;
    if (m.dim() == 0 || n.dim() == 0) return out;
    Spin sp = spin(m);
    Problem P{m, n, sp, {}, {}, 0, {}, {}, 0};
    for (int b = 0; b < m.num_blocks(); ++b) P.nblock.push_back(n.find_block(m.block(b).key));
    P.offset.assign(sp.nodes.size(), -1);
    for (std::size_t q = 0; q < sp.nodes.size(); ++q)
        if (sp.nodes[q].parent < 0 && P.nblock[sp.nodes[q].block] >= 0) {
            P.offset[q] = P.unknowns;
            P.unknowns += n.block_size(P.nblock[sp.nodes[q].block]);
        }
    if (P.unknowns == 0) return out;
    P.binv.resize(m.num_blocks());
    P.map_offset.assign(m.num_blocks(), 0);
    for (int b = 0; b < m.num_blocks(); ++b) {
        P.map_offset[b] = P.map_size;
        if (P.nblock[b] < 0) continue;
        std::vector<Vec> cols;
        for (int q : sp.block_nodes[b]) cols.push_back(sp.nodes[q].v);
        P.binv[b] = inverse(Mat::from_columns(m.block_size(b), cols));
        P.map_size += std::size_t(n.block_size(P.nblock[b])) * m.block_size(b);
    }

    std::vector<int> best_pivots;
    // residues of the a and b parts of every map entry, one set per accepted prime
    struct Residues {
        std::uint32_t p;
        std::vector<Row> a, b;
    };
    std::vector<Residues> acc;
    const int kMaxPrimes = 64;
    for (int k = 0; k < kMaxPrimes; ++k) {
        const modp::Field& f = modp::field(k);
        std::uint32_t w2 = f.mul(f.w, f.w);
        auto fut = std::async(std::launch::async, [&] { return solve_mod(P, f, w2); });
        ModResult r1 = solve_mod(P, f, f.w);
        ModResult r2 = fut.get();
        if (!r1.ok || !r2.ok || r1.pivots != r2.pivots) continue;
        if (acc.empty() || r1.pivots != best_pivots) {
            bool better = acc.empty() || r1.pivots.size() > best_pivots.size() ||
                          (r1.pivots.size() == best_pivots.size() && r1.pivots < best_pivots);
            if (!better) continue;
            best_pivots = r1.pivots;
            acc.clear();
        }
        if (r1.null.empty()) return out;
        Residues res{f.p, {}, {}};
        for (std::size_t i = 0; i < r1.maps.size(); ++i) {
            Row ra(P.map_size), rb(P.map_size);
            for (std::size_t j = 0; j < P.map_size; ++j)
                std::tie(ra[j], rb[j]) = modp::unembed(f, r1.maps[i][j], r2.maps[i][j]);
            res.a.push_back(std::move(ra));
            res.b.push_back(std::move(rb));
        }
        acc.push_back(std::move(res));

        auto lift = [&](bool part_b, std::size_t i, std::size_t j) -> std::optional<Rational> {
            if (acc.size() == 1) {
                std::uint32_t r = part_b ? acc[0].b[i][j] : acc[0].a[i][j];
                return modp::rational_reconstruct_small(r, acc[0].p);
            }
            mpz_class v = 0, mod = 1;
            for (const auto& rs : acc) modp::crt_accumulate(v, mod, part_b ? rs.b[i][j] : rs.a[i][j], rs.p);
            return modp::rational_reconstruct(v, mod);
        };
        std::vector<HomMap> maps;
        bool ok = true;
        for (std::size_t i = 0; i < r1.maps.size() && ok; ++i) {
            HomMap fm = hom_zero(m, n);
            for (int b = 0; b < m.num_blocks() && ok; ++b) {
                Mat& x = fm.blocks[b];
                for (int r = 0; r < x.rows() && ok; ++r)
                    for (int c = 0; c < x.cols() && ok; ++c) {
                        std::size_t j = P.map_offset[b] + std::size_t(r) * x.cols() + c;
                        bool za = true, zb = true;
                        for (const auto& rs : acc) {
                            za = za && rs.a[i][j] == 0;
                            zb = zb && rs.b[i][j] == 0;
                        }
                        if (za && zb) continue;
                        auto ra = za ? std::optional<Rational>(Rational()) : lift(false, i, j);
                        auto rb = zb ? std::optional<Rational>(Rational()) : lift(true, i, j);
                        if (!ra || !rb) ok = false;
                        else x(r, c) = Scalar(*ra, *rb);
                    }
            }
            for (Gen h : kGeneratingGens)
                if (ok && !commutes_with(m, n, fm, h)) ok = false;
            maps.push_back(std::move(fm));
        }
        if (!ok) continue;
        // exact intertwiners, independent modulo p, as many as the modular nullity: a basis
        out.maps = std::move(maps);
        return out;
    }
    throw std::runtime_error("hom_space: modular reconstruction did not stabilise");
}

HomMap hom_zero(const GModule& m, const GModule& n) {
    HomMap f;
    for (int b = 0; b < m.num_blocks(); ++b)
        f.blocks.emplace_back(target_rows(n, m.block(b).key), m.block_size(b));
    return f;
}

HomMap hom_identity(const GModule& m) {
    HomMap f;
    for (int b = 0; b < m.num_blocks(); ++b) f.blocks.push_back(Mat::identity(m.block_size(b)));
    return f;
}

HomMap hom_add(const HomMap& f, const HomMap& g) {
    HomMap h = f;
    for (std::size_t b = 0; b < h.blocks.size(); ++b) h.blocks[b] = h.blocks[b] + g.blocks[b];
    return h;
}

HomMap hom_scaled(const HomMap& f, const Scalar& s) {
    HomMap h = f;
    for (auto& b : h.blocks) b = b.scaled(s);
    return h;
}

HomMap hom_combination(const std::vector<HomMap>& maps, const Vec& coeffs) {
    if (maps.empty()) throw std::invalid_argument("hom_combination of an empty list");
    HomMap h = hom_scaled(maps[0], coeffs[0]);
    for (std::size_t i = 1; i < maps.size(); ++i)
        if (!coeffs[i].is_zero()) h = hom_add(h, hom_scaled(maps[i], coeffs[i]));
    return h;
}

HomMap hom_compose(const GModule& a, const GModule& b, const HomMap& g, const HomMap& f) {
    HomMap h;
    for (int i = 0; i < a.num_blocks(); ++i) {
        int bb = b.find_block(a.block(i).key);
        if (bb < 0) {
            h.blocks.emplace_back(0, a.block_size(i));
            continue;
        }
        h.blocks.push_back(g.blocks[bb] * f.blocks[i]);
    }
    return h;
}

HVec hom_apply(const GModule& m, const GModule& n, const HomMap& f, const HVec& v) {
    int c = n.find_block(m.block(v.block).key);
    if (c < 0) return {-1, {}};
    return {c, f.blocks[v.block].apply(v.v)};
}

Mat hom_dense(const GModule& m, const GModule& n, const HomMap& f) {
    Mat out(n.dim(), m.dim());
    for (int b = 0; b < m.num_blocks(); ++b) {
        int c = n.find_block(m.block(b).key);
        if (c < 0) continue;
        const auto& src = m.block(b).members;
        const auto& dst = n.block(c).members;
        for (std::size_t i = 0; i < dst.size(); ++i)
            for (std::size_t j = 0; j < src.size(); ++j) out(dst[i], src[j]) = f.blocks[b](int(i), int(j));
    }
    return out;
}

HomMap hom_from_dense(const GModule& m, const GModule& n, const Mat& d) {
    HomMap f = hom_zero(m, n);
    for (int b = 0; b < m.num_blocks(); ++b) {
        int c = n.find_block(m.block(b).key);
        if (c < 0) continue;
        const auto& src = m.block(b).members;
        const auto& dst = n.block(c).members;
        for (std::size_t i = 0; i < dst.size(); ++i)
            for (std::size_t j = 0; j < src.size(); ++j) f.blocks[b](int(i), int(j)) = d(dst[i], src[j]);
    }
    return f;
}

bool is_intertwiner(const GModule& m, const GModule& n, const HomMap& f) {
    for (Gen h : kAllGens)
        if (!commutes_with(m, n, f, h)) return false;
    return true;
}

namespace {

// full rank of the image under zeta -> w mod p implies full rank over Q(zeta)
bool full_rank_mod_p(const Mat& x) {
    const auto& fl = modp::field(0);
    int n = x.rows();
    std::vector<std::vector<std::uint32_t>> a(n, std::vector<std::uint32_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto v = fl.embed(x(i, j), fl.w);
            if (!v) return false;
            a[i][j] = *v;
        }
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[c]);
        std::uint32_t inv = fl.inv(a[c][c]);
        for (int r = c + 1; r < n; ++r) {
            if (!a[r][c]) continue;
            std::uint32_t k = fl.mul(a[r][c], inv);
            for (int j = c; j < n; ++j) a[r][j] = fl.sub(a[r][j], fl.mul(k, a[c][j]));
        }
    }
    return true;
}

}  // namespace

bool hom_is_iso(const GModule& m, const GModule& n, const HomMap& f) {
    if (m.dim() != n.dim()) return false;
    for (int b = 0; b < m.num_blocks(); ++b) {
        const Mat& x = f.blocks[b];
        if (x.rows() != x.cols()) return false;
        if (!full_rank_mod_p(x) && rank(x) != x.rows()) return false;
    }
    return m.num_blocks() == n.num_blocks();
}

HomMap hom_inverse(const GModule& m, const GModule& n, const HomMap& f) {
    if (!hom_is_iso(m, n, f)) throw std::invalid_argument("hom_inverse: not an isomorphism");
    HomMap g;
    for (int c = 0; c < n.num_blocks(); ++c) {
        int b = m.find_block(n.block(c).key);
        g.blocks.push_back(inverse(f.blocks[b]));
    }
    return g;
}

GradedSubspace hom_image(const GModule& m, const GModule& n, const HomMap& f) {
    GradedSubspace s = empty_subspace(n);
    for (int b = 0; b < m.num_blocks(); ++b) {
        int c = n.find_block(m.block(b).key);
        if (c < 0) continue;
        const Mat& x = f.blocks[b];
        for (int j = 0; j < x.cols(); ++j) s.parts[c].insert(x.col(j));
    }
    return s;
}

GradedSubspace hom_kernel(const GModule& m, [[maybe_unused]] const GModule& n, const HomMap& f) {
    GradedSubspace s = empty_subspace(m);
    for (int b = 0; b < m.num_blocks(); ++b) {
        const Mat& x = f.blocks[b];
        if (x.rows() == 0) {
            s.parts[b] = Subspace::whole(m.block_size(b));
            continue;
        }
        Mat k = kernel(x);
        for (int j = 0; j < k.cols(); ++j) s.parts[b].insert(k.col(j));
    }
    return s;
}

}  // namespace fkd
