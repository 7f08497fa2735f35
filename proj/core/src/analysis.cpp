#include "fkd/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "fkd/catalog.hpp"

namespace fkd {

// ---- simple decompositions ---------------------------------------------------------------

long SimpleDecomposition::mult(WeightLabel l, int shift) const {
    auto it = terms.find({l, shift});
    return it == terms.end() ? 0 : it->second;
}

long SimpleDecomposition::total(WeightLabel l) const {
    long s = 0;
    for (const auto& [k, v] : terms)
        if (k.first == l) s += v;
    return s;
}

GradedChar SimpleDecomposition::character() const {
    GradedChar c;
    for (const auto& [k, v] : terms) c = c + char_of_simple(k.first).shifted(k.second).scaled(Laurent(v));
    return c;
}

namespace {

std::string superscript(int k) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s = k < 0 ? "⁻" : "";
    for (char c : std::to_string(std::abs(k))) s += digits[c - '0'];
    return s;
}

// labels grouped with their Laurent multiplicity, ordered by top shift then label
std::vector<std::pair<WeightLabel, Laurent>> grouped(const SimpleDecomposition& d) {
    std::map<WeightLabel, Laurent> by;
    for (const auto& [k, v] : d.terms) by[k.first] = by[k.first] + Laurent::mono(k.second, v);
    std::vector<std::pair<WeightLabel, Laurent>> out(by.begin(), by.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.second.coeffs().rbegin()->first > b.second.coeffs().rbegin()->first;
    });
    return out;
}

std::string pretty_laurent(const Laurent& p) {
    std::string s;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        auto [e, c] = *it;
        if (!s.empty()) s += c < 0 ? "−" : "+";
        else if (c < 0) s += "−";
        long a = std::labs(c);
        if (e == 0) s += std::to_string(a);
        else {
            if (a != 1) s += std::to_string(a);
            s += "t" + (e == 1 ? std::string() : superscript(e));
        }
    }
    return s;
}

}  // namespace

std::string SimpleDecomposition::pretty() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [l, p] : grouped(*this)) {
        if (!s.empty()) s += " ⊕ ";
        std::string name = "L" + std::string(label_pretty(l));
        if (l == WeightLabel::eps) name = "L(ε)";
        if (p == Laurent(1)) s += name;
        else if (p.coeffs().size() == 1) s += pretty_laurent(p) + name;
        else s += "(" + pretty_laurent(p) + ")" + name;
    }
    return s;
}

std::string SimpleDecomposition::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [l, p] : grouped(*this))
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
            if (!s.empty()) s += " + ";
            if (it->second != 1) s += std::to_string(it->second) + " ";
            if (it->first != 0) s += "t^" + std::to_string(it->first) + " ";
            s += "L(" + std::string(label_name(l)) + ")";
        }
    return s;
}

SimpleDecomposition decompose_character(const GradedChar& c) {
    SimpleDecomposition out;
    GradedChar rest = c;
    while (!rest.is_zero()) {
        // the top term of ch L(l)[z] is l in degree z
        const auto& [key, coeff] = *rest.terms().begin();
        auto [z, li] = key;
        WeightLabel l = kAllLabels[li];
        if (coeff < 0) throw std::invalid_argument("character is not a nonnegative combination of simples");
        out.terms[{l, z}] += coeff;
        rest = rest - char_of_simple(l).shifted(z).scaled(Laurent(coeff));
    }
    return out;
}

// ---- socles and radicals -----------------------------------------------------------------

namespace {

GradedChar subspace_character(const GModule& m, const GradedSubspace& s) {
    return restrict_to(m, s).character();
}

int dual_block_index(const GModule& m, int b) {
    // the blocks of dual(m) are the keys (-z, g^-1), in BlockKey order
    std::vector<BlockKey> keys;
    for (const auto& blk : m.blocks()) keys.push_back({-blk.key.z, Perm::from_index(blk.key.s3).inv().index()});
    BlockKey k = keys[b];
    std::sort(keys.begin(), keys.end());
    return int(std::lower_bound(keys.begin(), keys.end(), k) - keys.begin());
}

}  // namespace

GradedSubspace annihilator_in(const GModule& m, const GradedSubspace& in_dual) {
    GradedSubspace out = empty_subspace(m);
    for (int b = 0; b < m.num_blocks(); ++b) out.parts[b] = annihilator(in_dual.parts[dual_block_index(m, b)]);
    return out;
}

GradedSubspace socle(const GModule& m) {
    GradedSubspace s = empty_subspace(m);
    if (m.dim() == 0) return s;
    GradedChar ch = m.character();
    for (WeightLabel l : kAllLabels) {
        const GModule& L = catalog::simple(l);
        GradedChar cl = L.character();
        for (int i = m.min_z() - L.min_z(); i <= m.max_z() - L.max_z(); ++i) {
            if (!(ch - cl.shifted(i)).nonnegative()) continue;
            GModule Li = shift(L, i);
            for (const HomMap& f : hom_space(Li, m).maps) s.add(hom_image(Li, m, f));
        }
    }
    return s;
}

Filtration socle_filtration(const GModule& m) {
    Filtration f;
    GradedSubspace cur = empty_subspace(m);
    f.steps.push_back(cur);
    while (cur.dim() < m.dim()) {
        GModule q = quotient(m, cur);
        GradedSubspace s = socle(q);
        if (s.dim() == 0) throw std::logic_error("socle of a nonzero module is zero");
        f.layers.push_back(decompose_character(subspace_character(q, s)));
        cur = preimage(m, cur, s);
        f.steps.push_back(cur);
    }
    return f;
}

GradedSubspace radical(const GModule& m) {
    GModule d = dual(m);
    return annihilator_in(m, socle(d));
}

Filtration radical_filtration(const GModule& m) {
    GModule d = dual(m);
    Filtration sf = socle_filtration(d);
    Filtration f;
    for (const auto& st : sf.steps) f.steps.push_back(annihilator_in(m, st));
    for (std::size_t i = 1; i < f.steps.size(); ++i) {
        GradedChar upper = subspace_character(m, f.steps[i - 1]);
        GradedChar lower = subspace_character(m, f.steps[i]);
        f.layers.push_back(decompose_character(upper - lower));
    }
    return f;
}

GModule head(const GModule& m) { return quotient(m, radical(m)); }

std::string Filtration::render(const std::string& name, bool socle_side) const {
    std::ostringstream os;
    std::string op = socle_side ? "soc" : "rad";
    for (int i = 0; i < length(); ++i) {
        if (i) os << "\n";
        auto pw = [&](int k) { return op + (k == 1 ? std::string() : superscript(k)) + name; };
        if (socle_side) os << (i == 0 ? pw(1) : pw(i + 1) + "/" + pw(i));
        else os << (i == 0 ? name + "/" + pw(1) : pw(i) + "/" + pw(i + 1));
        os << " ≃ " << layers[i].pretty();
    }
    return os.str();
}

// ---- brute-force socle through the image algebra -----------------------------------------

GradedSubspace socle_bruteforce(const GModule& m) {
    // homogeneous elements of the image A of D in End(m): maps from the s3-degree g part
    // to the s3-degree h part shifting z by d, stored as full matrices
    const int n = m.dim();
    struct Comp {
        std::vector<int> rows, cols;  // global indices
        Subspace span;
        std::vector<Mat> elems;
    };
    std::map<std::tuple<int, int, int>, Comp> comps;
    auto comp_of = [&](int d, int g, int h) -> Comp& {
        auto key = std::make_tuple(d, g, h);
        auto it = comps.find(key);
        if (it != comps.end()) return it->second;
        Comp c;
        for (int i = 0; i < n; ++i) {
            if (m.basis()[i].s3.index() == h) c.rows.push_back(i);
            if (m.basis()[i].s3.index() == g) c.cols.push_back(i);
        }
        c.span = Subspace(int(c.rows.size() * c.cols.size()));
        return comps.emplace(key, std::move(c)).first->second;
    };
    auto flatten = [&](const Comp& c, const Mat& a) {
        Vec v;
        v.reserve(c.rows.size() * c.cols.size());
        for (int r : c.rows)
            for (int col : c.cols) v.push_back(a(r, col));
        return v;
    };
    struct Item {
        int d, g, h;
        Mat a;
    };
    std::vector<Item> queue;
    for (const Perm& g : Perm::all()) {
        Mat a(n, n);
        bool any = false;
        for (int i = 0; i < n; ++i)
            if (m.basis()[i].s3 == g) {
                a(i, i) = Scalar(1);
                any = true;
            }
        if (!any) continue;
        Comp& c = comp_of(0, g.index(), g.index());
        if (c.span.insert(flatten(c, a))) {
            c.elems.push_back(a);
            queue.push_back({0, g.index(), g.index(), std::move(a)});
        }
    }
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (Gen gen : kAllGens) {
            const SparseMat& s = m.action(gen);
            const Item& it = queue[q];
            Mat prod(n, n);
            bool nz = false;
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const Scalar& x = it.a(k, j);
                    if (x.is_zero()) continue;
                    for (const auto& [i, v] : s.column(k)) {
                        prod(i, j) += v * x;
                        nz = true;
                    }
                }
            if (!nz || prod.is_zero()) continue;
            Perm t = gen_transposition(gen);
            int kind = gen_kind(gen);
            Perm h = Perm::from_index(it.h);
            Perm nh = kind == 0 ? t * h * t : t * h;
            int nd = it.d + (kind == 1 ? -1 : kind == 2 ? 1 : 0);
            Comp& c = comp_of(nd, it.g, nh.index());
            if (c.span.insert(flatten(c, prod))) {
                c.elems.push_back(prod);
                queue.push_back({nd, it.g, nh.index(), std::move(prod)});
            }
        }
    // rad A in each component: elements pairing to zero with the opposite component
    std::vector<Mat> rad;
    for (auto& [key, c] : comps) {
        auto [d, g, h] = key;
        auto op = comps.find(std::make_tuple(-d, h, g));
        int r = int(c.elems.size());
        int s = op == comps.end() ? 0 : int(op->second.elems.size());
        Mat gram(s, r);
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < s; ++i) {
                const Mat& a = c.elems[j];
                const Mat& b = op->second.elems[i];
                Scalar tr;
                for (int x : c.rows)
                    for (int y : c.cols)
                        if (!a(x, y).is_zero() && !b(y, x).is_zero()) tr += a(x, y) * b(y, x);
                gram(i, j) = tr;
            }
        Mat ker = s == 0 ? Mat::identity(r) : kernel(gram);
        for (int k = 0; k < ker.cols(); ++k) {
            Mat a(n, n);
            for (int j = 0; j < r; ++j)
                if (!ker(j, k).is_zero()) a = a + c.elems[j].scaled(ker(j, k));
            rad.push_back(std::move(a));
        }
    }
    // soc = common kernel of rad A, computed blockwise
    GradedSubspace out = empty_subspace(m);
    for (int b = 0; b < m.num_blocks(); ++b) {
        const auto& mem = m.block(b).members;
        std::vector<Vec> rows;
        for (const Mat& a : rad)
            for (int i = 0; i < n; ++i) {
                Vec row;
                bool nz = false;
                for (int j : mem) {
                    row.push_back(a(i, j));
                    nz = nz || !a(i, j).is_zero();
                }
                if (nz) rows.push_back(std::move(row));
            }
        if (rows.empty()) {
            out.parts[b] = Subspace::whole(int(mem.size()));
            continue;
        }
        Mat k = kernel(Mat::from_rows(int(mem.size()), rows));
        for (int j = 0; j < k.cols(); ++j) out.parts[b].insert(k.col(j));
    }
    return out;
}

// ---- simplicity -------------------------------------------------------------------------

bool is_simple(const GModule& m) {
    if (m.dim() == 0) return false;
    // every nonzero submodule meets the common kernel of the x's
    GradedSubspace k = empty_subspace(m);
    for (int b = 0; b < m.num_blocks(); ++b) {
        std::vector<Vec> rows;
        for (Gen h : {Gen::x12, Gen::x13, Gen::x23}) {
            const BlockAction& ba = m.block_action(h, b);
            for (int i = 0; i < ba.m.rows(); ++i) rows.push_back(ba.m.row(i));
        }
        if (rows.empty()) {
            k.parts[b] = Subspace::whole(m.block_size(b));
            continue;
        }
        Mat ker = kernel(Mat::from_rows(m.block_size(b), rows));
        for (int j = 0; j < ker.cols(); ++j) k.parts[b].insert(ker.col(j));
    }
    // the kernel is stable under the group; it must be a single weight
    GModule::Actions group_only;
    for (int g = 0; g < 9; ++g) group_only[g] = g < 3 ? m.action(kAllGens[g]) : SparseMat(m.dim(), m.dim());
    GModule m0(m.basis(), group_only);
    GradedChar ck = restrict_to(m0, k).character();
    if (ck.mass() != 1) return false;
    return closure(m, k).dim() == m.dim();
}

// ---- polynomials over Q(zeta) -------------------------------------------------------------

namespace {

using Poly = std::vector<Scalar>;  // coefficient of x^i at index i

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly monic(Poly p) {
    trim(p);
    if (p.empty()) return p;
    Scalar inv = p.back().inv();
    for (auto& c : p) c *= inv;
    return p;
}

std::pair<Poly, Poly> divmod(Poly a, Poly b) {
    trim(a);
    trim(b);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    Scalar lead = b.back().inv();
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t sh = a.size() - b.size();
        Scalar c = a.back() * lead;
        q[sh] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    return {q, a};
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

Poly lcm(const Poly& a, const Poly& b) { return monic(divmod(mul(a, b), gcd(a, b)).first); }

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Scalar(std::int64_t(i)));
    trim(d);
    return d;
}

Scalar eval(const Poly& p, const Scalar& x) {
    Scalar r;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

Vec eval_on(const Poly& p, const Mat& f, const Vec& v) {
    Vec r(v.size());
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        r = f.apply(r);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += *it * v[i];
    }
    return r;
}

// minimal polynomial of a square matrix, as the lcm of the local minimal polynomials of the unit vectors
Poly minimal_polynomial(const Mat& f) {
    int n = f.rows();
    Poly mp{Scalar(1)};
    for (int j = 0; j < n; ++j) {
        Vec e(n);
        e[j] = Scalar(1);
        if (is_zero(eval_on(mp, f, e))) continue;
        // Krylov sequence with tracked echelon
        std::vector<Vec> rows, comb;
        std::vector<int> piv;
        Vec v = e;
        for (int d = 0;; ++d) {
            Vec w = v;
            Vec c(d + 1);
            c[d] = Scalar(1);
            for (std::size_t k = 0; k < rows.size(); ++k) {
                Scalar x = w[piv[k]];
                if (x.is_zero()) continue;
                for (int i = 0; i < n; ++i) w[i] -= x * rows[k][i];
                for (std::size_t i = 0; i < comb[k].size(); ++i) c[i] -= x * comb[k][i];
            }
            if (is_zero(w)) {
                // c . (v_0..v_d) = 0
                mp = lcm(mp, monic(c));
                break;
            }
            int p = 0;
            while (w[p].is_zero()) ++p;
            Scalar inv = w[p].inv();
            for (auto& x : w) x *= inv;
            for (auto& x : c) x *= inv;
            rows.push_back(std::move(w));
            comb.push_back(std::move(c));
            piv.push_back(p);
            v = f.apply(v);
        }
    }
    return mp;
}

// best rational approximation with bounded denominator, if close enough
std::optional<Rational> recognize(double x) {
    const long kMaxDen = 100000;
    double a = x;
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int it = 0; it < 40; ++it) {
        double fl = std::floor(a);
        if (std::abs(fl) > 1e12) break;
        long ai = long(fl);
        long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > kMaxDen) break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        if (std::abs(double(h1) / double(k1) - x) < 1e-9 * std::max(1.0, std::abs(x))) return Rational(h1) / Rational(k1);
        double frac = a - fl;
        if (frac < 1e-15) break;
        a = 1.0 / frac;
    }
    if (k1 != 0 && std::abs(double(h1) / double(k1) - x) < 1e-9 * std::max(1.0, std::abs(x))) return Rational(h1) / Rational(k1);
    return std::nullopt;
}

// roots in Q(zeta) of a squarefree polynomial, found numerically and checked exactly
std::vector<Scalar> roots_in_field(const Poly& sq) {
    std::vector<Scalar> out;
    int d = int(sq.size()) - 1;
    if (d < 1) return out;
    if (eval(sq, Scalar(0)).is_zero()) out.push_back(Scalar(0));
    const std::complex<double> z(-0.5, std::sqrt(3.0) / 2);
    auto cx = [&](const Scalar& s) { return s.a().to_double() + s.b().to_double() * z; };
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -cx(sq[i]);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    for (int i = 0; i < d; ++i) {
        std::complex<double> r = es.eigenvalues()[i];
        double b = 2 * r.imag() / std::sqrt(3.0);
        double a = r.real() + b / 2;
        auto ra = recognize(a), rb = recognize(b);
        if (!ra || !rb) continue;
        Scalar s(*ra, *rb);
        if (std::find(out.begin(), out.end(), s) != out.end()) continue;
        if (eval(sq, s).is_zero()) out.push_back(s);
    }
    return out;
}

// ---- endomorphism algebra helpers ----------------------------------------------------------

Scalar trace_of_product(const HomMap& f, const HomMap& g) {
    Scalar t;
    for (std::size_t b = 0; b < f.blocks.size(); ++b) {
        const Mat& x = f.blocks[b];
        const Mat& y = g.blocks[b];
        for (int i = 0; i < x.rows(); ++i)
            for (int j = 0; j < x.cols(); ++j)
                if (!x(i, j).is_zero() && !y(j, i).is_zero()) t += x(i, j) * y(j, i);
    }
    return t;
}

int trace_form_rank(const HomBasis& e) {
    int k = e.dim();
    Mat g(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) g(i, j) = g(j, i) = trace_of_product(e.maps[i], e.maps[j]);
    return rank(g);
}

// split x = ker p(f) + im p(f) for the first eigenvalue of f in Q(zeta) that is not its only one
std::optional<std::pair<GradedSubspace, GradedSubspace>> split_by(const GModule& x, const HomMap& f) {
    Poly mu;
    {
        Poly acc{Scalar(1)};
        for (const Mat& b : f.blocks)
            if (b.rows() > 0) acc = lcm(acc, minimal_polynomial(b));
        mu = acc;
    }
    if (mu.size() <= 2) return std::nullopt;  // f is a scalar
    Poly sq = monic(divmod(mu, gcd(mu, derivative(mu))).first);
    if (sq.size() <= 2) return std::nullopt;  // a single eigenvalue: f - c is nilpotent
    for (const Scalar& lam : roots_in_field(sq)) {
        Poly lin{-lam, Scalar(1)};
        int e = 0;
        Poly rest = mu;
        while (true) {
            auto [q, r] = divmod(rest, lin);
            if (!r.empty()) break;
            rest = q;
            ++e;
        }
        if (e == 0 || rest.size() <= 1) continue;
        GradedSubspace ker = empty_subspace(x), im = empty_subspace(x);
        for (int b = 0; b < x.num_blocks(); ++b) {
            const Mat& fb = f.blocks[b];
            Mat g = fb - Mat::identity(fb.rows()).scaled(lam);
            Mat p = power(g, (unsigned long)e);
            Mat k = kernel(p);
            for (int j = 0; j < k.cols(); ++j) ker.parts[b].insert(k.col(j));
            for (int j = 0; j < p.cols(); ++j) im.parts[b].insert(p.col(j));
        }
        if (ker.dim() == 0 || im.dim() == 0) continue;
        return std::make_pair(std::move(ker), std::move(im));
    }
    return std::nullopt;
}

std::optional<std::pair<GradedSubspace, GradedSubspace>> find_split(const GModule& x, const HomBasis& e) {
    const int k = e.dim();
    for (int i = 0; i < k; ++i)
        if (auto s = split_by(x, e.maps[i])) return s;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (auto s = split_by(x, hom_compose(x, x, e.maps[i], e.maps[j]))) return s;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (auto s = split_by(x, hom_add(e.maps[i], e.maps[j]))) return s;
    std::mt19937 rng(20240601u);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int t = 0; t < 64; ++t) {
        Vec c(k);
        for (auto& v : c) v = Scalar(coef(rng), coef(rng));
        if (auto s = split_by(x, hom_combination(e.maps, c))) return s;
    }
    return std::nullopt;
}

// subspace of x (in x coordinates) pushed into m, x = restrict_to(m, part)
GradedSubspace push_forward(const GModule& m, const GradedSubspace& part, const GModule& x, const GradedSubspace& s) {
    GradedSubspace out = empty_subspace(m);
    for (int bx = 0; bx < x.num_blocks(); ++bx) {
        int b = m.find_block(x.block(bx).key);
        const auto& rows = part.parts[b].basis();
        for (const Vec& w : s.parts[bx].basis()) {
            Vec v(m.block_size(b));
            for (std::size_t r = 0; r < w.size(); ++r)
                if (!w[r].is_zero())
                    for (int i = 0; i < m.block_size(b); ++i) v[i] += w[r] * rows[r][i];
            out.parts[b].insert(std::move(v));
        }
    }
    return out;
}

}  // namespace

bool is_indecomposable(const GModule& m) {
    if (m.dim() == 0) return false;
    HomBasis e = hom_space(m, m);
    return e.dim() == 1 || trace_form_rank(e) == 1;
}

Decomposition decompose(const GModule& m) {
    Decomposition out;
    if (m.dim() == 0) {
        out.certified = true;
        return out;
    }
    std::vector<GradedSubspace> todo{full_subspace(m)}, done;
    while (!todo.empty()) {
        GradedSubspace part = std::move(todo.back());
        todo.pop_back();
        GModule x = restrict_to(m, part);
        HomBasis e = hom_space(x, x);
        if (e.dim() == 1 || trace_form_rank(e) == 1) {
            done.push_back(std::move(part));
            continue;
        }
        auto s = find_split(x, e);
        if (!s) throw std::runtime_error("decompose: no splitting endomorphism found");
        todo.push_back(push_forward(m, part, x, s->second));
        todo.push_back(push_forward(m, part, x, s->first));
    }
    // deterministic order: top degree, then character
    std::vector<std::pair<GradedChar, GradedSubspace>> parts;
    for (auto& p : done) parts.emplace_back(restrict_to(m, p).character(), std::move(p));
    std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        if (a.first.max_degree() != b.first.max_degree()) return a.first.max_degree() > b.first.max_degree();
        if (a.first.dim() != b.first.dim()) return a.first.dim() < b.first.dim();
        return a.first.str() < b.first.str();
    });
    bool ok = true;
    // inclusions, then projections from the inverse of the assembled basis
    std::vector<std::vector<int>> offs(m.num_blocks());
    std::vector<Mat> assembled_inv(m.num_blocks());
    for (int b = 0; b < m.num_blocks(); ++b) {
        std::vector<Vec> cols;
        for (auto& [c, p] : parts) {
            offs[b].push_back(int(cols.size()));
            for (const Vec& v : p.parts[b].basis()) cols.push_back(v);
        }
        offs[b].push_back(int(cols.size()));
        if (int(cols.size()) != m.block_size(b)) throw std::logic_error("decompose: parts do not span");
        assembled_inv[b] = inverse(Mat::from_columns(m.block_size(b), cols));
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Summand s{restrict_to(m, parts[i].second), {}, {}};
        s.inclusion = hom_zero(s.module, m);
        for (int bx = 0; bx < s.module.num_blocks(); ++bx) {
            int b = m.find_block(s.module.block(bx).key);
            const auto& rows = parts[i].second.parts[b].basis();
            s.inclusion.blocks[bx] = Mat::from_columns(m.block_size(b), rows);
        }
        s.projection = hom_zero(m, s.module);
        for (int b = 0; b < m.num_blocks(); ++b) {
            Mat& pb = s.projection.blocks[b];
            for (int r = 0; r < pb.rows(); ++r)
                for (int c = 0; c < pb.cols(); ++c) pb(r, c) = assembled_inv[b](offs[b][i] + r, c);
        }
        ok = ok && is_intertwiner(s.module, m, s.inclusion) && is_intertwiner(m, s.module, s.projection);
        out.summands.push_back(std::move(s));
    }
    out.certified = ok;
    return out;
}

// ---- isomorphism -----------------------------------------------------------------------------

std::optional<HomMap> iso_indecomposable(const GModule& x, const GModule& y) {
    if (x.dim() != y.dim() || !(x.character() == y.character())) return std::nullopt;
    HomBasis f = hom_space(x, y);
    if (f.dim() == 0) return std::nullopt;
    HomBasis g = hom_space(y, x);
    // in a local End(x), g o f is a unit iff its trace is nonzero
    for (const auto& fi : f.maps)
        for (const auto& gj : g.maps) {
            Scalar t;
            for (int b = 0; b < x.num_blocks(); ++b) {
                int c = y.find_block(x.block(b).key);
                if (c < 0) continue;
                const Mat& F = fi.blocks[b];
                const Mat& G = gj.blocks[c];
                for (int i = 0; i < G.rows(); ++i)
                    for (int k = 0; k < G.cols(); ++k)
                        if (!G(i, k).is_zero() && !F(k, i).is_zero()) t += G(i, k) * F(k, i);
            }
            if (!t.is_zero()) return fi;
        }
    return std::nullopt;
}

IsoResult iso_test(const GModule& m, const GModule& n, const Decomposition& dm, const Decomposition& dn) {
    IsoResult r;
    if (dm.summands.size() != dn.summands.size()) {
        r.reason = "different numbers of indecomposable summands";
        return r;
    }
    std::vector<bool> used(dn.summands.size(), false);
    HomMap total = hom_zero(m, n);
    for (std::size_t i = 0; i < dm.summands.size(); ++i) {
        const Summand& xs = dm.summands[i];
        bool found = false;
        for (std::size_t j = 0; j < dn.summands.size() && !found; ++j) {
            if (used[j]) continue;
            const Summand& ys = dn.summands[j];
            auto phi = iso_indecomposable(xs.module, ys.module);
            if (!phi) continue;
            HomMap h1 = hom_compose(xs.module, ys.module, ys.inclusion, *phi);
            HomMap h2 = hom_compose(m, xs.module, h1, xs.projection);
            total = hom_add(total, h2);
            used[j] = true;
            found = true;
        }
        if (!found) {
            r.reason = "summand " + std::to_string(i) + " has no isomorphic partner";
            return r;
        }
    }
    if (!is_intertwiner(m, n, total) || !hom_is_iso(m, n, total)) {
        r.reason = "assembled map failed certification";
        return r;
    }
    r.iso = true;
    r.witness = std::move(total);
    return r;
}

IsoResult iso_test(const GModule& m, const GModule& n) {
    IsoResult r;
    if (m.dim() != n.dim() || !(m.character() == n.character())) {
        r.reason = "graded characters differ";
        return r;
    }
    if (m == n) {
        r.iso = true;
        r.witness = hom_identity(m);
        return r;
    }
    // a generic intertwiner between isomorphic modules is invertible
    HomBasis h = hom_space(m, n);
    if (h.dim() == 0) {
        r.reason = "no nonzero intertwiner";
        return r;
    }
    std::mt19937 rng(20240602u);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int t = 0; t < 4; ++t) {
        Vec c(h.dim());
        for (auto& v : c) v = t == 0 ? Scalar(1) : Scalar(coef(rng), coef(rng));
        HomMap f = hom_combination(h.maps, c);
        if (hom_is_iso(m, n, f)) {
            r.iso = true;
            r.witness = std::move(f);
            return r;
        }
    }
    return iso_test(m, n, decompose(m), decompose(n));
}

// ---- extensions ------------------------------------------------------------------------------

int ext_dim(WeightLabel a, WeightLabel b) {
    if (in_sp(a) || in_sp(b)) return 0;
    const Filtration& f = catalog::radical_layers(a);
    if (f.length() < 2) return 0;
    return int(f.layers[1].total(b));
}

QuiverMatrix separated_quiver() {
    QuiverMatrix q{};
    for (WeightLabel a : kAllLabels)
        for (WeightLabel b : kAllLabels) q[idx(a)][idx(b)] = ext_dim(a, b);
    return q;
}

}  // namespace fkd
