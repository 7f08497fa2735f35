#include "fkd/weights.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fkd {

namespace {

constexpr std::array<std::string_view, 8> kNames = {"eps", "e-", "erho", "s+", "s-", "t0", "t1", "t2"};
constexpr std::array<std::string_view, 8> kPretty = {"ε", "(e,−)", "(e,ρ)", "(σ,+)", "(σ,−)", "(τ,0)", "(τ,1)", "(τ,2)"};
constexpr std::array<int, 8> kDims = {1, 1, 2, 3, 3, 2, 2, 2};

const std::array<Perm, 3> kTrans = {Perm::t12(), Perm::t13(), Perm::t23()};

// g = (12)^s (123)^t
std::pair<int, int> coset_form(const Perm& g) {
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 3; ++t) {
            Perm h = s ? Perm::t12() : Perm::e();
            for (int k = 0; k < t; ++k) h = h * Perm::c123();
            if (h == g) return {s, t};
        }
    throw std::logic_error("coset form");
}

// cycle i->j->k->i as a permutation
Perm cycle(int i, int j, int k) {
    std::array<int, 3> im{};
    im[i - 1] = j;
    im[j - 1] = k;
    im[k - 1] = i;
    return {im[0], im[1], im[2]};
}

int transposition_slot(const Perm& t) {
    for (int i = 0; i < 3; ++i)
        if (kTrans[i] == t) return i;
    throw std::logic_error("not a transposition");
}

}  // namespace

int label_dim(WeightLabel l) { return kDims[idx(l)]; }
bool in_sp(WeightLabel l) {
    return l == WeightLabel::e_minus || l == WeightLabel::s_plus || l == WeightLabel::t1 || l == WeightLabel::t2;
}
std::string_view label_name(WeightLabel l) { return kNames[idx(l)]; }
std::string_view label_pretty(WeightLabel l) { return kPretty[idx(l)]; }

WeightLabel parse_label(std::string_view s) {
    for (int i = 0; i < 8; ++i)
        if (kNames[i] == s || kPretty[i] == s) return kAllLabels[i];
    throw std::invalid_argument("unknown weight '" + std::string(s) + "'");
}

WeightLabel label_bar(WeightLabel l) {
    if (l == WeightLabel::e_rho) return WeightLabel::t0;
    if (l == WeightLabel::t0) return WeightLabel::e_rho;
    return l;
}

Mat Weight::group_matrix(const Perm& g) const {
    switch (g.index()) {
        case 0: return Mat::identity(dim());
        case 1: return action[0];
        case 2: return action[1];
        case 3: return action[2];
        case 4: return action[1] * action[0];
        default: return action[0] * action[1];
    }
}

Weight weight_build(WeightLabel l) {
    Weight w;
    w.label = l;
    switch (l) {
        case WeightLabel::eps:
        case WeightLabel::e_minus: {
            w.names = {l == WeightLabel::eps ? "m_e+" : "m_e-"};
            w.degrees = {Perm::e()};
            for (int i = 0; i < 3; ++i) {
                w.action[i] = Mat(1, 1);
                w.action[i](0, 0) = Scalar(l == WeightLabel::eps ? 1 : -1);
            }
            break;
        }
        case WeightLabel::s_plus:
        case WeightLabel::s_minus: {
            const char* suf = l == WeightLabel::s_plus ? "+" : "-";
            for (const auto& t : kTrans) {
                w.names.push_back("m" + std::string(t.name()) + suf);
                w.degrees.push_back(t);
            }
            for (int i = 0; i < 3; ++i) {
                const Perm& g = kTrans[i];
                Mat m(3, 3);
                for (int j = 0; j < 3; ++j) {
                    // m_ij -> m_{g(i)g(j)}; the transposition (ij) conjugates to g(ij)g^-1
                    Perm img = g * kTrans[j] * g.inv();
                    m(transposition_slot(img), j) = Scalar(l == WeightLabel::s_plus ? 1 : g.sgn());
                }
                w.action[i] = m;
            }
            break;
        }
        case WeightLabel::e_rho:
        case WeightLabel::t0:
        case WeightLabel::t1:
        case WeightLabel::t2: {
            int ell = l == WeightLabel::t0 ? 0 : (l == WeightLabel::t2 ? 2 : 1);
            std::string suf = l == WeightLabel::e_rho ? "rho" : std::to_string(ell);
            w.names = {"m123_" + suf, "m132_" + suf};
            if (l == WeightLabel::e_rho) w.degrees = {Perm::e(), Perm::e()};
            else w.degrees = {Perm::c123(), Perm::c132()};
            for (int i = 0; i < 3; ++i) {
                const Perm& g = kTrans[i];
                auto [s, t] = coset_form(g);
                (void)s;
                Mat m(2, 2);
                Perm a = cycle(g(1), g(2), g(3));  // image of m123
                Perm b = cycle(g(1), g(3), g(2));  // image of m132
                m(a == Perm::c123() ? 0 : 1, 0) = zeta_pow(t * ell);
                m(b == Perm::c123() ? 0 : 1, 1) = zeta_pow(-t * ell);
                w.action[i] = m;
            }
            break;
        }
    }
    return w;
}

std::array<long, 8> multiplicities_from_traces(const ClassTraces& t) {
    auto as_long = [](const Scalar& s, const char* what) -> long {
        if (!s.is_rational() || !s.a().is_integer() || !s.a().is_small() || s.a().sign() < 0)
            throw std::domain_error(std::string("not a module character (") + what + " = " + s.str() + ")");
        return long(s.a().num());
    };
    std::array<long, 8> m{};
    Scalar six = Scalar(Rational(1, 6)), half = Scalar(Rational(1, 2)), third = Scalar(Rational(1, 3));
    m[idx(WeightLabel::eps)] = as_long((t.e_dim + t.e_t12 * 3 + t.e_c123 * 2) * six, "eps");
    m[idx(WeightLabel::e_minus)] = as_long((t.e_dim - t.e_t12 * 3 + t.e_c123 * 2) * six, "e-");
    m[idx(WeightLabel::e_rho)] = as_long((t.e_dim * 2 - t.e_c123 * 2) * six, "erho");
    m[idx(WeightLabel::s_plus)] = as_long((t.s_dim + t.s_t12) * half, "s+");
    m[idx(WeightLabel::s_minus)] = as_long((t.s_dim - t.s_t12) * half, "s-");
    const WeightLabel ts[3] = {WeightLabel::t0, WeightLabel::t1, WeightLabel::t2};
    for (int ell = 0; ell < 3; ++ell)
        m[idx(ts[ell])] = as_long((t.c_dim + zeta_pow(-ell) * t.c_c123 + zeta_pow(-2 * ell) * t.c_c132) * third, "tau");
    return m;
}

namespace {

ClassTraces weight_traces(const std::vector<Perm>& deg, const std::array<Mat, 3>& act) {
    int n = int(deg.size());
    Mat c123 = act[1] * act[0], c132 = act[0] * act[1];
    ClassTraces t;
    for (int i = 0; i < n; ++i) {
        if (deg[i] == Perm::e()) {
            t.e_dim += 1;
            t.e_t12 += act[0](i, i);
            t.e_c123 += c123(i, i);
        } else if (deg[i] == Perm::t12()) {
            t.s_dim += 1;
            t.s_t12 += act[0](i, i);
        } else if (deg[i] == Perm::c123()) {
            t.c_dim += 1;
            t.c_c123 += c123(i, i);
            t.c_c132 += c132(i, i);
        }
    }
    return t;
}

// dimension of the space of S3-graded, S3-equivariant maps src -> tgt
int intertwiner_dim(const std::vector<Perm>& sd, const std::array<Mat, 3>& sa,
                    const std::vector<Perm>& td, const std::array<Mat, 3>& ta) {
    int n = int(sd.size()), m = int(td.size());
    // unknown F(i, j) allowed only when degrees agree
    std::vector<std::pair<int, int>> vars;
    std::vector<std::vector<int>> var_of(m, std::vector<int>(n, -1));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (td[i] == sd[j]) {
                var_of[i][j] = int(vars.size());
                vars.emplace_back(i, j);
            }
    if (vars.empty()) return 0;
    std::vector<Vec> rows;
    for (int g = 0; g < 2; ++g) {
        // T F - F S = 0 for (12) and (13)
        const Mat& T = ta[g];
        const Mat& S = sa[g];
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                Vec r(vars.size());
                for (int k = 0; k < m; ++k)
                    if (var_of[k][j] >= 0) r[var_of[k][j]] += T(i, k);
                for (int k = 0; k < n; ++k)
                    if (var_of[i][k] >= 0) r[var_of[i][k]] -= S(k, j);
                if (!is_zero(r)) rows.push_back(std::move(r));
            }
    }
    if (rows.empty()) return int(vars.size());
    return int(vars.size()) - rank(Mat::from_rows(int(vars.size()), rows));
}

}  // namespace

FusionTable derive_fusion_table() {
    FusionTable f{};
    std::array<Weight, 8> ws;
    for (auto l : kAllLabels) ws[idx(l)] = weight_build(l);
    for (auto a : kAllLabels)
        for (auto b : kAllLabels) {
            const Weight& A = ws[idx(a)];
            const Weight& B = ws[idx(b)];
            std::vector<Perm> deg;
            for (int i = 0; i < A.dim(); ++i)
                for (int j = 0; j < B.dim(); ++j) deg.push_back(A.degrees[i] * B.degrees[j]);
            std::array<Mat, 3> act;
            for (int g = 0; g < 3; ++g) {
                int n = A.dim() * B.dim();
                Mat m(n, n);
                for (int i = 0; i < A.dim(); ++i)
                    for (int j = 0; j < B.dim(); ++j)
                        for (int k = 0; k < A.dim(); ++k)
                            for (int l = 0; l < B.dim(); ++l)
                                m(k * B.dim() + l, i * B.dim() + j) = A.action[g](k, i) * B.action[g](l, j);
                act[g] = m;
            }
            for (auto c : kAllLabels) {
                const Weight& C = ws[idx(c)];
                f[idx(a)][idx(b)][idx(c)] = intertwiner_dim(C.degrees, C.action, deg, act);
            }
        }
    return f;
}

const FusionTable& fusion_table() {
    // rows: a, b; entries: multiplicities of eps, e-, erho, s+, s-, t0, t1, t2
    static const FusionTable table = [] {
        FusionTable f{};
        const int data[8][8][8] = {
#include "fusion_table.inc"
        };
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b)
                for (int c = 0; c < 8; ++c) f[a][b][c] = data[a][b][c];
        return f;
    }();
    return table;
}

std::vector<WeightLabel> weight_tensor_decompose(WeightLabel a, WeightLabel b) {
    std::vector<WeightLabel> out;
    for (auto c : kAllLabels)
        for (int k = 0; k < fusion_table()[idx(a)][idx(b)][idx(c)]; ++k) out.push_back(c);
    return out;
}

WeightLabel label_dual(WeightLabel l) {
    Weight w = weight_build(l);
    // dual: degrees inverted, action by the inverse transpose (transpositions are involutions)
    std::vector<Perm> deg;
    for (auto& g : w.degrees) deg.push_back(g.inv());
    std::array<Mat, 3> act;
    for (int g = 0; g < 3; ++g) act[g] = w.action[g].transpose();
    auto m = multiplicities_from_traces(weight_traces(deg, act));
    for (auto c : kAllLabels)
        if (m[idx(c)] == 1) return c;
    throw std::logic_error("dual weight not simple");
}

long Laurent::eval1() const {
    long s = 0;
    for (auto& [e, c] : c_) s += c;
    return s;
}

Laurent Laurent::bar() const {
    Laurent p;
    for (auto& [e, c] : c_) p.c_[-e] = c;
    return p;
}

Laurent Laurent::shifted(int k) const {
    Laurent p;
    for (auto& [e, c] : c_) p.c_[e + k] = c;
    return p;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent p = a;
    for (auto& [e, c] : b.c_) {
        long v = (p.c_[e] += c);
        if (!v) p.c_.erase(e);
    }
    return p;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + b * Laurent(-1); }

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent p;
    for (auto& [e, c] : a.c_)
        for (auto& [f, d] : b.c_) {
            long v = (p.c_[e + f] += c * d);
            if (!v) p.c_.erase(e + f);
        }
    return p;
}

std::string Laurent::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        auto [e, c] = *it;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        long a = c < 0 ? -c : c;
        if (e == 0) os << a;
        else {
            if (a != 1) os << a << "·";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

GradedChar GradedChar::of(WeightLabel l, int z, long c) {
    GradedChar g;
    g.add(l, z, c);
    return g;
}

GradedChar GradedChar::of(const std::vector<std::pair<WeightLabel, Laurent>>& terms) {
    GradedChar g;
    for (auto& [l, p] : terms)
        for (auto& [e, c] : p.coeffs()) g.add(l, e, c);
    return g;
}

long GradedChar::at(WeightLabel l, int z) const {
    auto it = c_.find({z, idx(l)});
    return it == c_.end() ? 0 : it->second;
}

void GradedChar::add(WeightLabel l, int z, long c) {
    if (!c) return;
    auto key = std::make_pair(z, idx(l));
    long v = (c_[key] += c);
    if (!v) c_.erase(key);
}

int GradedChar::max_degree() const {
    if (c_.empty()) throw std::domain_error("empty character");
    return c_.begin()->first.first;
}

int GradedChar::min_degree() const {
    if (c_.empty()) throw std::domain_error("empty character");
    return c_.rbegin()->first.first;
}

long GradedChar::dim() const {
    long d = 0;
    for (auto& [k, c] : c_) d += c * kDims[k.second];
    return d;
}

long GradedChar::mass() const {
    long d = 0;
    for (auto& [k, c] : c_) d += c;
    return d;
}

bool GradedChar::nonnegative() const {
    for (auto& [k, c] : c_)
        if (c < 0) return false;
    return true;
}

GradedChar GradedChar::shifted(int k) const {
    GradedChar g;
    for (auto& [key, c] : c_) g.c_[{key.first + k, key.second}] = c;
    return g;
}

GradedChar GradedChar::bar() const {
    GradedChar g;
    for (auto& [key, c] : c_) g.c_[{-key.first, key.second}] = c;
    return g;
}

GradedChar GradedChar::scaled(const Laurent& p) const {
    GradedChar g;
    for (auto& [e, a] : p.coeffs())
        for (auto& [key, c] : c_) g.add(kAllLabels[key.second], key.first + e, a * c);
    return g;
}

std::array<long, 8> GradedChar::layer(int z) const {
    std::array<long, 8> v{};
    for (int i = 0; i < 8; ++i) v[i] = at(kAllLabels[i], z);
    return v;
}

GradedChar operator+(const GradedChar& a, const GradedChar& b) {
    GradedChar g = a;
    for (auto& [key, c] : b.c_) g.add(kAllLabels[key.second], key.first, c);
    return g;
}

GradedChar operator-(const GradedChar& a, const GradedChar& b) {
    GradedChar g = a;
    for (auto& [key, c] : b.c_) g.add(kAllLabels[key.second], key.first, -c);
    return g;
}

GradedChar operator*(const GradedChar& a, const GradedChar& b) {
    const auto& f = fusion_table();
    GradedChar g;
    for (auto& [ka, ca] : a.c_)
        for (auto& [kb, cb] : b.c_)
            for (int c = 0; c < 8; ++c) {
                int m = f[ka.second][kb.second][c];
                if (m) g.add(kAllLabels[c], ka.first + kb.first, ca * cb * m);
            }
    return g;
}

namespace {

std::string render(const std::map<std::pair<int, int>, long, std::greater<>>& c, bool pretty) {
    if (c.empty()) return "0";
    // within a degree, list labels in enumeration order
    std::map<int, std::vector<std::pair<int, long>>, std::greater<>> byz;
    for (auto& [k, v] : c) byz[k.first].push_back({k.second, v});
    std::ostringstream os;
    bool first = true;
    for (auto& [z, lst] : byz) {
        std::vector<std::pair<int, long>> sorted = lst;
        std::sort(sorted.begin(), sorted.end());
        for (auto& [l, v] : sorted) {
            if (!first) os << (v < 0 ? " - " : " + ");
            else if (v < 0) os << "-";
            long a = v < 0 ? -v : v;
            if (a != 1) os << a;
            os << (pretty ? kPretty[l] : kNames[l]);
            if (z != 0) os << "·t^" << z;
            first = false;
        }
    }
    return os.str();
}

}  // namespace

std::string GradedChar::pretty() const { return render(c_, true); }
std::string GradedChar::str() const { return render(c_, false); }

GradedChar char_nichols() {
    using W = WeightLabel;
    GradedChar g;
    g.add(W::eps, 0, 1);
    g.add(W::s_minus, -1, 1);
    g.add(W::t1, -2, 1);
    g.add(W::t2, -2, 1);
    g.add(W::s_minus, -3, 1);
    g.add(W::eps, -4, 1);
    return g;
}

GradedChar char_of_simple(WeightLabel l) {
    using W = WeightLabel;
    GradedChar g;
    switch (l) {
        case W::eps: g.add(W::eps, 0, 1); break;
        case W::e_rho:
            g.add(W::e_rho, 0, 1);
            g.add(W::s_plus, -1, 1);
            g.add(W::t0, -2, 1);
            break;
        case W::t0:
            g.add(W::t0, 0, 1);
            g.add(W::s_plus, -1, 1);
            g.add(W::e_rho, -2, 1);
            break;
        case W::s_minus:
            g.add(W::s_minus, 0, 1);
            g.add(W::t1, -1, 1);
            g.add(W::t2, -1, 1);
            g.add(W::s_minus, -2, 1);
            break;
        default: g = GradedChar::of(l) * char_nichols(); break;
    }
    return g;
}

}  // namespace fkd
