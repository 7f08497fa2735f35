#include "fkd/catalog.hpp"

#include <future>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "fkd/appendix.hpp"

namespace fkd::catalog {

namespace {

// single computation on concurrent first access; results live as long as the process
template <class K, class V>
class Memo {
public:
    template <class F>
    const V& get(const K& k, F&& make) {
        std::promise<V> p;
        std::shared_future<V> f;
        bool owner = false;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find(k);
            if (it == cache_.end()) {
                f = p.get_future().share();
                cache_.emplace(k, f);
                owner = true;
            } else {
                f = it->second;
            }
        }
        if (owner) {
            try {
                p.set_value(make());
            } catch (...) {
                p.set_exception(std::current_exception());
            }
        }
        return f.get();
    }

private:
    std::mutex mu_;
    std::map<K, std::shared_future<V>> cache_;
};

using W = WeightLabel;

int word_index(const std::vector<int>& w) {
    int i = 0;
    for (int c : w) i = 3 * i + c;
    return i;
}

std::vector<int> word_of(int i, int n) {
    std::vector<int> w(n);
    for (int k = n - 1; k >= 0; --k) {
        w[k] = i % 3;
        i /= 3;
    }
    return w;
}

const std::array<Perm, 3> kLetters = {Perm::t12(), Perm::t13(), Perm::t23()};

int letter_of(const Perm& t) {
    for (int i = 0; i < 3; ++i)
        if (kLetters[i] == t) return i;
    return -1;
}

}  // namespace

// ---- Nichols algebra ----------------------------------------------------------------------

std::string NicholsAlgebra::word_name(const std::vector<int>& word) {
    if (word.empty()) return "1";
    std::string s;
    for (int c : word) s += std::string(s.empty() ? "" : " ") + "x" + std::string(kLetters[c].name());
    return s;
}

Vec NicholsAlgebra::normal_form(const std::vector<int>& word) const {
    int n = int(word.size());
    if (n >= int(ideal.size())) return {};
    Vec v(ideal[n].ambient());
    v[word_index(word)] = Scalar(1);
    ideal[n].reduce(v);
    Vec out;
    for (const auto& b : basis[n]) out.push_back(v[word_index(b)]);
    return out;
}

NicholsAlgebra build_nichols() {
    // x_t^2 = 0 and the two cyclic relations
    std::vector<std::vector<std::pair<std::vector<int>, int>>> rels = {
        {{{0, 0}, 1}},
        {{{1, 1}, 1}},
        {{{2, 2}, 1}},
        {{{0, 1}, 1}, {{2, 0}, 1}, {{1, 2}, 1}},
        {{{1, 0}, 1}, {{0, 2}, 1}, {{2, 1}, 1}},
    };
    NicholsAlgebra a;
    int size = 1;
    for (int n = 0; n <= 5; ++n, size *= 3) {
        Subspace ideal(size);
        for (int l = 0; n >= 2 && l <= n - 2; ++l) {
            int r = n - 2 - l;
            int nl = 1, nr = 1;
            for (int k = 0; k < l; ++k) nl *= 3;
            for (int k = 0; k < r; ++k) nr *= 3;
            for (int u = 0; u < nl; ++u)
                for (int v = 0; v < nr; ++v)
                    for (const auto& rel : rels) {
                        Vec vec(size);
                        for (const auto& [mid, c] : rel) {
                            std::vector<int> w = word_of(u, l);
                            w.insert(w.end(), mid.begin(), mid.end());
                            auto rw = word_of(v, r);
                            w.insert(w.end(), rw.begin(), rw.end());
                            vec[word_index(w)] += Scalar(c);
                        }
                        ideal.insert(std::move(vec));
                    }
        }
        std::vector<std::vector<int>> words;
        for (int c : ideal.free_columns()) words.push_back(word_of(c, n));
        a.dims[n] = int(words.size());
        a.ideal.push_back(std::move(ideal));
        a.basis.push_back(std::move(words));
    }
    if (a.dims != std::array<int, 6>{1, 3, 4, 3, 1, 0})
        throw std::logic_error("Nichols algebra: unexpected degreewise dimensions");
    a.x_top = a.basis[4][0];
    // g . x_t = sgn(g) x_{g t g^-1}; the degree of a word is the product of its letters
    for (int n = 0; n <= 4; ++n) {
        ClassTraces tr{};
        for (const auto& w : a.basis[n]) {
            Perm deg;
            for (int c : w) deg = deg * kLetters[c];
            auto coeff = [&](const Perm& g) {
                std::vector<int> img;
                for (int c : w) img.push_back(letter_of(g * kLetters[c] * g.inv()));
                Scalar s = (n % 2 && g.sgn() < 0) ? Scalar(-1) : Scalar(1);
                Vec nf = a.normal_form(img);
                for (std::size_t k = 0; k < a.basis[n].size(); ++k)
                    if (a.basis[n][k] == w) return s * nf[k];
                return Scalar(0);
            };
            if (deg == Perm::e()) {
                tr.e_dim += Scalar(1);
                tr.e_t12 += coeff(Perm::t12());
                tr.e_c123 += coeff(Perm::c123());
            } else if (deg == Perm::t12()) {
                tr.s_dim += Scalar(1);
                tr.s_t12 += coeff(Perm::t12());
            } else if (deg == Perm::c123()) {
                tr.c_dim += Scalar(1);
                tr.c_c123 += coeff(Perm::c123());
                tr.c_c132 += coeff(Perm::c132());
            }
        }
        auto mult = multiplicities_from_traces(tr);
        for (W l : kAllLabels)
            if (mult[idx(l)]) a.layers[n].add(l, -n, mult[idx(l)]);
    }
    return a;
}

const NicholsAlgebra& nichols() {
    static const NicholsAlgebra a = build_nichols();
    return a;
}

// ---- characters ---------------------------------------------------------------------------

GradedChar verma_char(WeightLabel l) { return char_nichols() * GradedChar::of(l); }

GradedChar coverma_char(WeightLabel l) { return verma_char(l).shifted(4); }

GradedChar ind_char(WeightLabel l) { return char_nichols() * char_nichols().bar() * GradedChar::of(l); }

GradedChar projective_char(WeightLabel l) {
    auto M = verma_char;
    switch (l) {
        case W::eps:
            return M(W::eps).scaled(Laurent(1) + Laurent::mono(4)) +
                   M(W::s_minus).scaled(Laurent::mono(1) + Laurent::mono(3));
        case W::e_rho: return M(W::e_rho) + M(W::s_minus).shifted(1) + M(W::t0).shifted(2);
        case W::s_minus:
            return M(W::s_minus).scaled(Laurent(1) + Laurent::mono(2)) + M(W::eps).shifted(1) +
                   M(W::e_rho).shifted(1) + M(W::t0).shifted(1);
        case W::t0: return M(W::t0) + M(W::s_minus).shifted(1) + M(W::e_rho).shifted(2);
        default: return M(l);
    }
}

// ---- modules ------------------------------------------------------------------------------

GModule build_tabulated(WeightLabel l) {
    switch (l) {
        case W::eps: {
            GModule::Actions act;
            for (int g = 0; g < 3; ++g) act[g] = SparseMat::identity(1);
            return GModule({{"d1", 0, Perm::e()}}, act);
        }
        case W::t0: return module_from_table(table_basis(Table::A), corrected_table(Table::A));
        case W::e_rho: return module_from_table(table_basis(Table::B), corrected_table(Table::B));
        case W::s_minus: return module_from_table(table_basis(Table::C), corrected_table(Table::C));
        default: throw std::invalid_argument("not a tabulated simple module");
    }
}

GModule build_t01() {
    GModule c = shift(build_tabulated(W::s_minus), 1);
    auto basis = c.basis();
    int t = int(basis.size());
    basis.push_back({"t01", 0, Perm::e()});
    GModule::Actions act;
    for (int g = 0; g < 9; ++g) {
        act[g] = SparseMat(t + 1, t + 1);
        for (int j = 0; j < t; ++j)
            for (const auto& [i, v] : c.action(kAllGens[g]).column(j)) act[g].add(i, j, v);
    }
    for (int g = 0; g < 3; ++g) act[g].add(t, t, Scalar(1));
    auto set = [&](Gen h, const char* target) { act[int(h)].add(c.index_of(target), t, Scalar(1)); };
    set(Gen::x12, "c1");
    set(Gen::x13, "c3");
    set(Gen::x23, "c2");
    set(Gen::y12, "c8");
    set(Gen::y13, "c10");
    set(Gen::y23, "c9");
    return GModule(std::move(basis), std::move(act));
}

namespace {

Memo<std::pair<int, int>, GModule> g_tensor;
Memo<std::pair<int, int>, Decomposition> g_decomp;
Memo<int, GModule> g_simple, g_proj, g_named;
Memo<int, Filtration> g_rad;

// the summand of m whose character is want up to shift, moved to the shift of want
GModule pick(const Decomposition& d, const GradedChar& want, const char* what) {
    for (const auto& s : d.summands) {
        GradedChar c = s.module.character();
        int k = c.max_degree() - want.max_degree();
        if (c == want.shifted(k)) return k == 0 ? s.module : shift(s.module, -k);
    }
    throw std::runtime_error(std::string("catalog: no summand with the character of ") + what);
}

const GModule& by_dim(const Decomposition& d, int dim, const char* what) {
    for (const auto& s : d.summands)
        if (s.module.dim() == dim) return s.module;
    throw std::runtime_error(std::string("catalog: no summand of dimension ") + std::to_string(dim) + " for " + what);
}

}  // namespace

const GModule& tensor_of(WeightLabel a, WeightLabel b) {
    return g_tensor.get({idx(a), idx(b)}, [&] { return tensor(simple(a), simple(b)); });
}

const Decomposition& tensor_decomposition(WeightLabel a, WeightLabel b) {
    return g_decomp.get({idx(a), idx(b)}, [&] { return decompose(tensor_of(a, b)); });
}

const GModule& simple(WeightLabel l) {
    return g_simple.get(idx(l), [&]() -> GModule {
        GradedChar want = char_of_simple(l);
        switch (l) {
            case W::eps:
            case W::e_rho:
            case W::t0:
            case W::s_minus: return build_tabulated(l);
            case W::t1:
            case W::t2: return pick(tensor_decomposition(W::t0, W::e_rho), want, "L(t1), L(t2)");
            case W::e_minus: return pick(tensor_decomposition(W::e_rho, W::e_rho), want, "L(e-)");
            case W::s_plus: return pick(tensor_decomposition(W::s_minus, W::e_rho), want, "L(s+)");
        }
        throw std::logic_error("unreachable");
    });
}

const GModule& projective(WeightLabel l) {
    return g_proj.get(idx(l), [&]() -> GModule {
        GradedChar want = projective_char(l);
        switch (l) {
            case W::t0: return pick(Decomposition{{{tensor_of(W::e_minus, W::e_rho), {}, {}}}, true}, want, "P(t0)");
            case W::e_rho: return pick(Decomposition{{{tensor_of(W::e_minus, W::t0), {}, {}}}, true}, want, "P(erho)");
            case W::s_minus: return pick(tensor_decomposition(W::s_plus, W::e_rho), want, "P(s-)");
            case W::eps: return pick(tensor_decomposition(W::e_minus, W::e_minus), want, "P(eps)");
            default: return simple(l);
        }
    });
}

const GModule& named(Named n) {
    return g_named.get(int(n), [&]() -> GModule {
        switch (n) {
            case Named::A: return by_dim(tensor_decomposition(W::s_minus, W::s_minus), 51, "A");
            case Named::B: return by_dim(tensor_decomposition(W::e_rho, W::e_rho), 37, "B");
            case Named::C: return by_dim(tensor_decomposition(W::s_minus, W::e_rho), 34, "C");
            case Named::T01: return build_t01();
        }
        throw std::logic_error("unreachable");
    });
}

const Filtration& radical_layers(WeightLabel l) {
    return g_rad.get(idx(l), [&] { return radical_filtration(projective(l)); });
}

// ---- keys ---------------------------------------------------------------------------------

namespace {

struct ParsedKey {
    std::string base;
    bool dual = false;
    int shift = 0;
};

std::optional<ParsedKey> parse_key(std::string_view key) {
    ParsedKey p;
    std::string s(key);
    if (!s.empty() && s.back() == ']') {
        auto open = s.rfind('[');
        if (open == std::string::npos) return std::nullopt;
        try {
            std::size_t used = 0;
            std::string num = s.substr(open + 1, s.size() - open - 2);
            p.shift = std::stoi(num, &used);
            if (used != num.size()) return std::nullopt;
        } catch (...) {
            return std::nullopt;
        }
        s = s.substr(0, open);
    }
    if (!s.empty() && s.back() == '*') {
        p.dual = true;
        s.pop_back();
    }
    p.base = s;
    return p;
}

std::optional<WeightLabel> label_in(std::string_view s) {
    try {
        return parse_label(s);
    } catch (...) {
        return std::nullopt;
    }
}

std::optional<GModule> build_base(const std::string& b) {
    if (b == "A") return named(Named::A);
    if (b == "B") return named(Named::B);
    if (b == "C") return named(Named::C);
    if (b == "T01") return named(Named::T01);
    if (b.size() > 3 && (b[0] == 'L' || b[0] == 'P') && b[1] == '(' && b.back() == ')') {
        auto l = label_in(std::string_view(b).substr(2, b.size() - 3));
        if (!l) return std::nullopt;
        return b[0] == 'L' ? simple(*l) : projective(*l);
    }
    if (b.rfind("Ind(", 0) == 0 && b.back() == ')') {
        std::string inner = b.substr(4, b.size() - 5);
        auto comma = inner.find(',');
        if (comma == std::string::npos) return std::nullopt;
        auto l = label_in(inner.substr(0, comma)), m = label_in(inner.substr(comma + 1));
        if (!l || !m || !in_sp(*l) || !in_sp(*m)) return std::nullopt;
        // L(l) (x) L(m) realizes Ind(l m); move it to the grading of ind_char
        GradedChar want;
        for (WeightLabel c : weight_tensor_decompose(*l, *m)) want = want + ind_char(c);
        const GModule& t = tensor_of(*l, *m);
        int k = want.max_degree() - t.character().max_degree();
        return shift(t, k);
    }
    return std::nullopt;
}

bool base_is_valid(const std::string& b) {
    if (b == "A" || b == "B" || b == "C" || b == "T01") return true;
    if (b.size() > 3 && (b[0] == 'L' || b[0] == 'P') && b[1] == '(' && b.back() == ')')
        return label_in(std::string_view(b).substr(2, b.size() - 3)).has_value();
    if (b.rfind("Ind(", 0) == 0 && b.back() == ')') {
        std::string inner = b.substr(4, b.size() - 5);
        auto comma = inner.find(',');
        if (comma == std::string::npos) return false;
        auto l = label_in(inner.substr(0, comma)), m = label_in(inner.substr(comma + 1));
        return l && m && in_sp(*l) && in_sp(*m);
    }
    return false;
}

}  // namespace

bool is_key(std::string_view key) {
    auto p = parse_key(key);
    return p && base_is_valid(p->base);
}

GModule build(std::string_view key) {
    auto p = parse_key(key);
    if (!p || !base_is_valid(p->base)) throw std::invalid_argument("unknown catalog key: " + std::string(key));
    GModule m = *build_base(p->base);
    if (p->dual) m = dual(m);
    if (p->shift) m = shift(m, p->shift);
    return m;
}

std::vector<std::string> base_keys() {
    std::vector<std::string> keys;
    for (W l : kAllLabels) keys.push_back("L(" + std::string(label_name(l)) + ")");
    for (W l : kAllLabels) keys.push_back("P(" + std::string(label_name(l)) + ")");
    for (const char* k : {"A", "B", "C", "T01"}) keys.push_back(k);
    return keys;
}

// ---- named vectors ------------------------------------------------------------------------

namespace {

Vec combination(const GModule& m, const std::vector<std::pair<Scalar, std::string>>& terms) {
    Vec v(m.dim());
    for (const auto& [c, name] : terms) {
        int i = m.index_of(name);
        if (i < 0) throw std::invalid_argument("no basis vector " + name);
        v[i] += c;
    }
    return v;
}

}  // namespace

Vec vector_d(const GModule& ab) {
    return combination(ab, {{1, "a6⊗b2"}, {1, "a7⊗b1"}, {1, "a3⊗b4"}, {1, "a5⊗b3"},
                            {1, "a4⊗b5"}, {1, "a1⊗b6"}, {1, "a2⊗b7"}});
}

Vec vector_eps_m2(const GModule& cc) {
    Scalar z = Scalar::zeta(), z2 = Scalar::zeta2();
    Scalar u = Scalar(1) - z2;
    return combination(cc, {{-z2, "c4⊗c5"}, {-z2, "c5⊗c4"},
                            {1, "c6⊗c7"}, {1, "c7⊗c6"},
                            {u, "c8⊗c1"}, {u, "c9⊗c2"}, {u, "c10⊗c3"},
                            {-u, "c1⊗c8"}, {-u, "c2⊗c9"}, {-u, "c3⊗c10"}});
}

// ---- identification -----------------------------------------------------------------------

std::optional<std::string> identify(const GModule& x) {
    GradedChar cx = x.character();
    struct Cand {
        std::string name;
        const GModule* m;
        bool dual;
    };
    std::vector<Cand> cands;
    for (W l : kAllLabels) cands.push_back({"L(" + std::string(label_name(l)) + ")", &simple(l), false});
    for (W l : {W::eps, W::e_rho, W::s_minus, W::t0})
        cands.push_back({"P(" + std::string(label_name(l)) + ")", &projective(l), false});
    const char* names[] = {"A", "B", "C", "T01"};
    for (int i = 0; i < 4; ++i) {
        cands.push_back({names[i], &named(Named(i)), false});
        if (i < 3) cands.push_back({std::string(names[i]) + "*", &named(Named(i)), true});
    }
    for (const auto& c : cands) {
        if (c.m->dim() != x.dim()) continue;
        GModule base = c.dual ? dual(*c.m) : *c.m;
        GradedChar cb = base.character();
        int k = cx.max_degree() - cb.max_degree();
        if (!(cb.shifted(k) == cx)) continue;
        GModule moved = k ? shift(base, k) : base;
        if (!iso_indecomposable(moved, x)) continue;
        return k ? c.name + "[" + std::to_string(k) + "]" : c.name;
    }
    return std::nullopt;
}

}  // namespace fkd::catalog
