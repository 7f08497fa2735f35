#include "fkd/appendix.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace fkd {

namespace {

#include "appendix_printed.inc"

// L(t0): (13), (23) and the x13, x23, y13, y23 columns are rebuilt from the weight formulas
// for (sigma,+) and equivariance; L(s-): two y12 values fixed so that y12^2 = 0.
const std::vector<TableEntry> kFixA = {
    {"t13", "a3", "a5"}, {"t13", "a4", "a4"}, {"t13", "a5", "a3"},
    {"t23", "a3", "a4"}, {"t23", "a4", "a3"}, {"t23", "a5", "a5"},
    {"x13", "a3", "0"}, {"x13", "a4", "z2 a1 - z a2"}, {"x13", "a6", "a3"}, {"x13", "a7", "-a5"},
    {"x23", "a4", "0"}, {"x23", "a5", "z a1 - z2 a2"}, {"x23", "a6", "a4"}, {"x23", "a7", "-a3"},
    {"y13", "a1", "z a4"}, {"y13", "a2", "-z2 a4"}, {"y13", "a3", "a6"}, {"y13", "a4", "0"}, {"y13", "a5", "-a7"},
    {"y23", "a1", "z2 a5"}, {"y23", "a2", "-z a5"}, {"y23", "a3", "-a7"}, {"y23", "a4", "a6"}, {"y23", "a5", "0"},
};
const std::vector<TableEntry> kFixB = {};
const std::vector<TableEntry> kFixC = {
    {"y12", "c2", "z2 w(c4 - c6)"},
    {"y12", "c3", "z2 w(c5 - c7)"},
};

struct Lexer {
    std::string_view s;
    std::size_t p = 0;
    void skip() {
        while (p < s.size() && s[p] == ' ') ++p;
    }
    bool eat(std::string_view t) {
        skip();
        if (s.substr(p, t.size()) == t) {
            p += t.size();
            return true;
        }
        return false;
    }
    bool done() {
        skip();
        return p >= s.size();
    }
    [[noreturn]] void fail() const { throw std::invalid_argument("cannot parse table value '" + std::string(s) + "'"); }
};

Scalar w_const() { return (Scalar(1) - Scalar::zeta()).inv(); }

// coefficient token: z2 | z | (nothing)
Scalar coef(Lexer& lx) {
    lx.skip();
    if (lx.s.substr(lx.p, 2) == "z2" && (lx.p + 2 >= lx.s.size() || lx.s[lx.p + 2] == ' ')) {
        lx.p += 2;
        return Scalar::zeta2();
    }
    if (lx.s.substr(lx.p, 1) == "z" && (lx.p + 1 >= lx.s.size() || lx.s[lx.p + 1] == ' ')) {
        lx.p += 1;
        return Scalar::zeta();
    }
    return Scalar(1);
}

std::string name(Lexer& lx) {
    lx.skip();
    std::size_t b = lx.p;
    while (lx.p < lx.s.size() && std::isalnum(static_cast<unsigned char>(lx.s[lx.p]))) ++lx.p;
    if (b == lx.p) lx.fail();
    return std::string(lx.s.substr(b, lx.p - b));
}

void terms(Lexer& lx, const Scalar& factor, Terms& out) {
    Scalar sign(1);
    if (lx.eat("-")) sign = Scalar(-1);
    while (true) {
        Scalar c = coef(lx);
        out.emplace_back(name(lx), factor * sign * c);
        lx.skip();
        if (lx.eat("+")) sign = Scalar(1);
        else if (lx.eat("-")) sign = Scalar(-1);
        else break;
    }
}

}  // namespace

Terms parse_rhs(std::string_view rhs) {
    Lexer lx{rhs};
    Terms out;
    if (lx.eat("0") && lx.done()) return out;
    lx.p = 0;
    std::size_t wpos = rhs.find("w(");
    if (wpos != std::string_view::npos) {
        Scalar f = coef(lx);
        if (!lx.eat("w(")) lx.fail();
        terms(lx, f * w_const(), out);
        if (!lx.eat(")")) lx.fail();
    } else {
        terms(lx, Scalar(1), out);
    }
    if (!lx.done()) lx.fail();
    return out;
}

const std::vector<TableEntry>& printed_table(Table t) {
    switch (t) {
        case Table::A: return kPrintedA;
        case Table::B: return kPrintedB;
        default: return kPrintedC;
    }
}

std::vector<TableEntry> corrected_table(Table t) {
    std::vector<TableEntry> out = printed_table(t);
    const auto& fix = t == Table::A ? kFixA : (t == Table::B ? kFixB : kFixC);
    for (const auto& f : fix) {
        bool found = false;
        for (auto& e : out)
            if (std::string_view(e.gen) == f.gen && std::string_view(e.src) == f.src) {
                e.rhs = f.rhs;
                found = true;
            }
        if (!found) throw std::logic_error("correction for an entry that is not printed");
    }
    return out;
}

std::vector<BasisVector> table_basis(Table t) {
    using P = Perm;
    switch (t) {
        case Table::A:
            return {{"a1", -2, P::e()}, {"a2", -2, P::e()}, {"a3", -1, P::t12()}, {"a4", -1, P::t13()},
                    {"a5", -1, P::t23()}, {"a6", 0, P::c123()}, {"a7", 0, P::c132()}};
        case Table::B:
            return {{"b1", -2, P::c123()}, {"b2", -2, P::c132()}, {"b3", -1, P::t23()}, {"b4", -1, P::t12()},
                    {"b5", -1, P::t13()}, {"b6", 0, P::e()}, {"b7", 0, P::e()}};
        default:
            return {{"c1", -2, P::t12()}, {"c2", -2, P::t23()}, {"c3", -2, P::t13()}, {"c4", -1, P::c123()},
                    {"c5", -1, P::c132()}, {"c6", -1, P::c123()}, {"c7", -1, P::c132()}, {"c8", 0, P::t12()},
                    {"c9", 0, P::t23()}, {"c10", 0, P::t13()}};
    }
}

GModule module_from_table(const std::vector<BasisVector>& basis, const std::vector<TableEntry>& entries) {
    std::map<std::string, int> idx;
    for (int i = 0; i < int(basis.size()); ++i) idx[basis[i].name] = i;
    int n = int(basis.size());
    GModule::Actions act;
    for (auto& a : act) a = SparseMat(n, n);
    auto at = [&](const std::string& s) {
        auto it = idx.find(s);
        if (it == idx.end()) throw std::invalid_argument("unknown basis vector '" + s + "'");
        return it->second;
    };
    for (const auto& e : entries) {
        Gen g = parse_gen(e.gen);
        int j = at(e.src);
        for (const auto& [dst, c] : parse_rhs(e.rhs)) act[static_cast<int>(g)].add(at(dst), j, c);
    }
    return GModule(basis, std::move(act));
}

FidelityReport appendix_fidelity(Table t, const GModule& built) {
    FidelityReport r;
    for (const auto& e : printed_table(t)) {
        ++r.total;
        Gen g = parse_gen(e.gen);
        int j = built.index_of(e.src);
        std::map<int, Scalar> want;
        bool ok = j >= 0;
        if (ok) {
            for (const auto& [dst, c] : parse_rhs(e.rhs)) {
                int i = built.index_of(dst);
                if (i < 0) ok = false;
                else want[i] += c;
            }
        }
        if (ok) {
            std::map<int, Scalar> got;
            for (const auto& [i, v] : built.action(g).column(j)) got[i] = v;
            std::erase_if(want, [](const auto& kv) { return kv.second.is_zero(); });
            ok = got == want;
        }
        if (ok) {
            ++r.matching;
        } else {
            std::string built_rhs;
            if (j >= 0)
                for (const auto& [i, v] : built.action(g).column(j))
                    built_rhs += (built_rhs.empty() ? "" : " + ") + ("(" + v.str() + ")" + built.basis()[i].name);
            r.mismatches.push_back(std::string(e.gen) + " " + e.src + ": printed " + e.rhs + ", module has " +
                                   (built_rhs.empty() ? "0" : built_rhs));
        }
    }
    return r;
}

}  // namespace fkd
