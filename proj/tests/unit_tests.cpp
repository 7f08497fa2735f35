#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fkd/analysis.hpp"
#include "fkd/appendix.hpp"
#include "fkd/catalog.hpp"
#include "fkd/hom.hpp"
#include "fkd/io.hpp"
#include "fkd/weights.hpp"

using namespace fkd;
using W = WeightLabel;
namespace cat = fkd::catalog;

TEST_SUITE("scalars") {
    const Scalar z = Scalar::zeta();

    TEST_CASE("products reduce by the minimal polynomial") {
        CHECK(z * z == Scalar(Rational(-1), Rational(-1)));
        CHECK(z * Scalar::zeta2() == Scalar(1));
        CHECK((Scalar(1) - z) * (Scalar(1) - Scalar::zeta2()) == Scalar(3));
        CHECK((Scalar(1) - z) * (Scalar(2) + z) == Scalar(3));
    }

    TEST_CASE("inverses") {
        CHECK(z.inv() == Scalar::zeta2());
        CHECK((Scalar(1) - z).inv() == Scalar(Rational(2, 3), Rational(1, 3)));
        CHECK(Scalar(1).inv() == Scalar(1));
        CHECK_THROWS(Scalar(0).inv());
    }

    TEST_CASE("conjugation") {
        CHECK(z.conj() == Scalar(Rational(-1), Rational(-1)));
        CHECK(Scalar(Rational(5, 7)).conj() == Scalar(Rational(5, 7)));
        Scalar x(Rational(3, 4), Rational(-2, 9));
        CHECK(x.conj().conj() == x);
        CHECK((x * x.conj()).is_rational());
    }

    TEST_CASE("json round trip") {
        Scalar x(Rational(-12, 35), Rational(7, 2));
        CHECK(scalar_from_json(scalar_to_json(x)) == x);
        CHECK(scalar_to_json(z) == "[0,1,1,1]");
    }
}

TEST_SUITE("weights") {
    TEST_CASE("dimensions and degrees") {
        const int dims[] = {1, 1, 2, 3, 3, 2, 2, 2};
        for (W l : kAllLabels) CHECK(weight_build(l).dim() == dims[idx(l)]);
        Weight sp = weight_build(W::s_plus);
        std::vector<int> deg;
        for (const Perm& g : sp.degrees) deg.push_back(g.index());
        std::sort(deg.begin(), deg.end());
        CHECK(deg == std::vector<int>{Perm::t12().index(), Perm::t13().index(), Perm::t23().index()});
        Weight e = weight_build(W::eps);
        CHECK(e.degrees[0] == Perm::e());
        CHECK(e.action[0] == Mat::identity(1));
    }

    TEST_CASE("fusion") {
        CHECK(weight_tensor_decompose(W::t0, W::e_rho) == std::vector<W>{W::t1, W::t2});
        CHECK(weight_tensor_decompose(W::e_minus, W::e_minus) == std::vector<W>{W::eps});
        for (W l : kAllLabels) CHECK(weight_tensor_decompose(W::eps, l) == std::vector<W>{l});
        const auto& f = fusion_table();
        for (W a : kAllLabels)
            for (W b : kAllLabels) {
                int d = 0;
                for (W c : kAllLabels) d += f[idx(a)][idx(b)][idx(c)] * label_dim(c);
                CHECK(d == label_dim(a) * label_dim(b));
                CHECK(f[idx(a)][idx(b)] == f[idx(b)][idx(a)]);
            }
    }

    TEST_CASE("graded characters") {
        GradedChar s = GradedChar::of(W::s_minus, -1);
        GradedChar ss;
        for (W c : weight_tensor_decompose(W::s_minus, W::s_minus)) ss.add(c, -2, 1);
        CHECK(s * s == ss);
        CHECK(char_nichols().dim() == 12);
        CHECK((char_nichols() * char_nichols()).dim() == 144);
        CHECK(GradedChar::of(W::eps) * char_nichols() == char_nichols());
        CHECK(char_of_simple(W::e_rho).str() == "erho + s+·t^-1 + t0·t^-2");
        CHECK(char_of_simple(W::eps).str() == "eps");
        CHECK(char_of_simple(W::e_minus).dim() == 12);
    }
}

TEST_SUITE("modules") {
    TEST_CASE("tabulated simples validate") {
        for (W l : {W::eps, W::e_rho, W::t0, W::s_minus}) CHECK(validate(cat::build_tabulated(l)).ok);
        CHECK(validate(zero_module()).ok);
    }

    TEST_CASE("a corrupted constant is caught") {
        auto entries = corrected_table(Table::C);
        for (auto& e : entries)
            if (std::string_view(e.gen) == "x12" && std::string_view(e.src) == "c4") e.rhs = "c2";
        auto r = validate(module_from_table(table_basis(Table::C), entries));
        CHECK_FALSE(r.ok);
        CHECK_FALSE(r.relation.empty());
    }

    TEST_CASE("json round trip is exact") {
        for (const char* k : {"L(s-)", "L(t1)", "C", "T01"}) {
            GModule m = cat::build(k);
            CHECK(module_from_json(module_to_json(m)) == m);
        }
        CHECK_THROWS_AS(module_from_json("{\"basis\": 3}"), std::invalid_argument);
    }

    TEST_CASE("dual and shift") {
        const GModule& s = cat::simple(W::s_minus);
        CHECK(dual(s).character() == s.character().bar());
        CHECK(shift(s, 3).character() == s.character().shifted(3));
        CHECK(dual(dual(s)).character() == s.character());
        CHECK(iso_test(dual(dual(s)), s).iso);
    }

    TEST_CASE("Nichols algebra") {
        const auto& nb = cat::nichols();
        CHECK(nb.dims == std::array<int, 6>{1, 3, 4, 3, 1, 0});
        GradedChar sum;
        for (const auto& l : nb.layers) sum = sum + l;
        CHECK(sum == char_nichols());
    }
}

TEST_SUITE("analysis") {
    TEST_CASE("decompose_character") {
        auto d = decompose_character(cat::tensor_of(W::t0, W::e_rho).character());
        CHECK(d.terms.size() == 3);
        CHECK(d.mult(W::t1, 0) == 1);
        CHECK(d.mult(W::t2, 0) == 1);
        CHECK(d.mult(W::eps, -2) == 1);
        for (W l : kAllLabels) CHECK(decompose_character(char_of_simple(l)).mult(l, 0) == 1);
        auto m = decompose_character(cat::verma_char(W::eps));
        CHECK(m.mult(W::eps, 0) == 1);
        CHECK(m.mult(W::eps, -4) == 1);
        CHECK(m.mult(W::s_minus, -1) == 1);
        CHECK_THROWS(decompose_character(GradedChar::of(W::eps, 0, -1)));
    }

    TEST_CASE("hom spaces") {
        CHECK(hom_space(cat::simple(W::s_minus), cat::simple(W::s_minus)).dim() == 1);
        CHECK(hom_space(cat::simple(W::e_rho), cat::simple(W::t0)).dim() == 0);
        CHECK(hom_space(shift(cat::simple(W::s_minus), 1), cat::named(cat::Named::T01)).dim() == 1);
        const GModule& t = cat::tensor_of(W::t0, W::e_rho);
        for (const auto& f : hom_space(shift(cat::simple(W::eps), -2), t).maps)
            CHECK(is_intertwiner(shift(cat::simple(W::eps), -2), t, f));
    }

    TEST_CASE("simplicity") {
        for (W l : {W::eps, W::e_rho, W::t0, W::s_minus, W::t1}) CHECK(is_simple(cat::simple(l)));
        CHECK_FALSE(is_simple(cat::named(cat::Named::C)));
    }

    TEST_CASE("socles") {
        const GModule& t = cat::named(cat::Named::T01);
        CHECK(socle(t) == socle_bruteforce(t));
        auto f = socle_filtration(cat::named(cat::Named::B));
        REQUIRE(f.length() == 3);
        CHECK(f.layers[0].mult(W::s_minus, -1) == 1);
        CHECK(f.layers[1].mult(W::eps, -4) == 1);
        CHECK(f.layers[1].mult(W::e_rho, -2) == 1);
    }

    TEST_CASE("decompose") {
        Decomposition d = decompose(cat::tensor_of(W::e_rho, W::e_rho));
        CHECK(d.certified);
        REQUIRE(d.summands.size() == 2);
        Decomposition one = decompose(cat::simple(W::s_minus));
        CHECK(one.summands.size() == 1);
    }

    TEST_CASE("isomorphism tests") {
        const GModule& a = cat::named(cat::Named::A);
        CHECK(iso_test(a, shift(dual(a), -4)).iso);
        CHECK_FALSE(iso_test(a, dual(a)).iso);
        CHECK_FALSE(iso_test(cat::simple(W::t1), cat::simple(W::t2)).iso);
        GModule rhs = direct_sum({cat::simple(W::e_minus), shift(dual(cat::named(cat::Named::B)), -4)});
        auto r = iso_test(cat::tensor_of(W::t0, W::t0), rhs);
        REQUIRE(r.iso);
        CHECK(is_intertwiner(cat::tensor_of(W::t0, W::t0), rhs, *r.witness));
    }

    TEST_CASE("Ext^1") {
        CHECK(ext_dim(W::eps, W::s_minus) == 3);
        CHECK(ext_dim(W::e_rho, W::s_minus) == 2);
        CHECK(ext_dim(W::eps, W::eps) == 0);
        CHECK(ext_dim(W::s_minus, W::s_minus) == 0);
        CHECK(ext_dim(W::t1, W::s_minus) == 0);
    }
}

TEST_SUITE("catalog") {
    TEST_CASE("keys") {
        CHECK(cat::is_key("L(s-)"));
        CHECK(cat::is_key("B*[-4]"));
        CHECK(cat::is_key("Ind(t1,e-)"));
        CHECK_FALSE(cat::is_key("L(x)"));
        CHECK_THROWS_AS(cat::build("Q"), std::invalid_argument);
        CHECK(cat::build("L(t0)[2]").character() == char_of_simple(W::t0).shifted(2));
    }

    TEST_CASE("identify") {
        CHECK(cat::identify(cat::named(cat::Named::C)) == std::optional<std::string>("C"));
        CHECK(cat::identify(shift(cat::simple(W::eps), -2)) == std::optional<std::string>("L(eps)[-2]"));
        CHECK(cat::identify(dual(cat::simple(W::t0))) == std::optional<std::string>("L(erho)[2]"));
    }

    TEST_CASE("projective characters") {
        for (W l : kAllLabels) CHECK(cat::projective(l).character() == cat::projective_char(l));
    }
}
