#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ca/parse.hpp"
#include "ca/rees.hpp"

using namespace ca;

namespace {

const Field Q = Field::rationals();

Polynomial px(const std::string& s, int n) {
    return parse_polynomial(s, default_names(n), Q, TermOrder::grevlex());
}

Polynomial pxy(const std::string& s, int n) {
    return parse_polynomial(s, default_names(2 * n, true), Q, TermOrder::grevlex());
}

}  // namespace

TEST_CASE("sharp splits sorted variable multisets") {
    auto f = px("x1*x2 - x3^2", 3);
    CHECK(sharp(f, 0) == pxy("x1*x2 - x3^2", 3));
    CHECK(sharp(f, 1) == pxy("x1*y2 - x3*y3", 3));
    CHECK(sharp(f, 2) == pxy("y1*y2 - y3^2", 3));
    CHECK(sharp(px("x1", 1), 1) == pxy("y1", 1));
    CHECK(sharp(px("x1^2*x2", 2), 2) == pxy("x1*y1*y2", 2));
    CHECK_THROWS_AS(sharp(f, 3), Error);
    CHECK_THROWS_AS(sharp(f, -1), Error);
    CHECK_THROWS_AS(sharp(px("x1^2 + x2", 2), 1), Error);
    for (int k = 0; k <= 2; ++k) {
        auto bd = sharp(f, k).bidegree();
        REQUIRE(bd.has_value());
        CHECK(bd->a == 2);
        CHECK(bd->b == k);
    }
}

TEST_CASE("maximal-ideal presentation generators") {
    SUBCASE("running example has six") {
        auto P = rees_generators({px("x1*x2 - x3^2", 3)}, 3);
        REQUIRE(P.generators.gens.size() == 6);
        CHECK(P.generators.gens[0] == pxy("x1*x2 - x3^2", 3));
        CHECK(P.generators.gens[1] == pxy("x1*y2 - x3*y3", 3));
        CHECK(P.generators.gens[2] == pxy("y1*y2 - y3^2", 3));
        CHECK(P.generators.gens[3] == pxy("x1*y2 - x2*y1", 3));
        CHECK(P.generators.gens[4] == pxy("x1*y3 - x3*y1", 3));
        CHECK(P.generators.gens[5] == pxy("x2*y3 - x3*y2", 3));
        CHECK(P.generators.homogeneous());
        for (auto& g : P.generators.gens) CHECK(g.bidegree().has_value());
    }
    SUBCASE("polynomial ring gives only the minors") {
        auto P = rees_generators({}, 2);
        REQUIRE(P.generators.gens.size() == 1);
        CHECK(P.generators.gens[0] == pxy("x1*y2 - x2*y1", 2));
    }
    SUBCASE("one variable") {
        auto P = rees_generators({px("x1", 1)}, 1);
        REQUIRE(P.generators.gens.size() == 2);
        CHECK(P.generators.gens[0] == pxy("x1", 1));
        CHECK(P.generators.gens[1] == pxy("y1", 1));
    }
}

TEST_CASE("reduced basis of the running example") {
    auto P = rees_generators({px("x1*x2 - x3^2", 3)}, 3);
    auto gb = buchberger(P.generators, P.generators.order);
    std::vector<Polynomial> expect = {
        pxy("y1*y2 - y3^2", 3),   pxy("x3*y2 - x2*y3", 3), pxy("x1*y2 - x3*y3", 3),
        pxy("x3*y1 - x1*y3", 3),  pxy("x2*y1 - x3*y3", 3), pxy("x1*x2 - x3^2", 3)};
    CHECK(gb.elements == expect);
    // quadratic closure: quadratic base basis gives a quadratic lifted basis
    for (auto& g : gb.elements) CHECK(g.degree() == 2);
}

TEST_CASE("presentation generators are minimal") {
    auto P = rees_generators({px("x1*x2 - x3^2", 3)}, 3);
    auto rep = minimality_check(P);
    CHECK(rep.minimal);
    CHECK_FALSE(rep.redundant_index.has_value());

    SUBCASE("duplicate is flagged") {
        P.generators.gens.push_back(P.generators.gens[1]);
        auto dup = minimality_check(P);
        CHECK_FALSE(dup.minimal);
        CHECK(dup.redundant_index.value() == 1);
    }
    SUBCASE("non-minimal base layer is flagged") {
        auto P2 = rees_generators({px("x1^2", 2), px("x1^3", 2)}, 2);
        auto rep2 = minimality_check(P2);
        CHECK_FALSE(rep2.minimal);
    }
}

TEST_CASE("lifting theorem report on concrete inputs") {
    SUBCASE("running example") {
        auto rep = verify_groebner_theorem({px("x1*x2 - x3^2", 3)}, 3);
        CHECK(rep.base_is_groebner);
        CHECK(rep.lifted_is_groebner);
        CHECK(rep.hilbert_identity);
        CHECK(rep.hilbert_bound == 6);
    }
    SUBCASE("empty base list: the minors alone") {
        for (int n = 1; n <= 3; ++n) {
            auto rep = verify_groebner_theorem({}, n, 5);
            CHECK(rep.base_is_groebner);
            CHECK(rep.lifted_is_groebner);
            CHECK(rep.hilbert_identity);
        }
    }
    SUBCASE("non-basis input is reported") {
        // S-pair of the two quadrics leaves x2^2*x3 - x1*x3^2, so (a) fails
        auto rep =
            verify_groebner_theorem({px("x1^2 - x2*x3", 3), px("x1*x2 - x3^2", 3)}, 3, 4);
        CHECK_FALSE(rep.base_is_groebner);
    }
}

TEST_CASE("reducedness check finds the witness pair") {
    auto P = rees_generators({px("x1*x2 - x3^2", 3)}, 3);
    GroebnerBasis raw{P.generators.order, P.generators.gens, false};
    auto rep = reducedness_check(raw);
    CHECK_FALSE(rep.reduced);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->first == pxy("x1*y2 - x3*y3", 3));
    CHECK(rep.witness->second == pxy("x1*y2 - x2*y1", 3));

    SUBCASE("the minors alone are reduced") {
        auto H = rees_generators({}, 3);
        // normalize lead coefficients, keeping the same elements
        std::vector<Polynomial> monic;
        for (auto& g : H.generators.gens) monic.push_back(g.monic());
        GroebnerBasis hb{H.generators.order, monic, false};
        CHECK(reducedness_check(hb).reduced);
    }
    SUBCASE("a single variable is reduced") {
        auto one = rees_generators({px("x1", 1)}, 1);
        GroebnerBasis ob{one.generators.order, one.generators.gens, false};
        CHECK(reducedness_check(ob).reduced);
    }
    SUBCASE("reduced output passes") {
        auto gb = buchberger(P.generators, P.generators.order);
        CHECK(reducedness_check(gb).reduced);
    }
}

TEST_CASE("involution swaps the blocks") {
    auto P = rees_generators({px("x1*x2 - x3^2", 3)}, 3);
    CHECK(rees_involution(P, pxy("x1*y2", 3)) == pxy("x2*y1", 3));
    CHECK(rees_involution(P, pxy("x1*x2", 3)) == pxy("y1*y2", 3));
    auto f = pxy("x1*y2 - x3*y3", 3);
    CHECK(rees_involution(P, rees_involution(P, f)) == f);
    CHECK(rees_involution(P, pxy("x1*x2", 3)).bidegree()->b == 2);
    CHECK_THROWS_AS(rees_involution(P, pxy("x1 + x1*y1", 3)), Error);

    SUBCASE("image ideal equals the ideal") {
        IdealPresentation image = P.generators;
        image.gens.clear();
        for (auto& g : P.generators.gens) image.gens.push_back(rees_involution(P, g));
        auto gb1 = buchberger(P.generators, P.generators.order);
        auto gb2 = buchberger(image, image.order);
        CHECK(gb1.elements == gb2.elements);
    }
    SUBCASE("involution conjugates the splitting degree") {
        // exact on pure powers, and modulo the minors in general
        auto cube = px("x1^3", 2);
        for (int k = 0; k <= 3; ++k) {
            auto P2 = rees_generators({}, 2);
            CHECK(rees_involution(P2, sharp(cube, k)) == sharp(cube, 3 - k));
        }
        auto P3 = rees_generators({}, 3);
        auto hgb = buchberger(P3.generators, P3.generators.order);
        auto f2 = px("x1*x2 - x3^2", 3);
        for (int k = 0; k <= 2; ++k) {
            auto diff = rees_involution(P3, sharp(f2, k)) - sharp(f2, 2 - k);
            CHECK(divide(diff, hgb.elements, hgb.order).remainder.is_zero());
        }
    }
}

TEST_CASE("elimination route agrees with the direct construction") {
    IdealPresentation J;
    J.nvars = 3;
    J.field = Q;
    J.names = default_names(3);
    J.order = TermOrder::grevlex();
    J.gens = {px("x1*x2 - x3^2", 3)};
    std::vector<Polynomial> xs = {px("x1", 3), px("x2", 3), px("x3", 3)};
    auto via_elim = rees_ideal_elimination(J, xs);
    CHECK(via_elim.s == 3);
    CHECK(via_elim.common_degree == 1);

    auto direct = rees_generators(J.gens, 3);
    auto gb_direct = buchberger(direct.generators, direct.generators.order);
    CHECK(via_elim.generators.gens == gb_direct.elements);
}

TEST_CASE("elimination route on special shapes") {
    SUBCASE("principal ideal is free") {
        IdealPresentation J;
        J.nvars = 1;
        J.field = Q;
        J.names = default_names(1);
        J.order = TermOrder::grevlex();
        auto P = rees_ideal_elimination(J, {px("x1", 1)});
        CHECK(P.generators.gens.empty());
    }
    SUBCASE("regular sequence pair gives the determinantal relation") {
        IdealPresentation J;
        J.nvars = 3;
        J.field = Q;
        J.names = default_names(3);
        J.order = TermOrder::grevlex();
        auto P = rees_ideal_elimination(J, {px("x1", 3), px("x2", 3)});
        REQUIRE(P.generators.gens.size() == 1);
        auto names = std::vector<std::string>{"x1", "x2", "x3", "y1", "y2"};
        CHECK(P.generators.gens[0] ==
              parse_polynomial("x2*y1 - x1*y2", names, Q, TermOrder::grevlex()));
    }
    SUBCASE("quadric forms get the renormalized grading") {
        IdealPresentation J;
        J.nvars = 2;
        J.field = Q;
        J.names = default_names(2);
        J.order = TermOrder::grevlex();
        auto P = rees_ideal_elimination(J, {px("x1^2", 2), px("x1*x2", 2)});
        CHECK(P.common_degree == 2);
        REQUIRE(P.generators.gens.size() == 1);
        auto names = std::vector<std::string>{"x1", "x2", "y1", "y2"};
        CHECK(P.generators.gens[0] ==
              parse_polynomial("x2*y1 - x1*y2", names, Q, TermOrder::grevlex()));
        CHECK(P.generators.homogeneous());
    }
    CHECK_THROWS_AS(
        rees_ideal_elimination(IdealPresentation{1, Q, {"x1"}, TermOrder::grevlex(), {}}, {}),
        Error);
}

TEST_CASE("associated graded ring presentations") {
    SUBCASE("maximal case matches the base ring degreewise") {
        auto P = rees_generators({px("x1*x2 - x3^2", 3)}, 3);
        auto G = assoc_graded(P);
        auto gb_G = buchberger(G, G.order);
        auto gb_A = buchberger(P.base_ideal, P.base_ideal.order);
        for (int d = 0; d <= 6; ++d)
            CHECK(hilbert_function(gb_G, d, 6) == hilbert_function(gb_A, d, 3));
    }
    SUBCASE("regular sequence gives a polynomial extension of the quotient") {
        IdealPresentation J;
        J.nvars = 2;
        J.field = Q;
        J.names = default_names(2);
        J.order = TermOrder::grevlex();
        auto P = rees_ideal_elimination(J, {px("x1", 2), px("x2", 2)});
        auto G = assoc_graded(P);
        auto gb = buchberger(G, G.order);
        // (A/I)[z1,z2] with A/I = k: dimension d+1 in degree d
        for (int d = 0; d <= 5; ++d) CHECK(hilbert_function(gb, d, 4) == d + 1);
    }
    SUBCASE("no relations in one variable") {
        auto P = rees_generators({}, 1);
        auto G = assoc_graded(P);
        auto gb = buchberger(G, G.order);
        for (int d = 0; d <= 5; ++d) CHECK(hilbert_function(gb, d, 2) == 1);
    }
}
