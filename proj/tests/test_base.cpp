#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ca/parse.hpp"
#include "ca/polynomial.hpp"

using namespace ca;

namespace {

const Field Q = Field::rationals();

Monomial mono(std::vector<std::int32_t> e) { return Monomial(std::move(e)); }

Polynomial parse3(const std::string& s, const TermOrder& o = TermOrder::grevlex()) {
    return parse_polynomial(s, {"x", "y", "z"}, Q, o);
}

Polynomial random_poly(std::mt19937_64& rng, int nvars, const Field& f, const TermOrder& o,
                       int maxdeg = 3, int nterms = 4) {
    std::vector<PolyTerm> terms;
    for (int t = 0; t < nterms; ++t) {
        std::vector<std::int32_t> e(nvars);
        int budget = static_cast<int>(rng() % (maxdeg + 1));
        for (int i = 0; i < nvars && budget > 0; ++i) {
            e[i] = static_cast<std::int32_t>(rng() % (budget + 1));
            budget -= e[i];
        }
        long c = static_cast<long>(rng() % 19) - 9;
        terms.push_back(PolyTerm{Scalar::from_int(f, c), Monomial(e)});
    }
    return Polynomial::from_terms(nvars, f, o, std::move(terms));
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
    Scalar a = Scalar::rational(2, 3), b = Scalar::rational(1, 6);
    CHECK(a + b == Scalar::rational(5, 6));
    CHECK(a * b == Scalar::rational(1, 9));
    CHECK((a - a).is_zero());
    CHECK(a.inverse() == Scalar::rational(3, 2));
    CHECK((a / b) == Scalar::from_int(Q, 4));
    CHECK(Scalar::rational(4, 8) == Scalar::rational(1, 2));
    CHECK(Scalar::rational(1, -2) == Scalar::rational(-1, 2));
    CHECK_THROWS_AS(Scalar::zero(Q).inverse(), Error);
}

TEST_CASE("prime field arithmetic") {
    Field F31 = Field::prime(31);
    for (long v = 1; v < 31; ++v) {
        Scalar s = Scalar::residue(31, v);
        CHECK(s * s.inverse() == Scalar::one(F31));
    }
    CHECK(Scalar::residue(31, -1) == Scalar::residue(31, 30));
    CHECK(Scalar::residue(31, 31).is_zero());
    CHECK_THROWS_AS(Field::prime(32), Error);
    CHECK_THROWS_AS(Scalar::one(Q) + Scalar::one(F31), Error);
}

TEST_CASE("monomial operations") {
    Monomial u = mono({2, 0, 1}), v = mono({1, 2, 0});
    CHECK(u.degree() == 3);
    CHECK((u * v) == mono({3, 2, 1}));
    CHECK(u.lcm(v) == mono({2, 2, 1}));
    CHECK_FALSE(u.divides(v));
    CHECK(mono({1, 0, 0}).divides(u));
    CHECK(u.divide_by(mono({1, 0, 1})) == mono({1, 0, 0}));
    CHECK_THROWS_AS(u.divide_by(v), Error);
    CHECK(mono({0, 2, 0}).coprime(mono({1, 0, 1})));
    CHECK_FALSE(u.coprime(v));
    CHECK_THROWS_AS(mono({-1, 0}), Error);
    CHECK(mono({1, 2, 0}).str({"x", "y", "z"}) == "x*y^2");
    CHECK(mono({0, 0, 0}).str({"x", "y", "z"}) == "1");
}

TEST_CASE("grevlex vs lex on the classic pairs") {
    TermOrder g = TermOrder::grevlex(), l = TermOrder::lex();
    // x*z^2 vs y^3: same degree; grevlex prefers the one avoiding the last variable.
    CHECK(g.compare(mono({0, 3, 0}), mono({1, 0, 2})) == Ordering::GT);
    CHECK(l.compare(mono({0, 3, 0}), mono({1, 0, 2})) == Ordering::LT);
    // degree dominates in grevlex, never in lex
    CHECK(g.compare(mono({0, 0, 3}), mono({1, 0, 0})) == Ordering::GT);
    CHECK(l.compare(mono({0, 0, 3}), mono({1, 0, 0})) == Ordering::LT);
    CHECK(g.compare(mono({1, 1, 0}), mono({1, 1, 0})) == Ordering::EQ);
}

TEST_CASE("order laws hold exhaustively in 3 vars up to degree 3") {
    std::vector<Monomial> all;
    for (int d = 0; d <= 3; ++d)
        enumerate_monomials(3, d, [&](const Monomial& m) { all.push_back(m); });
    std::vector<TermOrder> orders = {TermOrder::grevlex(), TermOrder::lex(), TermOrder::elim(1),
                                     TermOrder::weighted({3, 1, 1}),
                                     TermOrder::grevlex().with_priority({2, 0, 1})};
    for (auto& o : orders) {
        for (auto& u : all) {
            CHECK(o.compare(u, u) == Ordering::EQ);
            if (!u.is_one()) CHECK(o.compare(u, Monomial(3)) == Ordering::GT);
            for (auto& v : all) {
                auto uv = o.compare(u, v), vu = o.compare(v, u);
                if (uv == Ordering::EQ) {
                    CHECK(u == v);
                    continue;
                }
                CHECK((uv == Ordering::GT) == (vu == Ordering::LT));
                // multiplicative: scaling by w preserves the comparison
                for (auto& w : all) {
                    CHECK(o.compare(u * w, v * w) == uv);
                }
            }
        }
    }
}

TEST_CASE("elimination order separates the first block") {
    TermOrder e = TermOrder::elim(1);
    // any monomial containing x beats any x-free monomial
    CHECK(e.compare(mono({1, 0, 0}), mono({0, 5, 5})) == Ordering::GT);
    CHECK(e.compare(mono({0, 1, 0}), mono({1, 0, 0})) == Ordering::LT);
}

TEST_CASE("polynomial canonical form") {
    TermOrder g = TermOrder::grevlex();
    auto p = Polynomial::from_terms(3, Q, g,
                                    {PolyTerm{Scalar::from_int(Q, 2), mono({1, 0, 0})},
                                     PolyTerm{Scalar::from_int(Q, -2), mono({1, 0, 0})},
                                     PolyTerm{Scalar::one(Q), mono({0, 1, 0})}});
    CHECK(p.terms().size() == 1);
    CHECK(p.lead_mono() == mono({0, 1, 0}));
    CHECK(parse3("x + y - x") == parse3("y"));
    CHECK(parse3("0 * x").is_zero());
    CHECK(parse3("x*y - y*x").is_zero());
    CHECK(parse3("(x + y)^2") == parse3("x^2 + 2*x*y + y^2"));
    CHECK(parse3("x^2*y + x").degree() == 3);
    CHECK(Polynomial(3, Q, g).degree() == -1);
    CHECK(parse3("x^2 + y*z").is_homogeneous());
    CHECK_FALSE(parse3("x^2 + y").is_homogeneous());
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(2026);
    for (const Field& f : {Field::rationals(), Field::prime(31)}) {
        for (int trial = 0; trial < 40; ++trial) {
            TermOrder o = trial % 2 ? TermOrder::grevlex() : TermOrder::lex();
            auto a = random_poly(rng, 3, f, o), b = random_poly(rng, 3, f, o),
                 c = random_poly(rng, 3, f, o);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) CHECK(a.monic().lead_coeff().is_one());
        }
    }
}

TEST_CASE("reorder preserves the polynomial") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_poly(rng, 3, Q, TermOrder::grevlex());
        auto b = a.reorder(TermOrder::lex());
        CHECK(b.reorder(TermOrder::grevlex()) == a);
        CHECK((a.reorder(TermOrder::lex()) - b).is_zero());
    }
}

TEST_CASE("substitution is a ring map") {
    TermOrder g = TermOrder::grevlex();
    std::vector<Polynomial> images = {parse3("y + z"), parse3("x*z"), parse3("z")};
    std::mt19937_64 rng(11);
    auto a = random_poly(rng, 3, Q, g), b = random_poly(rng, 3, Q, g);
    CHECK((a * b).substitute(images) == a.substitute(images) * b.substitute(images));
    CHECK((a + b).substitute(images) == a.substitute(images) + b.substitute(images));
}

TEST_CASE("variable permutation relabels exponents") {
    auto p = parse3("x^2*y + z");
    // send x->z, y->x, z->y
    auto q = p.permute_vars({2, 0, 1});
    CHECK(q == parse3("z^2*x + y"));
}

TEST_CASE("bidegree of the x/y split") {
    std::vector<std::string> names = {"x1", "x2", "y1", "y2"};
    auto p = parse_polynomial("x1*y2 - x2*y1", names, Q, TermOrder::grevlex());
    auto bd = p.bidegree();
    REQUIRE(bd.has_value());
    CHECK(bd->a == 2);
    CHECK(bd->b == 1);
    auto mixed = parse_polynomial("x1*y2 - x2*x1", names, Q, TermOrder::grevlex());
    CHECK_FALSE(mixed.bidegree().has_value());
}

TEST_CASE("polynomial printing round-trips") {
    std::mt19937_64 rng(13);
    std::vector<std::string> names = {"x", "y", "z"};
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_poly(rng, 3, Q, TermOrder::grevlex());
        CHECK(parse3(a.str(names)) == a);
    }
    CHECK(parse3("-x - 1").str(names) == "-x - 1");
    CHECK(Polynomial(3, Q, TermOrder::grevlex()).str(names) == "0");
}

TEST_CASE("expression parser rejects garbage with positions") {
    std::vector<std::string> names = {"x", "y"};
    CHECK_THROWS_AS(parse_polynomial("x + w", names, Q, TermOrder::grevlex()), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x + ", names, Q, TermOrder::grevlex()), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x x", names, Q, TermOrder::grevlex()), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(x", names, Q, TermOrder::grevlex()), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0", names, Q, TermOrder::grevlex()), ParseError);
    try {
        parse_polynomial("x + q", names, Q, TermOrder::grevlex(), 5);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 5);
        CHECK(e.col == 5);
    }
}

TEST_CASE("ideal file format round-trips") {
    std::string text =
        "field q\n"
        "order revlex\n"
        "vars x1 x2 x3\n"
        "# the running example\n"
        "x1*x2 - x3^2\n";
    IdealPresentation I = parse_ideal(text);
    CHECK(I.nvars == 3);
    CHECK(I.gens.size() == 1);
    CHECK(I.homogeneous());
    CHECK(I.gens[0] ==
          parse_polynomial("x1*x2 - x3^2", I.names, Q, TermOrder::grevlex()));
    std::string printed = print_ideal(I);
    CHECK(print_ideal(parse_ideal(printed)) == printed);

    CHECK_THROWS_AS(parse_ideal("vars x\nx\n"), ParseError);        // no field
    CHECK_THROWS_AS(parse_ideal("field q\nvars x\nx - x\n"), ParseError);  // zero generator
    CHECK_THROWS_AS(parse_ideal("field z5\nvars x\n"), Error);
    IdealPresentation empty = parse_ideal("field fp:7\nvars a b\n");
    CHECK(empty.gens.empty());
    CHECK(empty.field == Field::prime(7));
}

TEST_CASE("two-block ideal files split on the separator") {
    std::string text =
        "field q\norder revlex\nvars x y\nx^2\n---\n"
        "field q\norder lex\nvars s t\ns - t\n";
    auto blocks = parse_ideal_blocks(text);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].gens.size() == 1);
    CHECK(blocks[1].names == std::vector<std::string>{"s", "t"});
    CHECK(blocks[1].order == TermOrder::lex());
}

TEST_CASE("facet list parsing enforces the antichain") {
    ComplexFileData c = parse_complex("vertices 7\n1 2 3\n4 5 6\n5 6 7\n");
    CHECK(c.vertices == 7);
    CHECK(c.facets.size() == 3);
    CHECK(print_complex(parse_complex(print_complex(c))) == print_complex(c));
    CHECK_THROWS_AS(parse_complex("vertices 3\n1 2 3\n2 3\n"), Error);
    CHECK_THROWS_AS(parse_complex("vertices 2\n1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_complex("1 2\n"), ParseError);
}

TEST_CASE("field and order specs round-trip") {
    for (const std::string& s : {"q", "fp:31"}) CHECK(field_spec(parse_field_spec(s)) == s);
    for (const std::string& s : {"revlex", "lex", "elim:2", "weighted:1,2,3"})
        CHECK(order_spec(parse_order_spec(s)) == s);
    CHECK_THROWS_AS(parse_field_spec("r"), Error);
    CHECK_THROWS_AS(parse_order_spec("deglex"), Error);
}
