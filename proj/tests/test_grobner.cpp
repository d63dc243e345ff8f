#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ska/colon.hpp"
#include "ska/grobner.hpp"
#include "ska/hilbert.hpp"
#include "ska/parser.hpp"
#include "ska/rng.hpp"

using namespace ska;

namespace {

IdealPresentation remark_ideal() {
    return parse_ideal_text(
        "vars: x1, x2, x3\nfield: QQ\nx1*x3 - x2^2\nx2*x3\nx3^2\n");
}

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

std::vector<std::string> basis_strings(const GroebnerBasis& gb) {
    std::vector<std::string> out;
    for (const auto& g : gb.polys) out.push_back(g.str());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("normal form basics") {
    auto I = remark_ideal();
    auto r = I.ring;
    auto ord = MonomialOrder::revlex({0, 1, 2});

    // single-step division computed by hand
    std::vector<Polynomial> G = {P(r, "x2^2 - x1*x3")};
    CHECK(normal_form(P(r, "x2^2"), G, ord) == P(r, "x1*x3"));

    // NF against an unrelated variable leaves f alone
    std::vector<Polynomial> G2 = {P(r, "x2")};
    CHECK(normal_form(P(r, "x1"), G2, ord) == P(r, "x1"));

    // member of the ideal reduces to zero against its GB
    GroebnerBasis gb = buchberger(I, ord);
    Polynomial member = P(r, "x1*(x1*x3 - x2^2) + x2*(x2*x3)");
    CHECK(normal_form(member, gb.polys, ord).is_zero());
}

TEST_CASE("buchberger: quadratic reduced GB under x1>x2>x3") {
    auto I = remark_ideal();
    GroebnerBasis gb = buchberger(I, MonomialOrder::revlex({0, 1, 2}));
    auto strs = basis_strings(gb);
    CHECK(strs == std::vector<std::string>{"x2*x3", "x2^2 - x1*x3", "x3^2"});
    for (const auto& g : gb.polys) CHECK(g.degree() == 2);
}

TEST_CASE("buchberger: cubic x2^3 appears under x3>x1>x2") {
    auto I = remark_ideal();
    auto ord = MonomialOrder::revlex({2, 0, 1});
    GroebnerBasis gb = buchberger(I, ord);
    bool has_cube = false;
    for (const auto& g : gb.polys)
        if (g == P(I.ring, "x2^3")) has_cube = true;
    CHECK(has_cube);
    MonomialIdeal in = initial_ideal(I, ord);
    bool cube_minimal = false;
    for (const auto& m : in.min_gens)
        if (m == P(I.ring, "x2^3").terms()[0].mon) cube_minimal = true;
    CHECK(cube_minimal);
}

TEST_CASE("buchberger: monomial generators minimalize to themselves") {
    auto I = parse_ideal_text("vars: x, y, z\nfield: QQ\nx*y\nx*y*z\ny^2\n");
    GroebnerBasis gb = buchberger(I, MonomialOrder::grevlex(3));
    CHECK(basis_strings(gb) == std::vector<std::string>{"x*y", "y^2"});
}

TEST_CASE("reduced GB is invariant under generator shuffling") {
    auto I = remark_ideal();
    auto ord = MonomialOrder::revlex({0, 1, 2});
    auto base = basis_strings(buchberger(I, ord));
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        auto gens = I.gens;
        auto perm = rng.permutation(gens.size());
        std::vector<Polynomial> shuffled;
        for (size_t i = 0; i < gens.size(); ++i) shuffled.push_back(gens[perm[i]]);
        // also rescale randomly: reduced monic GB must not care
        for (auto& g : shuffled) g = g.scaled(I.ring->field().from_long(rng.int_in(1, 7)));
        IdealPresentation J(I.ring, shuffled);
        CHECK(basis_strings(buchberger(J, ord)) == base);
    }
}

TEST_CASE("is_groebner_basis") {
    auto I = remark_ideal();
    auto r = I.ring;
    // monomial sets are their own GB under every order
    std::vector<Polynomial> monos = {P(r, "x1*x2"), P(r, "x3^2"), P(r, "x1^2*x3")};
    CHECK(is_groebner_basis(monos, MonomialOrder::revlex({1, 2, 0})));

    CHECK(is_groebner_basis(buchberger(I, MonomialOrder::revlex({0, 1, 2})).polys,
                            MonomialOrder::revlex({0, 1, 2})));

    std::optional<SPairWitness> w;
    CHECK_FALSE(is_groebner_basis(I.gens, MonomialOrder::revlex({2, 0, 1}), &w));
    REQUIRE(w.has_value());
    CHECK(w->remainder == P(r, "-x2^3"));
}

TEST_CASE("initial ideal examples") {
    auto I = remark_ideal();
    auto ord = MonomialOrder::revlex({0, 1, 2});
    MonomialIdeal in = initial_ideal(I, ord);
    std::vector<std::string> lm;
    for (const auto& m : in.min_gens)
        lm.push_back(Polynomial::monomial(I.ring, m, I.ring->field().one()).str());
    std::sort(lm.begin(), lm.end());
    CHECK(lm == std::vector<std::string>{"x2*x3", "x2^2", "x3^2"});

    auto principal = parse_ideal_text("vars: x1, x2, x3\nfield: QQ\nx1*x3 - x2^2\n");
    MonomialIdeal inp = initial_ideal(principal, ord);
    REQUIRE(inp.min_gens.size() == 1);
    CHECK(inp.min_gens[0] == P(I.ring, "x2^2").terms()[0].mon);
}

TEST_CASE("hilbert function examples") {
    auto clebsch = parse_ideal_text(
        "vars: x, y, z, t\nfield: QQ\n"
        "x^2 - y*z\ny^2 - z*t\nz^2 - t*x\nt^2 - x*y\nx*z\ny*t\n");
    CHECK(hilbert_function(clebsch, 0, 4) == std::vector<long>{1, 4, 4, 1, 0});

    auto nonhom = parse_ideal_text("vars: x, y\nfield: QQ\nx^2 - y\n");
    CHECK_THROWS(hilbert_function(nonhom, 0, 2));
}

TEST_CASE("hilbert function agrees across orders (Macaulay consistency)") {
    auto I = remark_ideal();
    auto hf = hilbert_function(I, 0, 5);
    CHECK(hf == hilbert_function(I, 0, 5, MonomialOrder::revlex({2, 0, 1})));
    CHECK(hf == hilbert_function(I, 0, 5, MonomialOrder::lex({0, 1, 2})));
    CHECK(hf == hilbert_function(I, 0, 5, MonomialOrder::lex({1, 2, 0})));
}

TEST_CASE("initial ideal of I + (lowest variables) splits (revlex lemma)") {
    auto I = remark_ideal();
    // Y = {x3} is lowest under x1>x2>x3
    auto ord = MonomialOrder::revlex({0, 1, 2});
    auto IY = plus_variables(I, {2});
    MonomialIdeal left = initial_ideal(IY, ord);
    MonomialIdeal right_src = initial_ideal(I, ord);
    std::vector<Monomial> right = right_src.min_gens;
    right.push_back(Monomial::variable(3, 2));
    MonomialIdeal expect = minimalize_monomials(std::move(right));
    CHECK(left.min_gens == expect.min_gens);
}

TEST_CASE("colon ideal examples") {
    auto r2 = make_ring({"x", "y"}, Field::rationals());
    IdealPresentation I(r2, {P(r2, "x^2 - x*y")});
    auto colon = colon_by_polynomial(I, P(r2, "x"));
    REQUIRE(colon.size() == 1);
    CHECK(colon[0] == P(r2, "x - y"));

    // f in I gives the unit ideal
    auto colon2 = colon_by_polynomial(I, P(r2, "x^2 - x*y"));
    REQUIRE(colon2.size() == 1);
    CHECK(colon2[0] == Polynomial::constant(r2, r2->field().one()));

    IdealPresentation J(r2, {P(r2, "x^2"), P(r2, "x*y")});
    auto colon3 = colon_by_polynomial(J, P(r2, "x"));
    std::vector<std::string> strs;
    for (const auto& g : colon3) strs.push_back(g.str());
    std::sort(strs.begin(), strs.end());
    CHECK(strs == std::vector<std::string>{"x", "y"});
}

TEST_CASE("colon correctness oracle: f*h in I for every returned generator") {
    GbCache cache;
    auto I = remark_ideal();
    auto r = I.ring;
    for (const std::string& fs : {"x1", "x2", "x3", "x2 + x3", "x1*x2"}) {
        Polynomial f = P(r, fs);
        for (const auto& h : colon_by_polynomial(I, f)) CHECK(membership(f * h, I, cache));
    }
}

TEST_CASE("eliminate examples") {
    auto r = make_ring({"t", "x", "y"}, Field::rationals());
    IdealPresentation I(r, {P(r, "t*x"), P(r, "(1-t)*y")});
    auto E = eliminate(I, {0});
    REQUIRE(E.gens.size() == 1);
    CHECK(E.gens[0] == P(r, "x*y"));

    auto E0 = eliminate(I, {});
    CHECK(E0.gens.size() == I.gens.size());

    IdealPresentation J(r, {P(r, "t - x")});
    CHECK(eliminate(J, {0}).gens.empty());
}

TEST_CASE("is_artinian") {
    auto J = parse_ideal_text(
        "vars: x, y, z, t\nfield: QQ\n"
        "x^2 + 2*y*z\ny^2 + 2*z*t\nz^2 + 2*t*x\nt^2 + 2*x*y\n");
    CHECK(is_artinian(J));
    CHECK(socle_degree(J) == 4);

    CHECK_FALSE(is_artinian(parse_ideal_text("vars: x, y\nfield: QQ\nx*y\n")));
    CHECK(is_artinian(parse_ideal_text("vars: x, y\nfield: QQ\nx^2\ny^2\n")));
}

TEST_CASE("membership examples") {
    GbCache cache;
    auto I = remark_ideal();
    auto r = I.ring;
    CHECK(membership(P(r, "x1*x3 - x2^2"), I, cache));
    CHECK(membership(P(r, "x2^3"), I, cache));
    IdealPresentation X(r, {P(r, "x1")});
    CHECK_FALSE(membership(Polynomial::constant(r, r->field().one()), X, cache));
}

TEST_CASE("buchberger oracle: random members reduce to zero, remainders rejoin") {
    Rng rng(2024);
    for (int inst = 0; inst < 60; ++inst) {
        size_t n = 2 + rng.below(3);
        bool modp = rng.below(2) == 0;
        Field F = modp ? Field::prime(32003) : Field::rationals();
        RingPtr r = make_ring_xn(n, F);
        auto random_poly = [&](uint32_t maxdeg) {
            Polynomial f = Polynomial::zero(r);
            int terms = 1 + static_cast<int>(rng.below(4));
            for (int t = 0; t < terms; ++t) {
                std::vector<uint32_t> e(n, 0);
                uint32_t d = 1 + static_cast<uint32_t>(rng.below(maxdeg));
                for (uint32_t k = 0; k < d; ++k) e[rng.below(n)] += 1;
                long c = rng.int_in(-4, 4);
                if (c == 0) c = 1;
                f = f + Polynomial::monomial(r, Monomial(e), F.from_long(c));
            }
            return f;
        };
        std::vector<Polynomial> gens;
        for (int g = 0; g < 3; ++g) {
            Polynomial p = random_poly(2);
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        IdealPresentation I(r, gens);
        auto ord = MonomialOrder::grevlex(n);
        GroebnerBasis gb = buchberger(I, ord);
        CHECK(is_groebner_basis(gb.polys, ord));

        // random combination of generators is a member
        Polynomial comb = Polynomial::zero(r);
        for (const auto& g : gens) comb = comb + g * random_poly(2);
        CHECK(normal_form(comb, gb.polys, ord).is_zero());

        // f - NF(f) is always a member
        Polynomial f = random_poly(3);
        Polynomial nf = normal_form(f, gb.polys, ord);
        CHECK(normal_form(f - nf, gb.polys, ord).is_zero());
    }
}

TEST_CASE("gb cache returns the identical basis object") {
    GbCache cache;
    auto I = remark_ideal();
    auto a = cache.get_ref(I);
    auto b = cache.get_ref(I);
    CHECK(a.get() == b.get());
}
