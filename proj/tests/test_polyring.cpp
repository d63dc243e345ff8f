#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ska/parser.hpp"
#include "ska/polynomial.hpp"
#include "ska/rng.hpp"

using namespace ska;

namespace {

RingPtr ring3() { return make_ring({"x1", "x2", "x3"}, Field::rationals()); }

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

Monomial mono(const RingPtr& r, const std::string& s) {
    Polynomial p = P(r, s);
    REQUIRE(p.size() == 1);
    return p.terms().front().mon;
}

}  // namespace

TEST_CASE("field arithmetic: rationals stay canonical") {
    Field F = Field::rationals();
    Scalar a = F.from_fraction("2", "4");
    CHECK(F.str(a) == "1/2");
    Scalar b = F.add(a, F.from_fraction("1", "2"));
    CHECK(F.is_one(b));
    CHECK(F.str(F.div(F.from_long(-3), F.from_long(6))) == "-1/2");
    CHECK_THROWS(F.div(F.one(), F.zero()));
}

TEST_CASE("field arithmetic: GF(p)") {
    Field F = Field::prime(32003);
    Scalar a = F.from_long(-1);
    CHECK(F.str(a) == "32002");
    CHECK(F.is_one(F.mul(a, a)));
    Scalar inv7 = F.inv(F.from_long(7));
    CHECK(F.is_one(F.mul(inv7, F.from_long(7))));
    CHECK_THROWS(Field::prime(32004));
    Field F2 = Field::prime(2);
    CHECK(F2.is_zero(F2.add(F2.one(), F2.one())));
}

TEST_CASE("revlex compare: x1x3 vs x2^2 under x1>x2>x3 is LT") {
    auto r = ring3();
    auto ord = MonomialOrder::revlex({0, 1, 2});
    CHECK(ord.compare(mono(r, "x1*x3"), mono(r, "x2^2")) < 0);
    CHECK(ord.compare(mono(r, "x2^2"), mono(r, "x2^2")) == 0);
}

TEST_CASE("revlex compare: x1x3 vs x2^2 under x3>x1>x2 is GT") {
    auto r = ring3();
    auto ord = MonomialOrder::revlex({2, 0, 1});
    CHECK(ord.compare(mono(r, "x1*x3"), mono(r, "x2^2")) > 0);
}

TEST_CASE("compare rejects arity mismatch") {
    auto ord = MonomialOrder::revlex({0, 1, 2});
    Monomial a({1, 0});
    Monomial b({0, 1, 0});
    CHECK_THROWS(ord.compare(a, b));
}

TEST_CASE("graded orders refine divisibility") {
    Rng rng(7);
    auto r = ring3();
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<uint32_t> e1(3), e2(3);
        for (int i = 0; i < 3; ++i) {
            e1[i] = static_cast<uint32_t>(rng.below(4));
            e2[i] = e1[i] + static_cast<uint32_t>(rng.below(3));
        }
        Monomial a(e1), b(e2);
        if (a == b) continue;
        auto perm = rng.permutation(3);
        std::vector<int> ranked(perm.begin(), perm.end());
        CHECK(MonomialOrder::revlex(ranked).compare(a, b) < 0);
        CHECK(MonomialOrder::lex(ranked).compare(a, b) < 0);
    }
}

TEST_CASE("block order puts front variables first") {
    auto ord = MonomialOrder::block_eliminate({2}, MonomialOrder::grevlex(3));
    Monomial x3({0, 0, 1});
    Monomial x1sq({2, 0, 0});
    CHECK(ord.compare(x3, x1sq) > 0);
}

TEST_CASE("polynomial arithmetic and printing are canonical") {
    auto r = ring3();
    Polynomial f = P(r, "x1*x3 - x2^2");
    // canonical print order is descending grevlex, and x2^2 > x1*x3 there
    CHECK(f.str() == "-x2^2 + x1*x3");
    CHECK((f - f).is_zero());
    CHECK((f * f).str() == "x2^4 - 2*x1*x2^2*x3 + x1^2*x3^2");
    CHECK(parse_polynomial(f.str(), r) == f);
    Polynomial g = P(r, "(x1 + x2)^2");
    CHECK(g.str() == "x1^2 + 2*x1*x2 + x2^2");
    CHECK_THROWS(Polynomial::zero(r).degree());
}

TEST_CASE("parse rejects juxtaposition and unknown names") {
    auto r = ring3();
    CHECK_THROWS(P(r, "x1 x2"));
    CHECK_THROWS(P(r, "2x1"));
    CHECK_THROWS(P(r, "y"));
    CHECK(P(r, "3/4*x1 - 1/4*x1").str() == "1/2*x1");
}

TEST_CASE("is_tidy") {
    auto r = ring3();
    CHECK(P(r, "x1*x3 - x2^2").is_tidy());
    CHECK_FALSE(P(r, "x1^2 + x1*x2").is_tidy());
    CHECK(Polynomial::zero(r).is_tidy());
    CHECK(P(r, "x1*x2*x3").is_tidy());
    // scaling by a nonzero constant preserves tidiness
    CHECK(P(r, "7*x1*x3 - 5*x2^2").is_tidy());

    auto r4 = make_ring({"x14", "x23", "x13", "x24"}, Field::rationals());
    CHECK(P(r4, "x14*x23 + x13*x24").is_tidy());
}

TEST_CASE("substitute_linear expands and respects identity") {
    auto r2 = make_ring({"x", "y"}, Field::rationals());
    Polynomial f = P(r2, "x^2 - y^2");
    std::vector<std::optional<Polynomial>> images(2);
    images[0] = P(r2, "x + y");
    CHECK(f.substitute(images) == P(r2, "x^2 + 2*x*y"));

    std::vector<std::optional<Polynomial>> id(2);
    CHECK(f.substitute(id) == f);
}

TEST_CASE("substitute_linear: invertible map then its inverse is the identity") {
    Rng rng(11);
    auto r = ring3();
    const Field& F = r->field();
    for (int trial = 0; trial < 25; ++trial) {
        // unit upper-triangular with random integer entries: exactly invertible
        std::vector<std::vector<long>> U(3, std::vector<long>(3, 0));
        for (int i = 0; i < 3; ++i) {
            U[i][i] = 1;
            for (int j = i + 1; j < 3; ++j) U[i][j] = static_cast<long>(rng.below(5)) - 2;
        }
        // inverse of a unit upper-triangular integer matrix is integral
        std::vector<std::vector<long>> V(3, std::vector<long>(3, 0));
        for (int i = 2; i >= 0; --i) {
            V[i][i] = 1;
            for (int j = i + 1; j < 3; ++j) {
                long s = 0;
                for (int k = i + 1; k <= j; ++k) s += U[i][k] * V[k][j];
                V[i][j] = -s;
            }
        }
        auto to_map = [&](const std::vector<std::vector<long>>& M) {
            std::vector<std::optional<Polynomial>> images(3);
            for (int i = 0; i < 3; ++i) {
                Polynomial im = Polynomial::zero(r);
                for (int j = 0; j < 3; ++j)
                    im = im + Polynomial::variable(r, j).scaled(F.from_long(M[i][j]));
                images[i] = im;
            }
            return images;
        };
        Polynomial f = Polynomial::zero(r);
        for (int t = 0; t < 4; ++t) {
            std::vector<uint32_t> e(3, 0);
            e[rng.below(3)] += 1;
            e[rng.below(3)] += 1;
            f = f + Polynomial::monomial(r, Monomial(e), F.from_long(static_cast<long>(rng.below(9)) - 4));
        }
        CHECK(f.substitute(to_map(U)).substitute(to_map(V)) == f);
    }
}

TEST_CASE("set variables to zero") {
    auto r = ring3();
    Polynomial f = P(r, "x1*x3 - x2^2");
    auto mask = variable_mask(*r, {2});
    CHECK(f.kill_variables(mask) == P(r, "-x2^2"));
    CHECK(P(r, "x1*x3").kill_variables(mask).is_zero());
}

TEST_CASE("projection commutes with sums and products") {
    Rng rng(3);
    auto r = ring3();
    const Field& F = r->field();
    auto random_poly = [&]() {
        Polynomial f = Polynomial::zero(r);
        for (int t = 0; t < 5; ++t) {
            std::vector<uint32_t> e(3);
            for (auto& x : e) x = static_cast<uint32_t>(rng.below(3));
            f = f + Polynomial::monomial(r, Monomial(e), F.from_long(static_cast<long>(rng.below(7)) - 3));
        }
        return f;
    };
    auto mask = variable_mask(*r, {1});
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial f = random_poly(), g = random_poly();
        CHECK((f + g).kill_variables(mask) == f.kill_variables(mask) + g.kill_variables(mask));
        CHECK((f * g).kill_variables(mask) == f.kill_variables(mask) * g.kill_variables(mask));
    }
}

TEST_CASE("ideal file round-trip") {
    std::string text =
        "# gallery ideal\n"
        "vars: x1, x2, x3\n"
        "field: QQ\n"
        "x1*x3 - x2^2\n"
        "x2*x3\n"
        "x3^2\n";
    IdealPresentation I = parse_ideal_text(text);
    CHECK(I.arity() == 3);
    CHECK(I.gens.size() == 3);
    CHECK(I.is_homogeneous());
    IdealPresentation J = parse_ideal_text(I.to_text());
    CHECK(J.to_text() == I.to_text());
    CHECK(J.fingerprint() == I.fingerprint());
}

TEST_CASE("ideal parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_ideal_text("vars: x\nfield: QQ\nx +\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal_text("field: QQ\nx\n"), ParseError);
    CHECK_THROWS(parse_ideal_text("vars: x\nfield: RR\nx\n"));
}

TEST_CASE("GF(p) ideal text") {
    IdealPresentation I = parse_ideal_text("vars: x, y\nfield: GF(7)\nx^2 + 6*y^2\n");
    CHECK(I.ring->field().characteristic() == 7);
    CHECK(I.gens[0].str() == "x^2 + 6*y^2");
}

TEST_CASE("print/parse round-trips on random polynomials") {
    Rng rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        size_t n = 1 + rng.below(5);
        bool modp = rng.below(3) == 0;
        Field F = modp ? Field::prime(7) : Field::rationals();
        RingPtr r = make_ring_xn(n, F);
        Polynomial f = Polynomial::zero(r);
        int terms = static_cast<int>(rng.below(6));
        for (int t = 0; t < terms; ++t) {
            std::vector<uint32_t> e(n, 0);
            uint32_t d = static_cast<uint32_t>(rng.below(5));
            for (uint32_t k = 0; k < d; ++k) e[rng.below(n)] += 1;
            Scalar c = modp ? F.from_long(rng.int_in(0, 6))
                            : F.from_fraction(std::to_string(rng.int_in(-12, 12)),
                                              std::to_string(rng.int_in(1, 9)));
            f = f + Polynomial::monomial(r, Monomial(e), c);
        }
        CHECK(parse_polynomial(f.str(), r) == f);
    }
}
