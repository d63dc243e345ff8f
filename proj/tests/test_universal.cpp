#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ska/gallery.hpp"
#include "ska/parser.hpp"
#include "ska/universal.hpp"

using namespace ska;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

}  // namespace

TEST_CASE("permutation unranking is lexicographic") {
    CHECK(unrank_permutation(0, 3) == std::vector<int>{0, 1, 2});
    CHECK(unrank_permutation(1, 3) == std::vector<int>{0, 2, 1});
    CHECK(unrank_permutation(5, 3) == std::vector<int>{2, 1, 0});
    CHECK(factorial(9) == 362880);
}

TEST_CASE("2-minors of the generic 2x3 matrix: exhaustive universal, tidy, quadratic") {
    auto I = minors2(MatrixShape::generic(2, 3), Field::rationals());
    CHECK(I.gens.size() == 3);
    UniversalOptions opts;
    opts.jobs = 2;
    auto rep = check_revlex_universal(I.gens, opts);
    CHECK(rep.universal);
    CHECK(rep.is_tidy_set);
    CHECK(rep.is_quadratic);
    CHECK(rep.orders_checked == 720);
}

TEST_CASE("the three-variable gap ideal is not revlex-universal, witness re-checks") {
    auto I = parse_ideal_text("vars: x1, x2, x3\nfield: QQ\nx1*x3 - x2^2\nx2*x3\nx3^2\n");
    UniversalOptions opts;
    auto rep = check_revlex_universal(I.gens, opts);
    CHECK_FALSE(rep.universal);
    REQUIRE(rep.witness.has_value());
    // witness must fail deterministically on re-run
    CHECK_FALSE(is_groebner_basis(I.gens, MonomialOrder::revlex(rep.witness->ranked)));
    // least failing ascending word is x2 < x1 < x3, i.e. ranking x3 > x1 > x2
    CHECK(rep.witness->ranked == std::vector<int>{2, 0, 1});
}

TEST_CASE("monomial generating sets are universal") {
    auto r = make_ring({"x", "y", "z"}, Field::rationals());
    std::vector<Polynomial> G = {P(r, "x*y"), P(r, "y*z"), P(r, "x^2*z")};
    UniversalOptions opts;
    auto rep = check_revlex_universal(G, opts);
    CHECK(rep.universal);
    CHECK(rep.is_tidy_set);
    CHECK_FALSE(rep.is_quadratic);
}

TEST_CASE("exhaustive cap is enforced") {
    auto I = minors2(MatrixShape::generic(2, 5), Field::rationals());
    UniversalOptions opts;
    opts.exhaustive_cap = 9;
    CHECK(I.ring->arity() == 10);
    CHECK_THROWS(check_revlex_universal(I.gens, opts));
    opts.mode = SweepMode::sampled;
    opts.sample_count = 25;
    auto rep = check_revlex_universal(I.gens, opts);
    CHECK(rep.universal);
    CHECK(rep.orders_checked == 25);
}

TEST_CASE("sampled mode is reproducible and witnesses re-check") {
    auto I = parse_ideal_text("vars: x1, x2, x3\nfield: QQ\nx1*x3 - x2^2\nx2*x3\nx3^2\n");
    UniversalOptions opts;
    opts.mode = SweepMode::sampled;
    opts.sample_count = 50;
    opts.seed = 42;
    auto rep1 = check_revlex_universal(I.gens, opts);
    auto rep2 = check_revlex_universal(I.gens, opts);
    CHECK_FALSE(rep1.universal);
    REQUIRE(rep1.witness.has_value());
    REQUIRE(rep2.witness.has_value());
    CHECK(rep1.witness->ranked == rep2.witness->ranked);
    CHECK_FALSE(is_groebner_basis(I.gens, MonomialOrder::revlex(rep1.witness->ranked)));
}

TEST_CASE("projection: Y empty leaves G unchanged") {
    auto I = minors2(MatrixShape::generic(2, 3), Field::rationals());
    auto proj = project_universal_gb(I.gens, {});
    CHECK(proj == I.gens);
}

TEST_CASE("projection of 3x3 generic minors = sparse minors with that zero") {
    Field F = Field::rationals();
    auto dense = minors2(MatrixShape::generic(3, 3), F);
    int killed = dense.ring->index_of("x12");
    REQUIRE(killed >= 0);
    auto proj = project_universal_gb(dense.gens, {killed});
    auto sparse = minors2(MatrixShape::generic(3, 3, {{1, 2}}), F);

    // same generator sets up to sign and order (monic ref normalization)
    auto canon = [](std::vector<Polynomial> v) {
        std::vector<std::string> s;
        for (auto& p : v) s.push_back(p.monic_ref().str());
        std::sort(s.begin(), s.end());
        return s;
    };
    // compare in the sparse ring: reinterpret projected polys by variable name
    std::vector<Polynomial> proj_sparse;
    for (const auto& p : proj) {
        std::vector<Term> terms;
        for (const auto& t : p.terms()) {
            std::vector<uint32_t> e(sparse.ring->arity(), 0);
            for (size_t v = 0; v < dense.ring->arity(); ++v)
                if (t.mon[v] > 0) e[static_cast<size_t>(sparse.ring->index_of(dense.ring->var_name(v)))] = t.mon[v];
            terms.push_back(Term{Monomial(std::move(e)), t.coeff});
        }
        proj_sparse.push_back(Polynomial(sparse.ring, std::move(terms)));
    }
    CHECK(canon(proj_sparse) == canon(sparse.gens));

    // tidiness is preserved by projection
    CHECK(is_tidy_set(proj));
    UniversalOptions opts;
    opts.mode = SweepMode::sampled;
    opts.sample_count = 60;
    opts.jobs = 2;
    CHECK(check_revlex_universal(proj, opts).universal);
}

TEST_CASE("hankel minors project to the three-variable gap ideal") {
    Field F = Field::rationals();
    auto hk = minors2(MatrixShape::hankel(2, 4), F);
    CHECK(hk.ring->arity() == 5);
    std::vector<int> Y = {hk.ring->index_of("x4"), hk.ring->index_of("x5")};
    auto proj = project_universal_gb(hk.gens, Y);
    std::vector<std::string> strs;
    for (auto& p : proj) strs.push_back(p.monic_ref().str());
    std::sort(strs.begin(), strs.end());
    CHECK(strs == std::vector<std::string>{"x2*x3", "x2^2 - x1*x3", "x3^2"});
}

TEST_CASE("symmetric 3x3 minors: exhaustive universal (720 orders)") {
    auto I = minors2(MatrixShape::symmetric(3), Field::rationals());
    CHECK(I.ring->arity() == 6);
    CHECK(I.gens.size() == 6);
    UniversalOptions opts;
    opts.jobs = 2;
    auto rep = check_revlex_universal(I.gens, opts);
    CHECK(rep.universal);
    CHECK(rep.is_tidy_set);
    CHECK(rep.is_quadratic);
}

TEST_CASE("tidy set examples") {
    auto sym = minors2(MatrixShape::symmetric(3), Field::rationals());
    CHECK(is_tidy_set(sym.gens));
    auto r = make_ring({"x", "y"}, Field::rationals());
    CHECK_FALSE(is_tidy_set({P(r, "x^2 + x*y")}));
    CHECK(is_tidy_set({}));
}
