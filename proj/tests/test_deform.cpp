#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tdeform/catalog.hpp"

using namespace tdeform;

namespace {

struct Algebras {
    std::unique_ptr<CatalogEntry> su2 = build_su2_bundle();
    std::unique_ptr<CatalogEntry> so1 = build_so_theta(1);
    std::vector<std::pair<const CatalogEntry*, char>> all() const {
        std::vector<std::pair<const CatalogEntry*, char>> v;
        for (const CatalogEntry* e : {su2.get(), so1.get()})
            for (char c : {'A', 'H', 'B'}) v.push_back({e, c});
        return v;
    }
};

const Algebras& algebras() {
    static Algebras a;
    return a;
}

const Presentation& undeformed(const CatalogEntry& e, char c) {
    return c == 'A' ? *e.A0 : c == 'H' ? *e.H0 : *e.B0;
}

NCPoly random_element(const Presentation& p, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> len(0, 3);
    return NCPoly::word(random_word(p, len(rng), rng));
}

}  // namespace

TEST_CASE("normal form is idempotent and respects products") {
    std::mt19937_64 rng(21);
    for (auto [e, c] : algebras().all()) {
        const Presentation* p = e->algebra(c);
        for (int s = 0; s < 40; ++s) {
            NCPoly x = random_element(*p, rng), y = random_element(*p, rng), z = random_element(*p, rng);
            NCPoly xy = p->mul(x, y);
            CHECK(p->normal_form(xy) == xy);
            CHECK(p->mul(xy, z) == p->mul(x, p->mul(y, z)));
        }
    }
}

TEST_CASE("star is an involutive antihomomorphism") {
    std::mt19937_64 rng(22);
    for (auto [e, c] : algebras().all()) {
        const Presentation* p = e->algebra(c);
        for (int s = 0; s < 30; ++s) {
            NCPoly x = random_element(*p, rng), y = random_element(*p, rng);
            CHECK(p->star(p->star(x)) == x);
            CHECK(p->star(p->mul(x, y)) == p->mul(p->star(y), p->star(x)));
        }
    }
}

TEST_CASE("deformed product is associative on homogeneous triples") {
    std::mt19937_64 rng(23);
    for (auto [e, c] : algebras().all()) {
        const Presentation& p = undeformed(*e, c);
        for (int s = 0; s < 60; ++s) {
            NCPoly x = random_element(p, rng), y = random_element(p, rng), z = random_element(p, rng);
            CHECK(deform_product(e->ctx, p, deform_product(e->ctx, p, x, y), z) ==
                  deform_product(e->ctx, p, x, deform_product(e->ctx, p, y, z)));
        }
    }
}

TEST_CASE("deforming by theta then -theta restores the product") {
    std::mt19937_64 rng(24);
    for (auto [e, c] : algebras().all()) {
        const Presentation& p = undeformed(*e, c);
        DeformationContext neg = e->ctx.negated();
        for (int s = 0; s < 60; ++s) {
            Word a = random_word(p, 2, rng), b = random_word(p, 2, rng);
            NCPoly x = NCPoly::word(a), y = NCPoly::word(b);
            NCPoly back = deform_product(neg, p, x, y) * PhaseScalar(e->ctx.lambda(p.word_degree(a), p.word_degree(b)));
            CHECK(back == p.mul(x, y));
        }
    }
}

TEST_CASE("deformed presentation agrees with the deformed product") {
    std::mt19937_64 rng(25);
    for (auto [e, c] : algebras().all()) {
        const Presentation& p0 = undeformed(*e, c);
        const Presentation& pd = *e->algebra(c);
        for (int s = 0; s < 60; ++s) {
            NCPoly x = random_element(p0, rng), y = random_element(p0, rng);
            NCPoly viaPd = to_undeformed(pd, pd.mul(from_undeformed(pd, x), from_undeformed(pd, y)));
            CHECK(viaPd == deform_product(e->ctx, p0, x, y));
        }
    }
}

TEST_CASE("theta = 0 gives the commutative product") {
    std::mt19937_64 rng(26);
    for (auto [e, c] : algebras().all()) {
        const Presentation& p = undeformed(*e, c);
        CHECK(p.commutative());
        DeformationContext zero{e->ctx.scenario, ThetaMatrix(e->ctx.theta.dim())};
        CHECK(deformed_presentation(zero, p).commutative());
        for (int s = 0; s < 40; ++s) {
            NCPoly x = random_element(p, rng), y = random_element(p, rng);
            CHECK(deform_product(zero, p, x, y) == p.mul(x, y));
            CHECK(p.mul(x, y) == p.mul(y, x));
        }
    }
}

TEST_CASE("degree-zero and opposite-degree products are undeformed") {
    std::mt19937_64 rng(27);
    for (auto [e, c] : algebras().all()) {
        CheckReport r = check_same_degree_product(e->ctx, undeformed(*e, c), 50, rng);
        CHECK(r.items.size() == 50);
        CHECK(r.all_equal());
    }
}

TEST_CASE("four-sphere commutation: zeta1 zeta2 = q^4 zeta2 zeta1 from the psi relations") {
    const CatalogEntry& e = *algebras().su2;
    const Presentation& A = *e.A;
    const NCPoly &z1 = e.base.at("zeta1"), &z2 = e.base.at("zeta2");
    CHECK(A.mul(z1, z2) == A.mul(z2, z1) * PhaseScalar::q(1, 2, 4));
    CHECK(A.mul(z1, A.star(z2)) == A.mul(A.star(z2), z1) * PhaseScalar::q(1, 2, -4));
    // zeta1* zeta1 + zeta2* zeta2 = zeta0 (1 - zeta0)
    const NCPoly& z0 = e.base.at("zeta0");
    CHECK(A.mul(A.star(z1), z1) + A.mul(A.star(z2), z2) == A.normal_form(z0 - A.mul(z0, z0)));
}

TEST_CASE("standalone S4_theta carries the same commutation") {
    DeformationContext ctx{Scenario::I, ThetaMatrix::standard(2)};
    auto s4 = build_s4_theta(ctx);
    Gen z1 = s4->index("zeta1"), z2 = s4->index("zeta2");
    CHECK(s4->commutation(z1, z2) == PhaseScalar::q(1, 2, 2));
    CHECK_FALSE(s4->commutative());
}

TEST_CASE("so-theta n=1: sphere relation and x central") {
    const CatalogEntry& e = *algebras().so1;
    const Presentation& B = *e.B;
    Gen x = B.index("x");
    for (Gen g = 0; g < B.num_gens(); ++g) CHECK(B.commutation(x, g) == PhaseScalar(1));
    const Presentation& A = *e.A;
    NCPoly u = e.base.at("u1"), xx = e.base.at("x");
    CHECK(A.normal_form(A.mul(A.star(u), u) * PhaseScalar(2) + A.mul(xx, xx)) == NCPoly(1));
}

TEST_CASE("so-theta relations a b = lambda lambda b a regenerate from the bidegrees") {
    const CatalogEntry& e = *algebras().so1;
    const Presentation& A = *e.A;
    for (Gen g = 0; g < A.num_gens(); ++g)
        for (Gen h = 0; h < A.num_gens(); ++h) {
            PhaseMonomial l = e.ctx.lambda(A.degree(g), A.degree(h));
            CHECK(A.commutation(g, h) == PhaseScalar(l * l));
        }
}
