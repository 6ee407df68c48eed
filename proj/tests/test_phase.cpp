#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "tdeform/deform.hpp"

using namespace tdeform;

namespace {

DegreeVector random_degree(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-4, 4);
    DegreeVector v(std::size_t(n), 0);
    for (auto& x : v) x = d(rng);
    return v;
}

// exponent of q_jk in lambda(r, l) for theta_jk = 1 (j<k), computed directly
long oracle_exponent(const DegreeVector& r, const DegreeVector& l, int j, int k) { return r[j] * l[k] - r[k] * l[j]; }

}  // namespace

TEST_CASE("cocycle lambda matches the direct exponent formula") {
    std::mt19937_64 rng(11);
    for (int n : {2, 3, 4}) {
        ThetaMatrix th = ThetaMatrix::standard(n);
        for (int s = 0; s < 200; ++s) {
            DegreeVector r = random_degree(n, rng), l = random_degree(n, rng);
            PhaseMonomial m = cocycle_lambda(th, r, l);
            for (int j = 0; j < n; ++j)
                for (int k = j + 1; k < n; ++k) CHECK(m.exponent(j + 1, k + 1) == oracle_exponent(r, l, j, k));
        }
    }
}

TEST_CASE("2-cocycle identity on Z^2 and Z^4") {
    std::mt19937_64 rng(12);
    for (int n : {2, 4}) {
        ThetaMatrix th = ThetaMatrix::standard(n);
        for (int s = 0; s < 500; ++s) {
            DegreeVector r = random_degree(n, rng), l = random_degree(n, rng), t = random_degree(n, rng);
            CHECK(cocycle_lambda(th, r, l) * cocycle_lambda(th, r + l, t) ==
                  cocycle_lambda(th, r, l + t) * cocycle_lambda(th, l, t));
        }
    }
}

TEST_CASE("lambda is a skew bicharacter") {
    std::mt19937_64 rng(13);
    ThetaMatrix th = ThetaMatrix::standard(3);
    for (int s = 0; s < 200; ++s) {
        DegreeVector r = random_degree(3, rng), l = random_degree(3, rng), t = random_degree(3, rng);
        CHECK(cocycle_lambda(th, r, l + t) == cocycle_lambda(th, r, l) * cocycle_lambda(th, r, t));
        CHECK(cocycle_lambda(th, l, r) == cocycle_lambda(th, r, l).inverse());
        CHECK(cocycle_lambda(th, r, r).is_one());
    }
}

TEST_CASE("bigraded lambda factorizes as lambda_theta(r,l) lambda_theta(r',l')^-1") {
    std::mt19937_64 rng(14);
    DeformationContext ctx{Scenario::II, ThetaMatrix::standard(2)};
    for (int s = 0; s < 200; ++s) {
        DegreeVector r = random_degree(2, rng), rp = random_degree(2, rng);
        DegreeVector l = random_degree(2, rng), lp = random_degree(2, rng);
        DegreeVector R = r, L = l;
        R.insert(R.end(), rp.begin(), rp.end());
        L.insert(L.end(), lp.begin(), lp.end());
        CHECK(ctx.lambda(R, L) == cocycle_lambda(ctx.theta, r, l) * cocycle_lambda(ctx.theta, rp, lp).inverse());
    }
}

TEST_CASE("phase evaluation is exp(i pi theta e)") {
    ThetaMatrix th = ThetaMatrix::standard(3).scaled(Rational(1, 3));
    PhaseScalar x = PhaseScalar::q(1, 2, 3) * PhaseScalar::q(2, 3, -1) + PhaseScalar(GaussRat(2, 1));
    const double pi = std::acos(-1.0);
    std::complex<double> want = std::exp(std::complex<double>(0, pi * (3 - 1) / 3.0)) + std::complex<double>(2, 1);
    CHECK(std::abs(x.eval(th) - want) < 1e-12);
}

TEST_CASE("phase scalars: ring laws, conjugation, printing") {
    PhaseScalar a = PhaseScalar::q(1, 2, 2) + PhaseScalar(3), b = PhaseScalar::q(1, 2, -1) * PhaseScalar::i();
    CHECK(a * b == b * a);
    CHECK((a + b) * a == a * a + b * a);
    CHECK(b * b.inverse() == PhaseScalar(1));
    CHECK(b.conj() == b.inverse());
    CHECK(PhaseScalar::q(2, 1) == PhaseScalar::q(1, 2, -1));
    CHECK(PhaseScalar::parse(a.str()) == a);
    CHECK(PhaseScalar::parse(b.str()) == b);
    CHECK_THROWS(a.inverse());
}
