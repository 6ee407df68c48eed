#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tdeform/catalog.hpp"
#include "tdeform/suites.hpp"

using namespace tdeform;

namespace {

const CatalogEntry& su2() {
    static auto e = build_su2_bundle();
    return *e;
}
const CatalogEntry& so1() {
    static auto e = build_so_theta(1);
    return *e;
}

CheckReport run(const CatalogEntry& e, const std::string& suite, RunOptions o = {}) {
    return run_suite(e, make_suite(e, suite), o);
}

std::string fingerprint(const CheckReport& r) {
    std::string s = r.summary() + "\n";
    for (const auto& it : r.items) s += it.id + " " + verdict_str(it.verdict) + " " + it.detail + "\n";
    return s;
}

}  // namespace

TEST_CASE("su2 antipode-flip: 16/16 EQUAL") {
    CheckReport r = run(su2(), "antipode-flip");
    CHECK(r.items.size() == 16);
    CHECK(r.all_equal());
}

TEST_CASE("so-theta n=1 hopf-axioms-HTheta: all EQUAL") {
    CheckReport r = run(so1(), "hopf-axioms-HTheta");
    CHECK(!r.items.empty());
    CHECK(r.all_equal());
}

TEST_CASE("reports do not depend on the worker count") {
    RunOptions one, four;
    four.jobs = 4;
    for (const char* s : {"translation-properties", "coring-axioms"}) {
        CHECK(fingerprint(run(su2(), s, one)) == fingerprint(run(su2(), s, four)));
        CHECK(fingerprint(run(so1(), s, one)) == fingerprint(run(so1(), s, four)));
    }
}

TEST_CASE("items are sorted by id") {
    CheckReport r = run(so1(), "frame");
    for (std::size_t i = 1; i < r.items.size(); ++i) CHECK(r.items[i - 1].id < r.items[i].id);
}

TEST_CASE("numeric oracle agrees with symbolic equality") {
    RunOptions o;
    o.numeric = Rational(1, 3);
    for (const char* s : {"generator-relations", "antipode-flip"}) {
        CheckReport r = run(su2(), s, o);
        CHECK(r.all_equal());
        for (const auto& it : r.items) CHECK(it.numeric_diff < 1e-9);
    }
}

TEST_CASE("numeric oracle catches a wrong identity") {
    const CatalogEntry& e = su2();
    const Presentation* A = e.A.get();
    NCPoly z1 = e.base.at("zeta1"), z2 = e.base.at("zeta2");
    // zeta1 zeta2 = zeta2 zeta1 fails away from theta = 0
    Sides wrong{tensor1(A, A->mul(z1, z2)), tensor1(A, A->mul(z2, z1))};
    std::mt19937_64 rng(3);
    ThetaMatrix th = e.numeric_theta(Rational(1, 3));
    CHECK(numeric_difference(e, wrong, th, rng, 2) > 1e-3);
    CHECK(numeric_difference(e, wrong, e.numeric_theta(Rational(0)), rng, 2) < 1e-12);
}

TEST_CASE("trace is recorded when asked") {
    RunOptions o;
    o.trace = true;
    CheckReport r = run(su2(), "antipode-flip", o);
    bool chi = false;
    for (const auto& it : r.items)
        for (const auto& line : it.trace) chi = chi || line.find("chi-transport") != std::string::npos;
    CHECK(chi);
    CheckReport plain = run(su2(), "antipode-flip");
    for (const auto& it : plain.items) CHECK(it.trace.empty());
}
