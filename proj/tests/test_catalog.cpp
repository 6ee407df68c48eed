#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <regex>

#include "tdeform/catalog.hpp"
#include "tdeform/suites.hpp"

using namespace tdeform;

namespace {

std::string replace_line(const std::string& text, const std::string& from, const std::string& to) {
    auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    return text.substr(0, at) + to + text.substr(at + from.size());
}

int line_of(const std::string& text, const std::string& needle) {
    auto at = text.find(needle);
    return 1 + int(std::count(text.begin(), text.begin() + std::ptrdiff_t(at), '\n'));
}

}  // namespace

TEST_CASE("exported entries load back to the same presentation") {
    auto e = build_su2_bundle();
    auto f = load_entry(export_entry(*e), "export");
    REQUIRE(f->A->num_gens() == e->A->num_gens());
    CHECK(f->A->rules().size() == e->A->rules().size());
    CHECK(export_entry(*f) == export_entry(*e));
    auto s = build_so_theta(1);
    CHECK(export_entry(*load_entry(export_entry(*s))) == export_entry(*s));
}

TEST_CASE("malformed relation reports line and column") {
    const std::string good = su2_bundle_text();
    const std::string bad = replace_line(good, "psi1*.psi1 + psi2*.psi2 + psi3*.psi3 + psi4*.psi4 = 1",
                                         "psi1*.psi1 + psi2*.qq = 1");
    try {
        load_entry(bad, "bad.alg");
        FAIL("no parse error");
    } catch (const ParseError& ex) {
        CHECK(ex.line() == line_of(bad, "psi2*.qq"));
        CHECK(ex.col() == 20);
        CHECK(std::string(ex.what()).find("bad.alg:") == 0);
    }
}

TEST_CASE("structural errors are parse errors") {
    const std::string good = su2_bundle_text();
    CHECK_THROWS_AS(load_entry(replace_line(good, "psi4  : 0 1  : psi4*", "psi4  : 0 x  : psi4*")), ParseError);
    CHECK_THROWS_AS(load_entry(replace_line(good, "[generators H]", "[generatorz H]")), ParseError);
    CHECK_THROWS_AS(load_entry(replace_line(good, "0 1\n-1 0", "0 1\n1 0")), ParseError);
    CHECK_THROWS_AS(load_entry(""), ParseError);
    CHECK_THROWS_AS(load_entry_file("/nonexistent/file.alg"), ParseError);
}

TEST_CASE("inconsistent commutation data fails loudly") {
    const std::string bad = replace_line(su2_bundle_text(), "psi1 psi3 = q[1,2]^-2", "psi1 psi3 = q[1,2]^2");
    CHECK_THROWS(load_entry(bad));
}

TEST_CASE("so-theta requires n >= 1") { CHECK_THROWS(build_so_theta(0)); }

TEST_CASE("list_suites manifest") {
    auto su2 = list_suites("su2");
    CHECK(std::find(su2.begin(), su2.end(), "antipode-flip") != su2.end());
    auto e = build_su2_bundle();
    CHECK(make_suite(*e, "antipode-flip").identities.size() == 16);
    auto so = list_suites(*build_so_theta(2));
    CHECK(std::find(so.begin(), so.end(), "hopf-axioms-HTheta") != so.end());
    CHECK(list_suites("no-such-entry").empty());
    CHECK_THROWS_AS(make_suite(*e, "no-such-suite"), std::invalid_argument);
}

TEST_CASE("notes record the bidegree notation") {
    auto e = build_so_theta(1);
    bool found = false;
    for (const auto& n : e->notes) found = found || n.find("h_jl") != std::string::npos || n.find("h_{jl}") != std::string::npos;
    CHECK(found);
}
