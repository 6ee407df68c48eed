// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "tdeform/catalog.hpp"
#include "tdeform/suites.hpp"

using namespace tdeform;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string note;
};

void line(int k, const Outcome& o, double secs) {
    std::printf("criterion %d: %s  %s  (%.1f s)\n", k, o.pass ? "PASS" : "FAIL", o.note.c_str(), secs);
    std::fflush(stdout);
}

struct Entries {
    std::unique_ptr<CatalogEntry> su2, so1, so2;
    std::unique_ptr<Presentation> s4;
    std::vector<const CatalogEntry*> all() const { return {su2.get(), so1.get(), so2.get()}; }
};

struct Alg {
    std::string label;
    const DeformationContext* ctx;
    const Presentation* undeformed;
    std::size_t max_total = 9;  ///< triples stay within the degree the rewrite system was completed to
};

std::vector<Alg> algebras(const Entries& es, const DeformationContext& s4ctx, const Presentation& s4plain) {
    std::vector<Alg> v;
    for (const CatalogEntry* e : es.all()) {
        std::string base = e->name + (e->family == "so-theta" ? "(n=" + std::to_string(e->n) + ")" : "");
        std::size_t bound = e->completion_degree > 0 ? e->completion_degree : 9;
        v.push_back({base + ".A", &e->ctx, e->A0.get(), bound});
        v.push_back({base + ".H", &e->ctx, e->H0.get(), bound});
        v.push_back({base + ".B", &e->ctx, e->B0.get(), bound});
    }
    v.push_back({"S4_theta", &s4ctx, &s4plain});
    return v;
}

DegreeVector random_degree(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-5, 5);
    DegreeVector v(static_cast<std::size_t>(n), 0);
    for (auto& x : v) x = d(rng);
    return v;
}

// lambda(r,l) exponent of q_jk straight from theta_jk (r_j l_k - r_k l_j), theta_jk = 1 for j<k
bool lambda_matches_oracle(const ThetaMatrix& th, const DegreeVector& r, const DegreeVector& l) {
    PhaseMonomial m = cocycle_lambda(th, r, l);
    for (int j = 0; j < th.dim(); ++j)
        for (int k = j + 1; k < th.dim(); ++k)
            if (m.exponent(j + 1, k + 1) != r[j] * l[k] - r[k] * l[j]) return false;
    return true;
}

Outcome criterion1(const std::vector<Alg>& algs) {
    Outcome o;
    std::mt19937_64 rng(1001);
    std::size_t cocycle_bad = 0;
    for (int n : {2, 4}) {
        ThetaMatrix th = ThetaMatrix::standard(n);
        for (int s = 0; s < 1000; ++s) {
            DegreeVector r = random_degree(n, rng), l = random_degree(n, rng), t = random_degree(n, rng);
            bool ok = cocycle_lambda(th, r, l) * cocycle_lambda(th, r + l, t) ==
                      cocycle_lambda(th, r, l + t) * cocycle_lambda(th, l, t);
            ok = ok && lambda_matches_oracle(th, r, l) && lambda_matches_oracle(th, l, t);
            if (!ok) ++cocycle_bad;
        }
    }
    std::size_t assoc_bad = 0, triples = 0;
    std::uniform_int_distribution<std::size_t> len(1, 3);
    for (const auto& a : algs) {
        const Presentation& p = *a.undeformed;
        for (int s = 0; s < 300; ++s, ++triples) {
            std::size_t a1, a2, a3;
            do {
                a1 = len(rng), a2 = len(rng), a3 = len(rng);
            } while (a1 + a2 + a3 > a.max_total);
            NCPoly x = NCPoly::word(random_word(p, a1, rng));
            NCPoly y = NCPoly::word(random_word(p, a2, rng));
            NCPoly z = NCPoly::word(random_word(p, a3, rng));
            if (!(deform_product(*a.ctx, p, deform_product(*a.ctx, p, x, y), z) ==
                  deform_product(*a.ctx, p, x, deform_product(*a.ctx, p, y, z))))
                ++assoc_bad;
        }
    }
    o.pass = cocycle_bad == 0 && assoc_bad == 0;
    o.note = "cocycle 2000/2000 triples on Z^2,Z^4 " + std::string(cocycle_bad ? "with failures" : "exact") +
             "; associativity " + std::to_string(triples - assoc_bad) + "/" + std::to_string(triples) + " triples over " +
             std::to_string(algs.size()) + " algebras";
    return o;
}

struct SuiteTally {
    std::size_t equal = 0, total = 0, numeric_items = 0, word_pairs = 0, conflicts = 0;
    double worst = 0;
    std::vector<std::string> bad;
};

SuiteTally run_all(const CatalogEntry& e, const RunOptions& o) {
    SuiteTally t;
    for (const auto& name : list_suites(e)) {
        CheckReport r = run_suite(e, make_suite(e, name), o);
        t.equal += r.count(Verdict::EQUAL);
        t.total += r.items.size();
        for (const auto& it : r.items) {
            if (it.verdict != Verdict::EQUAL) t.bad.push_back(name + "/" + it.id + " " + verdict_str(it.verdict));
            if (it.numeric_diff >= 0) {
                ++t.numeric_items;
                t.worst = std::max(t.worst, it.numeric_diff);
                if (name == "word-products") ++t.word_pairs;
            }
            if (it.verdict == Verdict::UNEQUAL_NUMERIC) ++t.conflicts;
        }
    }
    return t;
}

std::string tally_str(const std::string& label, const SuiteTally& t) {
    std::string s = label + " " + std::to_string(t.equal) + "/" + std::to_string(t.total) + " EQUAL";
    for (std::size_t i = 0; i < t.bad.size() && i < 3; ++i) s += " [" + t.bad[i] + "]";
    return s;
}

Outcome criterion2(const CatalogEntry& su2, double& secs) {
    auto t0 = Clock::now();
    SuiteTally t = run_all(su2, {});
    secs = since(t0);
    Outcome o;
    o.pass = t.equal == t.total && t.total > 0 && secs < 60;
    o.note = tally_str("su2 all suites", t);
    return o;
}

Outcome criterion3(const CatalogEntry& so1, const CatalogEntry& so2, double load2, double& secs) {
    auto t0 = Clock::now();
    SuiteTally a = run_all(so1, {});
    auto t1 = Clock::now();
    SuiteTally b = run_all(so2, {});
    double n2 = since(t1) + load2;
    secs = since(t0);
    Outcome o;
    o.pass = a.equal == a.total && b.equal == b.total && a.total > 0 && b.total > 0 && n2 < 300;
    char buf[64];
    std::snprintf(buf, sizeof buf, "; n=2 incl. load %.1f s", n2);
    o.note = tally_str("so-theta n=1", a) + "; " + tally_str("n=2", b) + buf;
    return o;
}

Outcome criterion4(const std::vector<Alg>& algs) {
    Outcome o;
    std::mt19937_64 rng(4004);
    std::size_t bad = 0, pairs = 0, same_bad = 0, same = 0;
    std::uniform_int_distribution<std::size_t> len(0, 3);
    for (const auto& a : algs) {
        const Presentation& p = *a.undeformed;
        DeformationContext zero{a.ctx->scenario, ThetaMatrix(a.ctx->theta.dim())};
        Presentation pz = deformed_presentation(zero, p);
        if (!pz.commutative() || pz.rules().size() != p.rules().size()) ++bad;
        for (int s = 0; s < 200; ++s, ++pairs) {
            NCPoly x = NCPoly::word(random_word(p, len(rng), rng)), y = NCPoly::word(random_word(p, len(rng), rng));
            NCPoly xy = p.mul(x, y);
            if (!(deform_product(zero, p, x, y) == xy) || !(xy == p.mul(y, x)) ||
                !(pz.mul(from_undeformed(pz, x), from_undeformed(pz, y)) == from_undeformed(pz, xy)))
                ++bad;
        }
        CheckReport r = check_same_degree_product(*a.ctx, p, 200, rng);
        same += r.items.size();
        same_bad += r.items.size() - r.count(Verdict::EQUAL);
    }
    o.pass = bad == 0 && same_bad == 0 && same == 200 * algs.size();
    o.note = "theta=0 " + std::to_string(pairs - bad) + "/" + std::to_string(pairs) +
             " pairs commutative and undeformed; degree-0/opposite-degree " + std::to_string(same - same_bad) + "/" +
             std::to_string(same) + " pairs undeformed";
    return o;
}

Outcome criterion5(const Entries& es) {
    Outcome o;
    std::string note;
    double worst = 0;
    std::size_t items = 0, pairs = 0, conflicts = 0, noneq = 0, min_pairs = std::size_t(-1);
    for (const char* t : {"1/3", "1/2"}) {
        RunOptions ro;
        ro.numeric = Rational(t);
        ro.numeric_tolerance = 1e-9;
        for (const CatalogEntry* e : es.all()) {
            SuiteTally s = run_all(*e, ro);
            worst = std::max(worst, s.worst);
            items += s.numeric_items;
            pairs += s.word_pairs;
            min_pairs = std::min(min_pairs, s.word_pairs);
            conflicts += s.conflicts;
            noneq += s.total - s.equal;
        }
    }
    o.pass = conflicts == 0 && noneq == 0 && worst < 1e-9 && min_pairs >= 500;
    char buf[96];
    std::snprintf(buf, sizeof buf, "max |diff| %.2e", worst);
    o.note = "theta 1/3,1/2 on su2, so-theta n=1,2: " + std::to_string(items) + " identities evaluated, " +
             std::to_string(pairs) + " word pairs (>= " + std::to_string(min_pairs) + " per run), " + buf + ", " +
             std::to_string(conflicts) + " conflicts";
    return o;
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    Entries es;
    es.su2 = build_su2_bundle();
    es.so1 = build_so_theta(1);
    auto t2 = Clock::now();
    es.so2 = build_so_theta(2);
    double load2 = since(t2);
    DeformationContext s4ctx{Scenario::I, ThetaMatrix::standard(2)};
    // the standalone four-sphere at theta = 0 is its undeformed presentation
    es.s4 = build_s4_theta(DeformationContext{Scenario::I, ThetaMatrix(2)});
    std::printf("catalog loaded in %.1f s (so-theta n=2: %.1f s)\n", since(t0), load2);
    std::vector<Alg> algs = algebras(es, s4ctx, *es.s4);

    bool all = true;
    auto t = Clock::now();
    Outcome c1 = criterion1(algs);
    double s1 = since(t);
    c1.pass = c1.pass && s1 < 10;
    line(1, c1, s1);
    all = all && c1.pass;

    double s2 = 0;
    Outcome c2 = criterion2(*es.su2, s2);
    line(2, c2, s2);
    all = all && c2.pass;

    double s3 = 0;
    Outcome c3 = criterion3(*es.so1, *es.so2, load2, s3);
    line(3, c3, s3);
    all = all && c3.pass;

    t = Clock::now();
    Outcome c4 = criterion4(algs);
    double s4 = since(t);
    c4.pass = c4.pass && s4 < 10;
    line(4, c4, s4);
    all = all && c4.pass;

    t = Clock::now();
    Outcome c5 = criterion5(es);
    line(5, c5, since(t));
    all = all && c5.pass;

    return all ? 0 : 1;
}
