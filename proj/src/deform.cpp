#include "tdeform/deform.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tdeform {

PhaseMonomial DeformationContext::lambda(const DegreeVector& r, const DegreeVector& l) const {
    const int n = theta.dim();
    if (int(r.size()) != arity() || int(l.size()) != arity())
        throw std::invalid_argument("grading arity mismatch: expected " + std::to_string(arity()));
    if (scenario == Scenario::I) return cocycle_lambda(theta, r, l);
    DegreeVector r1(r.begin(), r.begin() + n), r2(r.begin() + n, r.end());
    DegreeVector l1(l.begin(), l.begin() + n), l2(l.begin() + n, l.end());
    return cocycle_lambda(theta, r1, l1) * cocycle_lambda(theta, r2, l2).inverse();
}

Bicharacter DeformationContext::bicharacter() const {
    DeformationContext self = *this;
    return [self](const DegreeVector& r, const DegreeVector& l) { return self.lambda(r, l); };
}

NCPoly deform_product(const DeformationContext& ctx, const Presentation& p, const NCPoly& x, const NCPoly& y) {
    if (p.arity() != ctx.arity()) throw std::invalid_argument("grading arity mismatch between context and " + p.name());
    NCPoly out;
    for (const auto& [dx, cx] : p.components(x))
        for (const auto& [dy, cy] : p.components(y)) {
            NCPoly t = p.mul_free(cx, cy);
            out += t * PhaseScalar(ctx.lambda(dx, dy));
        }
    return p.normal_form(out);
}

Presentation deformed_presentation(const DeformationContext& ctx, const Presentation& p, const std::string& name) {
    if (p.arity() != ctx.arity()) throw std::invalid_argument("grading arity mismatch between context and " + p.name());
    Presentation d(name.empty() ? p.name() : name, p.generators(), p.arity());
    const std::size_t n = p.num_gens();
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = g + 1; h < n; ++h) {
            PhaseMonomial lam = ctx.lambda(p.degree(Gen(g)), p.degree(Gen(h)));
            d.set_commutation(Gen(g), Gen(h), p.commutation(Gen(g), Gen(h)) * PhaseScalar(lam.pow(2)));
        }
    // Existing underlying identification composes with the new one.
    Bicharacter old = p.bicharacter();
    Bicharacter lam = ctx.bicharacter();
    if (old)
        d.set_underlying([old, lam](const DegreeVector& r, const DegreeVector& l) { return old(r, l) * lam(r, l); });
    else
        d.set_underlying(lam);
    for (const auto& rule : p.rules()) {
        PhaseMonomial lead = d.underlying_phase(rule.lead) * p.underlying_phase(rule.lead).inverse();
        NCPoly rhs;
        for (const auto& [w, c] : rule.rhs.terms()) {
            PhaseMonomial pw = d.underlying_phase(w) * p.underlying_phase(w).inverse();
            rhs.add(w, c * PhaseScalar(lead * pw.inverse()));
        }
        d.add_rule({rule.lead, rhs});
    }
    return d;
}

NCPoly to_undeformed(const Presentation& pd, const NCPoly& x) {
    NCPoly r;
    for (const auto& [w, c] : x.terms()) r.add(w, c * PhaseScalar(pd.underlying_phase(w)));
    return r;
}

NCPoly from_undeformed(const Presentation& pd, const NCPoly& x) {
    NCPoly r;
    for (const auto& [w, c] : x.terms()) r.add(w, c * PhaseScalar(pd.underlying_phase(w).inverse()));
    return r;
}

Word random_word(const Presentation& p, std::size_t len, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, p.num_gens() - 1);
    Word w;
    for (int attempt = 0; attempt < 50; ++attempt) {
        w.clear();
        for (std::size_t i = 0; i < len; ++i) w.push_back(Gen(pick(rng)));
        std::sort(w.begin(), w.end());
        if (p.is_normal(w)) return w;
    }
    return w;
}

CheckReport check_same_degree_product(const DeformationContext& ctx, const Presentation& p, int samples,
                                      std::mt19937_64& rng) {
    CheckReport rep;
    rep.suite = "same-degree-product";
    std::map<DegreeVector, std::vector<Word>> pool;
    std::uniform_int_distribution<std::size_t> len(0, 3);
    for (int i = 0; i < 40 * samples && pool.size() < 4 * std::size_t(samples); ++i) {
        Word w = random_word(p, len(rng), rng);
        auto& bucket = pool[p.word_degree(w)];
        if (bucket.size() < 32) bucket.push_back(w);
    }
    std::vector<std::pair<Word, Word>> pairs;
    for (const auto& [d, ws] : pool) {
        DegreeVector neg(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) neg[i] = -d[i];
        for (const DegreeVector* t : {&d, static_cast<const DegreeVector*>(&neg)}) {
            auto it = pool.find(*t);
            if (it == pool.end()) continue;
            for (const Word& a : ws)
                for (const Word& b : it->second) pairs.emplace_back(a, b);
        }
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    if (pairs.size() > std::size_t(samples)) pairs.resize(std::size_t(samples));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        NCPoly a = NCPoly::word(pairs[i].first), b = NCPoly::word(pairs[i].second);
        Verdict v = p.equals(deform_product(ctx, p, a, b), p.mul(a, b));
        rep.add("sample-" + std::to_string(i), "deformed multiplication agrees with the original one", v,
                p.word_str(pairs[i].first) + " , " + p.word_str(pairs[i].second));
    }
    return rep;
}

}  // namespace tdeform
