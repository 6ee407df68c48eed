#include "tdeform/galois.hpp"

#include <stdexcept>

#include "tdeform/trace.hpp"

namespace tdeform {

ComoduleAlgebra::ComoduleAlgebra(const Presentation* a, const HopfAlgebra* h, std::map<Gen, TensorExpr> coaction_of,
                                 std::vector<NCPoly> base_generators)
    : a_(a), h_(h), tab_(std::move(coaction_of)), base_(std::move(base_generators)) {
    for (std::size_t g = 0; g < a_->num_gens(); ++g)
        if (!tab_.count(Gen(g))) throw std::invalid_argument("no coaction for generator " + a_->generator(Gen(g)).name);
}

TensorExpr ComoduleAlgebra::coaction_word(const Word& w) const {
    const int mode = UnreducedScope::active() ? 1 : 0;
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = memo_[mode].find(w);
        if (it != memo_[mode].end()) return it->second;
    }
    TensorExpr r;
    if (w.empty()) {
        r = tensor2(a_, NCPoly(1), h_->pres(), NCPoly(1));
    } else {
        Word head(w.begin(), w.end() - 1);
        r = coaction_word(head).mul(tab_.at(w.back()));
    }
    std::lock_guard<std::mutex> lk(mu_);
    memo_[mode].emplace(w, r);
    return r;
}

TensorExpr ComoduleAlgebra::coaction(const NCPoly& x) const {
    TensorExpr r({a_, h_->pres()}, {Boundary::Plain});
    for (const auto& [w, c] : x.terms()) r += coaction_word(w) * c;
    return r;
}

Verdict ComoduleAlgebra::is_coinvariant(const NCPoly& x) const {
    return (coaction(x) - tensor2(a_, x, h_->pres(), NCPoly(1))).is_zero() ? Verdict::EQUAL : Verdict::INDETERMINATE;
}

TensorExpr ComoduleAlgebra::canonical_map(const TensorExpr& x) const {
    if (x.rank() != 2) throw std::invalid_argument("canonical map expects a two-slot tensor");
    return x.map_slot(1, [&](const Word& w) { return coaction_word(w); }).contract(0);
}

TensorExpr ComoduleAlgebra::chi_transport(const TensorExpr& x) const {
    TensorExpr cur = x;
    while (true) {
        const auto& b = cur.boundaries();
        std::size_t k = b.size();
        for (std::size_t i = b.size(); i-- > 0;)
            if (b[i] == Boundary::Balanced) {
                k = i;
                break;
            }
        if (k == b.size()) return cur;
        if (cur.slots()[k] != a_ || cur.slots()[k + 1] != a_)
            throw std::logic_error("chi-transport: balanced boundary between non-total slots");
        cur = cur.map_slot(k + 1, [&](const Word& w) { return coaction_word(w); }).contract(k);
        if (tracing()) trace("chi-transport at boundary " + std::to_string(k) + ": " + std::to_string(cur.terms().size()) + " terms");
    }
}

TensorExpr ComoduleAlgebra::diagonal_coaction(const TensorExpr& x) const {
    if (x.rank() != 2) throw std::invalid_argument("diagonal coaction expects a two-slot tensor");
    auto d = [&](const Word& w) { return coaction_word(w); };
    TensorExpr t = x.map_slot(1, d).map_slot(0, d);  // a(0), a(1), a~(0), a~(1)
    return t.permute({0, 2, 1, 3}, {Boundary::Plain, Boundary::Plain, Boundary::Plain}).contract(2);
}

TranslationTable::TranslationTable(const ComoduleAlgebra* ca, std::map<Gen, TensorExpr> tau_of)
    : ca_(ca), tab_(std::move(tau_of)) {
    const Presentation* h = ca_->hopf()->pres();
    for (std::size_t g = 0; g < h->num_gens(); ++g)
        if (!tab_.count(Gen(g))) throw std::invalid_argument("no translation for generator " + h->generator(Gen(g)).name);
}

TensorExpr TranslationTable::translation_word(const Word& w) const {
    const int mode = UnreducedScope::active() ? 1 : 0;
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = memo_[mode].find(w);
        if (it != memo_[mode].end()) return it->second;
    }
    const Presentation* a = ca_->total();
    TensorExpr r;
    if (w.empty()) {
        r = tensor2(a, NCPoly(1), a, NCPoly(1), Boundary::Balanced);
    } else {
        Word head(w.begin(), w.end() - 1);
        r = translation_word(head).mul(tab_.at(w.back()), {true, false});
    }
    std::lock_guard<std::mutex> lk(mu_);
    memo_[mode].emplace(w, r);
    return r;
}

TensorExpr TranslationTable::translation(const NCPoly& h) const {
    const Presentation* a = ca_->total();
    TensorExpr r({a, a}, {Boundary::Balanced});
    for (const auto& [w, c] : h.terms()) r += translation_word(w) * c;
    return r;
}

std::string decision_str(Decision d) {
    switch (d) {
        case Decision::Canonical: return "canonical";
        case Decision::Slide: return "slide-and-reduce";
        case Decision::ChiTransport: return "chi-transport";
        case Decision::Undecided: return "undecided";
    }
    return "?";
}

Verdict decide_equal(const ComoduleAlgebra& ca, const TensorExpr& lhs, const TensorExpr& rhs, Decision* how) {
    if (how) *how = Decision::Undecided;
    TensorExpr diff = lhs - rhs;
    if (diff.is_zero()) {
        if (how) *how = Decision::Canonical;
        if (tracing()) trace("slotwise normal forms agree");
        return Verdict::EQUAL;
    }
    bool balanced = false;
    for (auto b : diff.boundaries()) balanced = balanced || b == Boundary::Balanced;
    if (!balanced) return Verdict::INDETERMINATE;
    if (tracing()) trace("slotwise forms differ in " + std::to_string(diff.terms().size()) + " terms; transporting by chi");
    if (ca.chi_transport(diff).is_zero()) {
        if (how) *how = Decision::ChiTransport;
        return Verdict::EQUAL;
    }
    return Verdict::INDETERMINATE;
}

namespace {

const Presentation* hp(const ComoduleAlgebra& ca) { return ca.hopf()->pres(); }

}  // namespace

Sides p7_sides(const ComoduleAlgebra& ca, const TranslationTable& tt, const Word& h) {
    return {ca.canonical_map(tt.translation_word(h)), tensor2(ca.total(), NCPoly(1), hp(ca), NCPoly::word(h))};
}

Sides p4_sides(const ComoduleAlgebra& ca, const TranslationTable& tt, const Word& h) {
    auto d = [&](const Word& w) { return ca.coaction_word(w); };
    auto t = [&](const Word& w) { return tt.translation_word(w); };
    return {tt.translation_word(h).map_slot(1, d), ca.hopf()->coproduct_word(h).map_slot(0, t)};
}

Sides p1_sides(const ComoduleAlgebra& ca, const TranslationTable& tt, const Word& h) {
    auto d = [&](const Word& w) { return ca.coaction_word(w); };
    auto t = [&](const Word& w) { return tt.translation_word(w); };
    auto S = [&](const Word& w) { return ca.hopf()->antipode_word(w); };
    const std::vector<Boundary> bd{Boundary::Balanced, Boundary::Plain};
    TensorExpr lhs = tt.translation_word(h).map_slot(0, d).permute({0, 2, 1}, bd);
    TensorExpr rhs = ca.hopf()->coproduct_word(h).map_slot(1, t).map_slot_poly(0, hp(ca), S).permute({1, 2, 0}, bd);
    return {lhs, rhs};
}

Sides p5_sides(const ComoduleAlgebra& ca, const TranslationTable& tt, const Word& h) {
    return {tt.translation_word(h).contract(0), tensor1(ca.total(), NCPoly(ca.hopf()->counit_word(h)))};
}

Sides p3_sides(const ComoduleAlgebra& ca, const TranslationTable& tt, const Word& a) {
    auto t = [&](const Word& w) { return tt.translation_word(w); };
    return {ca.coaction_word(a).map_slot(1, t).contract(0),
            tensor2(ca.total(), NCPoly(1), ca.total(), NCPoly::word(a), Boundary::Balanced)};
}

Sides p8_sides(const ComoduleAlgebra& ca, const TranslationTable& tt, const NCPoly& b, const Word& h) {
    const Presentation* a = ca.total();
    TensorExpr t = tt.translation_word(h);
    TensorExpr left = tensor2(a, b, a, NCPoly(1), Boundary::Balanced);
    TensorExpr right = tensor2(a, NCPoly(1), a, b, Boundary::Balanced);
    return {left.mul(t), t.mul(right)};
}

Sides p2_sides(const ComoduleAlgebra& ca, const TranslationTable& tt, Gen h, Gen k) {
    const Presentation* H = hp(ca);
    TensorExpr lhs = tt.translation(H->mul(NCPoly::gen(h), NCPoly::gen(k)));
    TensorExpr rhs = tt.translation_word({h}).mul(tt.translation_word({k}), {true, false});
    return {lhs, rhs};
}

Sides p6_sides(const ComoduleAlgebra& ca, const TranslationTable& tt, const Word& h) {
    auto t = [&](const Word& w) { return tt.translation_word(w); };
    TensorExpr lhs = ca.hopf()->coproduct_word(h).map_slot(1, t).map_slot(0, t).contract(1);
    TensorExpr th = tt.translation_word(h);
    TensorExpr rhs = th.map_slot(0, [&](const Word& w) {
        return tensor2(ca.total(), NCPoly::word(w), ca.total(), NCPoly(1), Boundary::Balanced);
    });
    return {lhs, rhs};
}

CheckReport check_translation_properties(const ComoduleAlgebra& ca, const TranslationTable& tt) {
    CheckReport rep;
    rep.suite = "translation-properties";
    const Presentation* H = hp(ca);
    const Presentation* A = ca.total();
    auto add = [&](const std::string& id, const std::string& anchor, const Sides& s) {
        rep.add(id, anchor, decide_equal(ca, s.lhs, s.rhs));
    };
    for (std::size_t g = 0; g < H->num_gens(); ++g) {
        Word h{Gen(g)};
        const std::string name = H->generator(Gen(g)).name;
        add("p7/" + name, "Thus by definition", p7_sides(ca, tt, h));
        add("p4/" + name, "translation map enjoys a number of properties", p4_sides(ca, tt, h));
        add("p1/" + name, "translation map enjoys a number of properties", p1_sides(ca, tt, h));
        add("p5/" + name, "translation map enjoys a number of properties", p5_sides(ca, tt, h));
        add("p6/" + name, "translation map enjoys a number of properties", p6_sides(ca, tt, h));
        for (std::size_t b = 0; b < ca.base_generators().size(); ++b)
            add("p8/" + name + "/b" + std::to_string(b), "translation map enjoys a number of properties",
                p8_sides(ca, tt, ca.base_generators()[b], h));
        for (std::size_t k = 0; k < H->num_gens(); ++k)
            add("p2/" + name + "*" + H->generator(Gen(k)).name, "translation map enjoys a number of properties",
                p2_sides(ca, tt, Gen(g), Gen(k)));
    }
    for (std::size_t g = 0; g < A->num_gens(); ++g)
        add("p3/" + A->generator(Gen(g)).name, "translation map enjoys a number of properties",
            p3_sides(ca, tt, Word{Gen(g)}));
    return rep;
}

CheckReport check_degree_lemmas(const ComoduleAlgebra& ca, const TranslationTable& tt) {
    CheckReport rep;
    rep.suite = "degree-lemmas";
    const Presentation* A = ca.total();
    const Presentation* H = hp(ca);
    for (std::size_t i = 0; i < ca.base_generators().size(); ++i) {
        bool ok = true;
        for (const auto& [w, c] : ca.base_generators()[i].terms()) {
            auto [left, right] = split_bidegree(A->word_degree(w));
            for (long x : right) ok = ok && x == 0;
        }
        rep.add("base-right-degree/" + A->str(ca.base_generators()[i]),
                "the coinvariant subalgebra is contained in the right-degree-zero part", verdict_of(ok));
    }
    for (std::size_t g = 0; g < H->num_gens(); ++g) {
        const std::string name = H->generator(Gen(g)).name;
        auto [r, l] = split_bidegree(H->degree(Gen(g)));
        bool shape = true, opposite = true;
        const TensorExpr t = tt.translation_word({Gen(g)});
        for (const auto& [key, c] : t.terms()) {
            auto [p1, q1] = split_bidegree(A->word_degree(key[0]));
            auto [p2, q2] = split_bidegree(A->word_degree(key[1]));
            for (std::size_t i = 0; i < p1.size(); ++i) {
                shape = shape && p1[i] == -p2[i] && q1[i] == -r[i] && q2[i] == l[i];
                if (r == l) opposite = opposite && p1[i] + p2[i] == 0 && q1[i] + q2[i] == 0;
            }
        }
        rep.add("tau-bidegree/" + name, "suitable representatives for the translation map", verdict_of(shape));
        if (r == l) {
            rep.add("tau-opposite-degrees/" + name, "for r = l the legs have opposite degrees", verdict_of(opposite));
        } else {
            Sides s = p5_sides(ca, tt, {Gen(g)});
            bool vanish = s.lhs.is_zero() && s.rhs.is_zero();
            rep.add("tau-product-vanishes/" + name, "for r != l the product of the legs vanishes", verdict_of(vanish));
        }
    }
    return rep;
}

}  // namespace tdeform
