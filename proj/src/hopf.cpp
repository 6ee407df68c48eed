#include "tdeform/hopf.hpp"

#include <stdexcept>

#include "tdeform/deform.hpp"

namespace tdeform {

HopfAlgebra::HopfAlgebra(const Presentation* h, StructureTable t) : h_(h), t_(std::move(t)) {
    for (std::size_t g = 0; g < h_->num_gens(); ++g) {
        Gen x = Gen(g);
        if (!t_.coproduct_of.count(x) || !t_.counit_of.count(x) || !t_.antipode_of.count(x))
            throw std::invalid_argument("Hopf table incomplete for generator " + h_->generator(x).name);
    }
}

TensorExpr HopfAlgebra::coproduct_word(const Word& w) const {
    const int mode = UnreducedScope::active() ? 1 : 0;
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = delta_memo_[mode].find(w);
        if (it != delta_memo_[mode].end()) return it->second;
    }
    TensorExpr r;
    if (w.empty()) {
        r = TensorExpr::pure({h_, h_}, {Boundary::Plain}, {NCPoly(1), NCPoly(1)});
    } else {
        Word head(w.begin(), w.end() - 1);
        r = coproduct_word(head).mul(t_.coproduct_of.at(w.back()));
    }
    std::lock_guard<std::mutex> lk(mu_);
    delta_memo_[mode].emplace(w, r);
    return r;
}

TensorExpr HopfAlgebra::coproduct(const NCPoly& x) const {
    TensorExpr r({h_, h_}, {Boundary::Plain});
    for (const auto& [w, c] : x.terms()) r += coproduct_word(w) * c;
    return r;
}

PhaseScalar HopfAlgebra::counit_word(const Word& w) const {
    PhaseScalar r(1);
    for (Gen g : w) {
        r = r * t_.counit_of.at(g);
        if (r.is_zero()) break;
    }
    return r;
}

PhaseScalar HopfAlgebra::counit(const NCPoly& x) const {
    PhaseScalar r;
    for (const auto& [w, c] : x.terms()) r += c * counit_word(w);
    return r;
}

NCPoly HopfAlgebra::antipode_word(const Word& w) const {
    const int mode = UnreducedScope::active() ? 1 : 0;
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = s_memo_[mode].find(w);
        if (it != s_memo_[mode].end()) return it->second;
    }
    NCPoly r(1);
    if (!w.empty()) {
        Word head(w.begin(), w.end() - 1);
        r = h_->mul(t_.antipode_of.at(w.back()), antipode_word(head));
    }
    std::lock_guard<std::mutex> lk(mu_);
    s_memo_[mode].emplace(w, r);
    return r;
}

NCPoly HopfAlgebra::antipode(const NCPoly& x) const {
    NCPoly r;
    for (const auto& [w, c] : x.terms()) r += antipode_word(w) * c;
    return r;
}

namespace {

Verdict compare(const TensorExpr& a, const TensorExpr& b) {
    return (a - b).is_zero() ? Verdict::EQUAL : Verdict::INDETERMINATE;
}

}  // namespace

CheckReport check_hopf_axioms(const HopfAlgebra& H, std::size_t depth, int random_words, std::mt19937_64& rng) {
    const Presentation* h = H.pres();
    CheckReport rep;
    rep.suite = "hopf-axioms";
    std::vector<std::pair<std::string, Word>> sample;
    for (std::size_t g = 0; g < h->num_gens(); ++g) sample.emplace_back(h->generator(Gen(g)).name, Word{Gen(g)});
    std::uniform_int_distribution<std::size_t> len(2, std::max<std::size_t>(depth, 2));
    for (int i = 0; i < random_words && depth >= 2; ++i) {
        Word w = random_word(*h, len(rng), rng);
        sample.emplace_back("word" + std::to_string(i) + "[" + h->word_str(w) + "]", w);
    }
    auto D = [&](const Word& w) { return H.coproduct_word(w); };
    auto S = [&](const Word& w) { return H.antipode_word(w); };
    auto eps = [&](const Word& w) { return H.counit_word(w); };
    for (const auto& [label, w] : sample) {
        TensorExpr d = H.coproduct_word(w);
        TensorExpr x = tensor1(h, NCPoly::word(w));
        rep.add("coassociativity/" + label, "coassociative coproduct",
                compare(d.map_slot(0, D), d.map_slot(1, D)));
        rep.add("counit-left/" + label, "counit law", compare(d.apply_scalar(0, eps), x));
        rep.add("counit-right/" + label, "counit law", compare(d.apply_scalar(1, eps), x));
        TensorExpr unit = tensor1(h, NCPoly(H.counit_word(w)));
        rep.add("antipode-left/" + label, "S(h(1)) h(2) = eps(h)",
                compare(d.map_slot_poly(0, h, S).contract(0), unit));
        rep.add("antipode-right/" + label, "h(1) S(h(2)) = eps(h)",
                compare(d.map_slot_poly(1, h, S).contract(0), unit));
    }
    // Multiplicativity on products of pairs, including non-sorted orders.
    std::uniform_int_distribution<std::size_t> pick(0, sample.size() - 1);
    const std::size_t n = std::min<std::size_t>(sample.size() * 2, 60);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& [la, wa] = sample[i < sample.size() ? i : pick(rng)];
        const auto& [lb, wb] = sample[pick(rng)];
        NCPoly a = NCPoly::word(wa), b = NCPoly::word(wb);
        NCPoly ab = h->mul(a, b);
        std::string label = la + "*" + lb;
        rep.add("coproduct-multiplicative/" + label, "still an algebra homomorphism",
                compare(H.coproduct(ab), H.coproduct(a).mul(H.coproduct(b))));
        rep.add("counit-multiplicative/" + label, "counit is an algebra map",
                verdict_of(H.counit(ab) == H.counit(a) * H.counit(b)));
        rep.add("antipode-antimultiplicative/" + label, "antipode is an anti-algebra map",
                h->equals(H.antipode(ab), h->mul(H.antipode(b), H.antipode(a))));
    }
    return rep;
}

std::pair<DegreeVector, DegreeVector> split_bidegree(const DegreeVector& d) {
    if (d.size() % 2) throw std::invalid_argument("bidegree of odd arity");
    const auto n = long(d.size() / 2);
    return {DegreeVector(d.begin(), d.begin() + n), DegreeVector(d.begin() + n, d.end())};
}

CheckReport check_bigrading(const HopfAlgebra& H) {
    const Presentation* h = H.pres();
    CheckReport rep;
    rep.suite = "bigrading";
    std::vector<Word> sample;
    for (std::size_t g = 0; g < h->num_gens(); ++g) sample.push_back({Gen(g)});
    for (std::size_t g = 0; g < h->num_gens(); ++g)
        for (std::size_t k = g; k < h->num_gens(); ++k) sample.push_back({Gen(g), Gen(k)});
    auto neg = [](DegreeVector d) {
        for (auto& x : d) x = -x;
        return d;
    };
    for (const Word& w : sample) {
        const std::string label = h->word_str(w);
        const DegreeVector deg = h->word_degree(w);
        auto [r, l] = split_bidegree(deg);
        NCPoly x = h->normal_form(NCPoly::word(w));
        if (w.size() == 2) {
            NCPoly reverse = h->mul(NCPoly::gen(w[1]), NCPoly::gen(w[0]));
            bool ok = true;
            const NCPoly both = x + reverse;
            for (const auto& [ww, c] : both.terms()) ok = ok && h->word_degree(ww) == deg;
            rep.add("product-degree/" + label, "the multiplication preserves the grading", verdict_of(ok));
        }
        bool shape = true;
        const TensorExpr d = H.coproduct_word(w);
        for (const auto& [key, c] : d.terms()) {
            auto [r1, s1] = split_bidegree(h->word_degree(key[0]));
            auto [s2, l2] = split_bidegree(h->word_degree(key[1]));
            shape = shape && r1 == r && s1 == s2 && l2 == l;
        }
        rep.add("coproduct-shape/" + label, "coproduct lands in sum_s H(r,s) (x) H(s,l)", verdict_of(shape));
        rep.add("counit-diagonal/" + label, "counit factors through the diagonal",
                verdict_of(r == l || H.counit_word(w).is_zero()));
        bool sdeg = true;
        DegreeVector want = neg(l);
        DegreeVector nr = neg(r);
        want.insert(want.end(), nr.begin(), nr.end());
        const NCPoly s = H.antipode_word(w);
        for (const auto& [ww, c] : s.terms()) sdeg = sdeg && h->word_degree(ww) == want;
        rep.add("antipode-degree/" + label, "antipode maps degree (r,l) to (-l,-r)", verdict_of(sdeg));
        bool stdeg = true;
        const NCPoly xs = h->star(x);
        for (const auto& [ww, c] : xs.terms()) stdeg = stdeg && h->word_degree(ww) == neg(deg);
        rep.add("star-degree/" + label, "star negates the degree", verdict_of(stdeg));
    }
    return rep;
}

}  // namespace tdeform
