#include "tdeform/bialgebroid.hpp"

#include <stdexcept>

#include "tdeform/trace.hpp"

namespace tdeform {

namespace {
constexpr Boundary P = Boundary::Plain;
constexpr Boundary B = Boundary::Balanced;
}  // namespace

TensorExpr Bialgebroid::element(const NCPoly& x, const NCPoly& y) const { return tensor2(total(), x, total(), y); }

TensorExpr Bialgebroid::product(const TensorExpr& x, const TensorExpr& y) const { return x.mul(y, {false, true}); }

TensorExpr Bialgebroid::flip(const TensorExpr& x) const { return x.permute({1, 0}, {P}); }

TensorExpr Bialgebroid::coproduct(const TensorExpr& x, std::size_t k) const {
    return x.map_slot(k, [&](const Word& w) {
        return ca_->coaction_word(w).map_slot(1, [&](const Word& h) { return tt_->translation_word(h); });
    });
}

NCPoly Bialgebroid::counit(const TensorExpr& x) const { return x.contract(0).as_poly(); }

Verdict Bialgebroid::is_coinvariant(const TensorExpr& x) const {
    TensorExpr one = x.concat(tensor1(ca_->hopf()->pres(), NCPoly(1)), P);
    return (ca_->diagonal_coaction(x) - one).is_zero() ? Verdict::EQUAL : Verdict::INDETERMINATE;
}

TensorExpr Bialgebroid::slide(const TensorExpr& x) const {
    TensorExpr cur = x;
    const auto& bounds = x.boundaries();
    for (std::size_t k = 0; k < bounds.size(); ++k) {
        if (bounds[k] != B) continue;
        // Group by every slot except k.
        std::map<TensorExpr::Key, NCPoly> groups;
        for (const auto& [key, c] : cur.terms()) {
            TensorExpr::Key rest = key;
            rest[k].clear();
            groups[rest].add(key[k], c);
        }
        TensorExpr next = cur.zero();
        const Presentation* p = cur.slots()[k];
        const Presentation* q = cur.slots()[k + 1];
        for (const auto& [rest, poly] : groups) {
            bool movable = !poly.is_scalar() && p == q && p == total() && ca_->is_coinvariant(poly) == Verdict::EQUAL;
            if (!movable) {
                for (const auto& [w, c] : poly.terms()) {
                    TensorExpr::Key key = rest;
                    key[k] = w;
                    next.add_normal(key, c);
                }
                continue;
            }
            if (tracing()) trace("slide across boundary " + std::to_string(k) + ": " + p->str(poly));
            NCPoly moved = q->mul(poly, NCPoly::word(rest[k + 1]));
            for (const auto& [w, c] : moved.terms()) {
                TensorExpr::Key key = rest;
                key[k + 1] = w;
                next.add_normal(key, c);
            }
        }
        cur = next;
    }
    return cur;
}

Verdict Bialgebroid::decide(const TensorExpr& lhs, const TensorExpr& rhs, Decision* how) const {
    if (how) *how = Decision::Undecided;
    TensorExpr diff = lhs - rhs;
    if (diff.is_zero()) {
        if (how) *how = Decision::Canonical;
        if (tracing()) trace("slotwise normal forms agree");
        return Verdict::EQUAL;
    }
    bool balanced = false;
    for (auto b : diff.boundaries()) balanced = balanced || b == B;
    if (!balanced) return Verdict::INDETERMINATE;
    if (slide(lhs) == slide(rhs)) {
        if (how) *how = Decision::Slide;
        if (tracing()) trace("equal after sliding coinvariant factors");
        return Verdict::EQUAL;
    }
    if (tracing()) trace("slides exhausted; transporting by chi");
    if (ca_->chi_transport(diff).is_zero()) {
        if (how) *how = Decision::ChiTransport;
        return Verdict::EQUAL;
    }
    return Verdict::INDETERMINATE;
}

Sides Bialgebroid::coassociativity(const TensorExpr& h) const {
    TensorExpr d = coproduct(h);  // [a0 a1 | a2 a3]
    return {coproduct(d, 0), coproduct(d, 2)};
}

Sides Bialgebroid::counit_left(const TensorExpr& h) const {
    // eps(h(1)) |> h(2) = s(eps(h(1))) h(2)
    return {coproduct(h).contract(0).contract(0), h};
}

Sides Bialgebroid::counit_right(const TensorExpr& h) const {
    // h(1) <| eps(h(2)) = t(eps(h(2))) h(1)
    return {coproduct(h).contract(2).contract(1), h};
}

Sides Bialgebroid::takeuchi(const TensorExpr& h, const NCPoly& b) const {
    const Presentation* a = total();
    TensorExpr d = coproduct(h);
    TensorExpr tb = TensorExpr::pure(d.slots(), d.boundaries(), {NCPoly(1), b, NCPoly(1), NCPoly(1)});
    TensorExpr sb = TensorExpr::pure(d.slots(), d.boundaries(), {NCPoly(1), NCPoly(1), b, NCPoly(1)});
    (void)a;
    // h(1) t(b) (x)_B h(2) against h(1) (x)_B h(2) s(b)
    return {d.mul(tb, {false, true, false, false}), d.mul(sb, {false, false, false, false})};
}

Sides Bialgebroid::two_descriptions(const TensorExpr& h) const {
    TensorExpr lhs = coproduct(h).contract(2);
    TensorExpr rhs = h.map_slot(1, [&](const Word& w) {
        return tensor2(total(), NCPoly::word(w), total(), NCPoly(1), B);
    });
    return {lhs, rhs};
}

Sides Bialgebroid::antipode_first(const TensorExpr& h) const {
    // (S^-1 h(2))(1) (x)_B (S^-1 h(2))(2) . h(1) = S^-1 h (x)_B 1
    TensorExpr d = coproduct(h).permute({3, 2, 0, 1}, {P, P, P});  // [a3 a2 a0 a1]
    TensorExpr e = coproduct(d, 0);  // [x0 x1<1> x1<2> a2 a0 a1]
    TensorExpr lhs = e.permute({0, 1, 2, 4, 5, 3}, {P, B, P, P, P}).contract(2).contract(3);
    TensorExpr rhs = flip(h).concat(unit(), B);
    return {lhs, rhs};
}

Sides Bialgebroid::antipode_second(const TensorExpr& h) const {
    // (S h(1))(1) . h(2) (x)_B (S h(1))(2) = 1 (x)_B S h
    TensorExpr d = coproduct(h).permute({1, 0, 2, 3}, {P, P, P});  // [a1 a0 a2 a3]
    TensorExpr e = coproduct(d, 0);  // [y0 y1<1> y1<2> a0 a2 a3]
    TensorExpr lhs = e.permute({0, 4, 5, 1, 2, 3}, {P, P, P, B, P}).contract(0).contract(1);
    TensorExpr rhs = unit().concat(flip(h), B);
    return {lhs, rhs};
}

}  // namespace tdeform
