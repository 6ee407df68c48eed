#pragma once

#include "tdeform/galois.hpp"

namespace tdeform {

/// Ehresmann-Schauenburg bialgebroid of a Hopf-Galois extension: coinvariants of A (x) A under the
/// diagonal coaction, product (x (x) y)(x~ (x) y~) = x x~ (x) y~ y, coring coproduct
/// a (x) a~ -> a(0) (x) tau(a(1)) (x) a~, counit a a~, and the flip as antipode.
class Bialgebroid {
public:
    Bialgebroid(const ComoduleAlgebra* ca, const TranslationTable* tt) : ca_(ca), tt_(tt) {}

    const ComoduleAlgebra& comodule() const { return *ca_; }
    const TranslationTable& translation() const { return *tt_; }
    const Presentation* total() const { return ca_->total(); }

    TensorExpr element(const NCPoly& x, const NCPoly& y) const;
    TensorExpr unit() const { return element(NCPoly(1), NCPoly(1)); }
    TensorExpr product(const TensorExpr& x, const TensorExpr& y) const;
    TensorExpr source(const NCPoly& b) const { return element(b, NCPoly(1)); }
    TensorExpr target(const NCPoly& b) const { return element(NCPoly(1), b); }
    TensorExpr flip(const TensorExpr& x) const;
    /// Coring coproduct applied to the pair of slots (k, k+1) of a larger tensor.
    TensorExpr coproduct(const TensorExpr& x, std::size_t k = 0) const;
    NCPoly counit(const TensorExpr& x) const;
    Verdict is_coinvariant(const TensorExpr& x) const;

    /// Slides coinvariant slot factors across every balanced boundary, left to right.
    TensorExpr slide(const TensorExpr& x) const;
    /// Canonical comparison, then slide-and-reduce, then chi-transport.
    Verdict decide(const TensorExpr& lhs, const TensorExpr& rhs, Decision* how = nullptr) const;

    // Sides of the coring, bialgebroid and Hopf-algebroid identities on an element h.
    Sides coassociativity(const TensorExpr& h) const;
    Sides counit_left(const TensorExpr& h) const;
    Sides counit_right(const TensorExpr& h) const;
    Sides takeuchi(const TensorExpr& h, const NCPoly& b) const;
    Sides two_descriptions(const TensorExpr& h) const;
    Sides antipode_first(const TensorExpr& h) const;
    Sides antipode_second(const TensorExpr& h) const;

private:
    const ComoduleAlgebra* ca_;
    const TranslationTable* tt_;
};

}  // namespace tdeform
