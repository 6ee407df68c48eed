#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "tdeform/hopf.hpp"
#include "tdeform/report.hpp"

namespace tdeform {

/// Right H-comodule algebra A with coinvariant subalgebra B generated by base_generators.
class ComoduleAlgebra {
public:
    ComoduleAlgebra(const Presentation* a, const HopfAlgebra* h, std::map<Gen, TensorExpr> coaction_of,
                    std::vector<NCPoly> base_generators);

    const Presentation* total() const { return a_; }
    const HopfAlgebra* hopf() const { return h_; }
    const std::vector<NCPoly>& base_generators() const { return base_; }
    const std::map<Gen, TensorExpr>& table() const { return tab_; }

    TensorExpr coaction(const NCPoly& x) const;  ///< A (x) H
    TensorExpr coaction_word(const Word& w) const;
    Verdict is_coinvariant(const NCPoly& x) const;
    /// x (x)_B y -> x y(0) (x) y(1) on a two-slot tensor.
    TensorExpr canonical_map(const TensorExpr& x) const;
    /// Removes every balanced boundary by applying the canonical map at the rightmost one, until
    /// none are left. Injective for a Hopf-Galois extension.
    TensorExpr chi_transport(const TensorExpr& x) const;
    /// a (x) a~ -> a(0) (x) a~(0) (x) a(1) a~(1).
    TensorExpr diagonal_coaction(const TensorExpr& x) const;

private:
    const Presentation* a_;
    const HopfAlgebra* h_;
    std::map<Gen, TensorExpr> tab_;
    std::vector<NCPoly> base_;
    mutable std::mutex mu_;
    mutable std::map<Word, TensorExpr> memo_[2];
};

/// Translation map on generators, extended by tau(hk) = k<1>h<1> (x)_B h<2>k<2>.
class TranslationTable {
public:
    TranslationTable(const ComoduleAlgebra* ca, std::map<Gen, TensorExpr> tau_of);

    const std::map<Gen, TensorExpr>& table() const { return tab_; }
    TensorExpr translation(const NCPoly& h) const;
    TensorExpr translation_word(const Word& w) const;

private:
    const ComoduleAlgebra* ca_;
    std::map<Gen, TensorExpr> tab_;
    mutable std::mutex mu_;
    mutable std::map<Word, TensorExpr> memo_[2];
};

/// How an equality of tensors was decided.
enum class Decision { Canonical, Slide, ChiTransport, Undecided };
std::string decision_str(Decision d);

/// Decides lhs = rhs. Plain layouts compare slotwise normal forms; balanced layouts are compared
/// after chi-transport. Records a trace line when tracing.
Verdict decide_equal(const ComoduleAlgebra& ca, const TensorExpr& lhs, const TensorExpr& rhs,
                     Decision* how = nullptr);

// Sides of the translation-map properties. h, k are H-words, a an A-word, b a base element.
Sides p1_sides(const ComoduleAlgebra& ca, const TranslationTable& tt, const Word& h);
Sides p2_sides(const ComoduleAlgebra& ca, const TranslationTable& tt, Gen h, Gen k);
Sides p3_sides(const ComoduleAlgebra& ca, const TranslationTable& tt, const Word& a);
Sides p4_sides(const ComoduleAlgebra& ca, const TranslationTable& tt, const Word& h);
Sides p5_sides(const ComoduleAlgebra& ca, const TranslationTable& tt, const Word& h);
Sides p6_sides(const ComoduleAlgebra& ca, const TranslationTable& tt, const Word& h);
Sides p7_sides(const ComoduleAlgebra& ca, const TranslationTable& tt, const Word& h);
Sides p8_sides(const ComoduleAlgebra& ca, const TranslationTable& tt, const NCPoly& b, const Word& h);

CheckReport check_translation_properties(const ComoduleAlgebra& ca, const TranslationTable& tt);
/// Bigraded case: base generators of right degree 0, tau bidegree shape, opposite degrees on the
/// diagonal and vanishing of h<1>h<2> off the diagonal.
CheckReport check_degree_lemmas(const ComoduleAlgebra& ca, const TranslationTable& tt);

}  // namespace tdeform
