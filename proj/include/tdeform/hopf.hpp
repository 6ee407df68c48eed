#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <random>

#include "tdeform/report.hpp"
#include "tdeform/tensor.hpp"

namespace tdeform {

struct StructureTable {
    std::map<Gen, TensorExpr> coproduct_of;  ///< in H (x) H
    std::map<Gen, PhaseScalar> counit_of;
    std::map<Gen, NCPoly> antipode_of;
};

/// Hopf algebra on a presentation. Tables live on generators; the coproduct and counit extend
/// multiplicatively and the antipode anti-multiplicatively, using the presentation's own
/// (possibly deformed) product on every leg.
class HopfAlgebra {
public:
    HopfAlgebra(const Presentation* h, StructureTable t);

    const Presentation* pres() const { return h_; }
    const StructureTable& table() const { return t_; }

    TensorExpr coproduct(const NCPoly& x) const;
    TensorExpr coproduct_word(const Word& w) const;
    PhaseScalar counit(const NCPoly& x) const;
    PhaseScalar counit_word(const Word& w) const;
    NCPoly antipode(const NCPoly& x) const;
    NCPoly antipode_word(const Word& w) const;

private:
    const Presentation* h_;
    StructureTable t_;
    mutable std::mutex mu_;
    mutable std::map<Word, TensorExpr> delta_memo_[2];
    mutable std::map<Word, NCPoly> s_memo_[2];
};

/// Coassociativity, counit and antipode laws and the multiplicativity of the structure maps, on
/// every generator and on random words up to the given length.
CheckReport check_hopf_axioms(const HopfAlgebra& h, std::size_t depth, int random_words, std::mt19937_64& rng);

/// Bigrading conditions for a Z^n x Z^n graded Hopf algebra, on generators and quadratic words:
/// multiplication additive in degree, coproduct of degree (r,l) lands in sum_s H(r,s) (x) H(s,l),
/// counit supported on r = l, antipode of degree (-l,-r), star negating the degree.
CheckReport check_bigrading(const HopfAlgebra& h);

/// Splits a bidegree (r,l) of arity 2n.
std::pair<DegreeVector, DegreeVector> split_bidegree(const DegreeVector& d);

}  // namespace tdeform
