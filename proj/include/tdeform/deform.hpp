#pragma once

#include <random>
#include <string>

#include "tdeform/nc_algebra.hpp"
#include "tdeform/report.hpp"

namespace tdeform {

enum class Scenario { I, II };

/// Scenario I: Z^n grading, lambda_theta. Scenario II: Z^n x Z^n bigrading with
/// Theta = diag(theta, -theta).
struct DeformationContext {
    Scenario scenario = Scenario::I;
    ThetaMatrix theta;  ///< formal multiplicities of the q_{jk}

    int arity() const { return scenario == Scenario::I ? theta.dim() : 2 * theta.dim(); }
    PhaseMonomial lambda(const DegreeVector& r, const DegreeVector& l) const;
    Bicharacter bicharacter() const;
    DeformationContext negated() const { return {scenario, theta.scaled(-1)}; }
};

/// x ._theta y computed in the undeformed presentation p.
NCPoly deform_product(const DeformationContext& ctx, const Presentation& p, const NCPoly& x, const NCPoly& y);

/// The deformed algebra as a presentation of its own: commutation phases multiplied by
/// lambda(deg g, deg h)^2 and relations carried over through the vector-space identification.
Presentation deformed_presentation(const DeformationContext& ctx, const Presentation& p,
                                   const std::string& name = "");

/// Samples homogeneous pairs with deg a = +-deg b and compares deformed and plain products.
CheckReport check_same_degree_product(const DeformationContext& ctx, const Presentation& p, int samples,
                                      std::mt19937_64& rng);

/// Random normal word of the given length (uniform generator choices, then normalized away if reducible).
Word random_word(const Presentation& p, std::size_t len, std::mt19937_64& rng);

}  // namespace tdeform

namespace tdeform {

/// Vector-space identification of a deformed presentation with its undeformed source:
/// a sorted word W of pd equals phi(W) times the same commutative monomial.
NCPoly to_undeformed(const Presentation& pd, const NCPoly& x);
NCPoly from_undeformed(const Presentation& pd, const NCPoly& x);

}  // namespace tdeform
