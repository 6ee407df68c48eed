#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tdeform/nc_algebra.hpp"

namespace tdeform {

enum class Boundary { Plain, Balanced };

/// Finite sum of PhaseScalar * (w_0 (x) w_1 (x) ... ) with each w_k a normal word of slot k's
/// presentation. Boundaries between slots are either plain or balanced over the base algebra.
class TensorExpr {
public:
    using Key = std::vector<Word>;
    using Map = std::map<Key, PhaseScalar>;

    TensorExpr() = default;
    TensorExpr(std::vector<const Presentation*> slots, std::vector<Boundary> bounds);
    /// x_0 (x) x_1 (x) ... expanded multilinearly.
    static TensorExpr pure(std::vector<const Presentation*> slots, std::vector<Boundary> bounds,
                           const std::vector<NCPoly>& factors);
    /// Same layout, value 1 (x) ... (x) 1.
    TensorExpr one() const;
    TensorExpr zero() const { return TensorExpr(slots_, bounds_); }

    std::size_t rank() const { return slots_.size(); }
    const std::vector<const Presentation*>& slots() const { return slots_; }
    const std::vector<Boundary>& boundaries() const { return bounds_; }
    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool same_layout(const TensorExpr& o) const { return slots_ == o.slots_ && bounds_ == o.bounds_; }

    /// Adds c * (word tuple); words need not be normal, each slot is reduced.
    void add(const Key& k, const PhaseScalar& c);
    void add_normal(const Key& k, const PhaseScalar& c);

    TensorExpr& operator+=(const TensorExpr& o);
    TensorExpr& operator-=(const TensorExpr& o);
    TensorExpr& operator*=(const PhaseScalar& c);
    friend TensorExpr operator+(TensorExpr a, const TensorExpr& b) { return a += b; }
    friend TensorExpr operator-(TensorExpr a, const TensorExpr& b) { return a -= b; }
    friend TensorExpr operator*(TensorExpr a, const PhaseScalar& c) { return a *= c; }
    friend TensorExpr operator*(const PhaseScalar& c, TensorExpr a) { return a *= c; }
    friend bool operator==(const TensorExpr& a, const TensorExpr& b) { return a.same_layout(b) && a.t_ == b.t_; }

    /// Slotwise product; opposite[k] multiplies slot k as o_k * this_k.
    TensorExpr mul(const TensorExpr& o, const std::vector<bool>& opposite = {}) const;
    /// this (x) o with the given boundary between them.
    TensorExpr concat(const TensorExpr& o, Boundary b) const;
    /// Replace slot k by f(word), a tensor of one or more slots; other slots are carried along.
    TensorExpr map_slot(std::size_t k, const std::function<TensorExpr(const Word&)>& f) const;
    /// Same for a linear map into a single slot of presentation target.
    TensorExpr map_slot_poly(std::size_t k, const Presentation* target,
                             const std::function<NCPoly(const Word&)>& f) const;
    /// Multiply slots k and k+1 together (k+1 first when reversed).
    TensorExpr contract(std::size_t k, bool reversed = false) const;
    /// Apply a scalar-valued functional to slot k and drop the slot; the surviving boundary is the
    /// one on the right of k when k is first, otherwise the one on its left.
    TensorExpr apply_scalar(std::size_t k, const std::function<PhaseScalar(const Word&)>& f) const;
    /// New slot i is old slot perm[i]; all boundaries become bounds.
    TensorExpr permute(const std::vector<std::size_t>& perm, std::vector<Boundary> bounds) const;
    TensorExpr with_boundaries(std::vector<Boundary> bounds) const;
    /// Single-slot value as a polynomial.
    NCPoly as_poly() const;

    std::complex<double> eval(const ThetaMatrix& theta,
                              const std::vector<std::vector<std::complex<double>>>& points) const;
    std::string str() const;

private:
    std::vector<const Presentation*> slots_;
    std::vector<Boundary> bounds_;
    Map t_;
};

/// Two sides of an identity in a common layout.
struct Sides {
    TensorExpr lhs, rhs;
};

TensorExpr tensor1(const Presentation* p, const NCPoly& x);
TensorExpr tensor2(const Presentation* a, const NCPoly& x, const Presentation* b, const NCPoly& y,
                   Boundary bd = Boundary::Plain);

}  // namespace tdeform
