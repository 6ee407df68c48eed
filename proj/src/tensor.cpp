#include "tdeform/tensor.hpp"

#include <stdexcept>

namespace tdeform {

namespace {

// Calls emit(key, coef) for every term of c * f_0 (x) f_1 (x) ...
template <class F>
void expand(const std::vector<NCPoly>& factors, const PhaseScalar& c, F&& emit) {
    for (const auto& f : factors)
        if (f.is_zero()) return;
    TensorExpr::Key key(factors.size());
    std::vector<NCPoly::Map::const_iterator> it(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) it[i] = factors[i].terms().begin();
    while (true) {
        PhaseScalar coef = c;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            key[i] = it[i]->first;
            coef = coef * it[i]->second;
        }
        emit(key, coef);
        std::size_t i = factors.size();
        while (i > 0) {
            --i;
            if (++it[i] != factors[i].terms().end()) break;
            it[i] = factors[i].terms().begin();
            if (i == 0) return;
        }
        if (factors.empty()) return;
    }
}

}  // namespace

TensorExpr::TensorExpr(std::vector<const Presentation*> slots, std::vector<Boundary> bounds)
    : slots_(std::move(slots)), bounds_(std::move(bounds)) {
    if (slots_.empty() ? !bounds_.empty() : bounds_.size() + 1 != slots_.size())
        throw std::invalid_argument("tensor layout: boundary count must be slot count minus one");
}

TensorExpr TensorExpr::pure(std::vector<const Presentation*> slots, std::vector<Boundary> bounds,
                            const std::vector<NCPoly>& factors) {
    TensorExpr r(std::move(slots), std::move(bounds));
    if (factors.size() != r.slots_.size()) throw std::invalid_argument("tensor: factor count mismatch");
    std::vector<NCPoly> nf;
    for (std::size_t i = 0; i < factors.size(); ++i) nf.push_back(r.slots_[i]->normal_form(factors[i]));
    expand(nf, PhaseScalar(1), [&](const Key& k, const PhaseScalar& c) { r.add_normal(k, c); });
    return r;
}

TensorExpr TensorExpr::one() const {
    TensorExpr r(slots_, bounds_);
    r.add_normal(Key(slots_.size()), PhaseScalar(1));
    return r;
}

void TensorExpr::add_normal(const Key& k, const PhaseScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

void TensorExpr::add(const Key& k, const PhaseScalar& c) {
    std::vector<NCPoly> f;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (slots_[i]->is_normal(k[i])) f.push_back(NCPoly::word(k[i]));
        else f.push_back(slots_[i]->normal_form(NCPoly::word(k[i])));
    }
    expand(f, c, [&](const Key& kk, const PhaseScalar& cc) { add_normal(kk, cc); });
}

TensorExpr& TensorExpr::operator+=(const TensorExpr& o) {
    if (!same_layout(o)) throw std::invalid_argument("tensor sum: layout mismatch");
    for (const auto& [k, c] : o.t_) add_normal(k, c);
    return *this;
}

TensorExpr& TensorExpr::operator-=(const TensorExpr& o) {
    if (!same_layout(o)) throw std::invalid_argument("tensor difference: layout mismatch");
    for (const auto& [k, c] : o.t_) add_normal(k, -c);
    return *this;
}

TensorExpr& TensorExpr::operator*=(const PhaseScalar& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [k, v] : t_) v = v * c;
    return *this;
}

TensorExpr TensorExpr::mul(const TensorExpr& o, const std::vector<bool>& opposite) const {
    if (!same_layout(o)) throw std::invalid_argument("tensor product: layout mismatch");
    TensorExpr r(slots_, bounds_);
    std::vector<NCPoly> f(slots_.size());
    for (const auto& [ka, ca] : t_)
        for (const auto& [kb, cb] : o.t_) {
            for (std::size_t i = 0; i < slots_.size(); ++i) {
                bool op = i < opposite.size() && opposite[i];
                f[i] = op ? slots_[i]->mul(NCPoly::word(kb[i]), NCPoly::word(ka[i]))
                          : slots_[i]->mul(NCPoly::word(ka[i]), NCPoly::word(kb[i]));
            }
            expand(f, ca * cb, [&](const Key& k, const PhaseScalar& c) { r.add_normal(k, c); });
        }
    return r;
}

TensorExpr TensorExpr::concat(const TensorExpr& o, Boundary b) const {
    if (slots_.empty()) return o * (t_.empty() ? PhaseScalar(0) : t_.begin()->second);
    if (o.slots_.empty()) return *this * (o.t_.empty() ? PhaseScalar(0) : o.t_.begin()->second);
    auto slots = slots_;
    slots.insert(slots.end(), o.slots_.begin(), o.slots_.end());
    auto bounds = bounds_;
    bounds.push_back(b);
    bounds.insert(bounds.end(), o.bounds_.begin(), o.bounds_.end());
    TensorExpr r(slots, bounds);
    for (const auto& [ka, ca] : t_)
        for (const auto& [kb, cb] : o.t_) {
            Key k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            r.add_normal(k, ca * cb);
        }
    return r;
}

TensorExpr TensorExpr::map_slot(std::size_t k, const std::function<TensorExpr(const Word&)>& f) const {
    if (k >= slots_.size()) throw std::out_of_range("map_slot: slot index");
    std::map<Word, TensorExpr> cache;
    TensorExpr r;
    bool init = false;
    for (const auto& [key, c] : t_) {
        auto it = cache.find(key[k]);
        if (it == cache.end()) it = cache.emplace(key[k], f(key[k])).first;
        const TensorExpr& img = it->second;
        if (!init) {
            std::vector<const Presentation*> slots(slots_.begin(), slots_.begin() + long(k));
            slots.insert(slots.end(), img.slots_.begin(), img.slots_.end());
            slots.insert(slots.end(), slots_.begin() + long(k) + 1, slots_.end());
            std::vector<Boundary> bounds(bounds_.begin(), bounds_.begin() + long(k));
            bounds.insert(bounds.end(), img.bounds_.begin(), img.bounds_.end());
            bounds.insert(bounds.end(), bounds_.begin() + long(k), bounds_.end());
            r = TensorExpr(slots, bounds);
            init = true;
        }
        if (img.slots_.size() + slots_.size() - 1 != r.slots_.size())
            throw std::logic_error("map_slot: images of different rank");
        for (const auto& [ik, ic] : img.t_) {
            Key nk(key.begin(), key.begin() + long(k));
            nk.insert(nk.end(), ik.begin(), ik.end());
            nk.insert(nk.end(), key.begin() + long(k) + 1, key.end());
            r.add_normal(nk, c * ic);
        }
    }
    if (!init) {
        // Zero input: layout from an image of the empty word.
        TensorExpr img = f(Word{});
        std::vector<const Presentation*> slots(slots_.begin(), slots_.begin() + long(k));
        slots.insert(slots.end(), img.slots_.begin(), img.slots_.end());
        slots.insert(slots.end(), slots_.begin() + long(k) + 1, slots_.end());
        std::vector<Boundary> bounds(bounds_.begin(), bounds_.begin() + long(k));
        bounds.insert(bounds.end(), img.bounds_.begin(), img.bounds_.end());
        bounds.insert(bounds.end(), bounds_.begin() + long(k), bounds_.end());
        r = TensorExpr(slots, bounds);
    }
    return r;
}

TensorExpr TensorExpr::map_slot_poly(std::size_t k, const Presentation* target,
                                     const std::function<NCPoly(const Word&)>& f) const {
    return map_slot(k, [&](const Word& w) { return tensor1(target, f(w)); });
}

TensorExpr TensorExpr::contract(std::size_t k, bool reversed) const {
    if (k + 1 >= slots_.size()) throw std::out_of_range("contract: slot index");
    if (slots_[k] != slots_[k + 1]) throw std::invalid_argument("contract: slots live in different algebras");
    const Presentation* p = slots_[k];
    std::vector<const Presentation*> slots = slots_;
    slots.erase(slots.begin() + long(k) + 1);
    std::vector<Boundary> bounds = bounds_;
    bounds.erase(bounds.begin() + long(k));
    TensorExpr r(slots, bounds);
    std::vector<NCPoly> f(slots.size());
    for (const auto& [key, c] : t_) {
        for (std::size_t i = 0, j = 0; i < slots.size(); ++i, ++j) {
            if (i == k) {
                f[i] = reversed ? p->mul(NCPoly::word(key[k + 1]), NCPoly::word(key[k]))
                                : p->mul(NCPoly::word(key[k]), NCPoly::word(key[k + 1]));
                ++j;
            } else {
                f[i] = NCPoly::word(key[j]);
            }
        }
        expand(f, c, [&](const Key& kk, const PhaseScalar& cc) { r.add_normal(kk, cc); });
    }
    return r;
}

TensorExpr TensorExpr::apply_scalar(std::size_t k, const std::function<PhaseScalar(const Word&)>& f) const {
    if (k >= slots_.size()) throw std::out_of_range("apply_scalar: slot index");
    std::vector<const Presentation*> slots = slots_;
    slots.erase(slots.begin() + long(k));
    std::vector<Boundary> bounds = bounds_;
    if (!bounds.empty()) bounds.erase(bounds.begin() + long(k == 0 ? 0 : k - 1));
    TensorExpr r(slots, bounds);
    std::map<Word, PhaseScalar> cache;
    for (const auto& [key, c] : t_) {
        auto it = cache.find(key[k]);
        if (it == cache.end()) it = cache.emplace(key[k], f(key[k])).first;
        Key nk = key;
        nk.erase(nk.begin() + long(k));
        r.add_normal(nk, c * it->second);
    }
    return r;
}

TensorExpr TensorExpr::permute(const std::vector<std::size_t>& perm, std::vector<Boundary> bounds) const {
    if (perm.size() != slots_.size()) throw std::invalid_argument("permute: size mismatch");
    std::vector<const Presentation*> slots;
    for (auto i : perm) slots.push_back(slots_.at(i));
    TensorExpr r(slots, std::move(bounds));
    for (const auto& [key, c] : t_) {
        Key nk;
        for (auto i : perm) nk.push_back(key[i]);
        r.add_normal(nk, c);
    }
    return r;
}

TensorExpr TensorExpr::with_boundaries(std::vector<Boundary> bounds) const {
    TensorExpr r(slots_, std::move(bounds));
    r.t_ = t_;
    return r;
}

NCPoly TensorExpr::as_poly() const {
    if (slots_.size() != 1) throw std::logic_error("as_poly: tensor has rank " + std::to_string(slots_.size()));
    NCPoly r;
    for (const auto& [k, c] : t_) r.add(k[0], c);
    return r;
}

std::complex<double> TensorExpr::eval(const ThetaMatrix& theta,
                                      const std::vector<std::vector<std::complex<double>>>& points) const {
    if (points.size() != slots_.size()) throw std::invalid_argument("eval: one point per slot required");
    std::complex<double> acc = 0;
    for (const auto& [key, c] : t_) {
        std::complex<double> v = c.eval(theta);
        for (std::size_t i = 0; i < key.size(); ++i) v *= slots_[i]->eval(NCPoly::word(key[i]), theta, points[i]);
        acc += v;
    }
    return acc;
}

std::string TensorExpr::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [key, c] = *it;
        if (!s.empty()) s += " + ";
        if (!c.is_one()) s += "[" + c.str() + "] ";
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) s += bounds_[i - 1] == Boundary::Plain ? " (x) " : " (x)_B ";
            s += slots_[i]->word_str(key[i]);
        }
    }
    return s;
}

TensorExpr tensor1(const Presentation* p, const NCPoly& x) { return TensorExpr::pure({p}, {}, {x}); }

TensorExpr tensor2(const Presentation* a, const NCPoly& x, const Presentation* b, const NCPoly& y, Boundary bd) {
    return TensorExpr::pure({a, b}, {bd}, {x, y});
}

}  // namespace tdeform
