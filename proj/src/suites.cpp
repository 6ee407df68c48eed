#include "tdeform/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tdeform/trace.hpp"

namespace tdeform {

namespace {

constexpr Boundary P = Boundary::Plain;
constexpr Boundary B = Boundary::Balanced;

using Build = std::function<std::vector<Sides>()>;

std::vector<Sides> one(Sides s) { return {std::move(s)}; }

Sides poly_sides(const Presentation* p, const NCPoly& l, const NCPoly& r) { return {tensor1(p, l), tensor1(p, r)}; }

std::string gen_name(const Presentation* p, Gen g) { return p->generator(g).name; }

std::string idx(std::size_t i, std::size_t j) { return std::to_string(i + 1) + std::to_string(j + 1); }

// FNV-1a, so seeds do not depend on the standard library's string hash.
std::uint64_t fnv(const std::string& s, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

class SuiteBuilder {
public:
    explicit SuiteBuilder(std::string name) { s_.name = std::move(name); }

    void add(std::string id, std::string anchor, Build b) { s_.identities.push_back({std::move(id), std::move(anchor), std::move(b)}); }
    void batch(Batch b) { s_.batches.push_back(std::move(b)); }
    Suite done() { return std::move(s_); }

private:
    Suite s_;
};

// --- shared pieces ---------------------------------------------------------------------------

const Presentation* pA(const CatalogEntry& e) { return e.A.get(); }

PolyMatrix frame(const CatalogEntry& e) { return e.matrix(e.frame); }

// V = X (x). X-dagger as a matrix of A (x) A elements.
TensorMatrix vmat(const CatalogEntry& e) {
    const Presentation* a = pA(e);
    PolyMatrix x = frame(e);
    return otimes_dot(a, x, a, dagger(*a, x), P);
}

TensorExpr vdag(const CatalogEntry& e, const TensorMatrix& v, std::size_t m, std::size_t n) {
    return e.bialgebroid->flip(v(m, n));
}

TensorExpr base_pair(const CatalogEntry& e, const NCPoly& x, const NCPoly& y) { return e.bialgebroid->element(x, y); }

NCPoly base_el(const CatalogEntry& e, const std::string& name) {
    auto it = e.base.find(name);
    if (it == e.base.end()) throw std::logic_error("entry has no base element " + name);
    return it->second;
}

// --- generic suites --------------------------------------------------------------------------

void add_relations(SuiteBuilder& sb, const CatalogEntry& e) {
    for (char tag : {'A', 'H', 'B'}) {
        const Presentation* p = e.algebra(tag);
        if (!p) continue;
        const std::string pre = std::string(1, char(std::tolower(tag))) + "/";
        for (Gen g = 0; g < p->num_gens(); ++g)
            for (Gen h = Gen(g + 1); h < p->num_gens(); ++h)
                sb.add(pre + "commute/" + gen_name(p, g) + "." + gen_name(p, h), "with commutation relations computed to be",
                       [p, g, h] {
                           NCPoly gh = p->mul(NCPoly::gen(g), NCPoly::gen(h));
                           NCPoly hg = p->mul(NCPoly::gen(h), NCPoly::gen(g));
                           return one(poly_sides(p, gh, hg * p->commutation(g, h)));
                       });
        const auto rules = p->rules();
        for (std::size_t i = 0; i < rules.size(); ++i) {
            if (i >= 64) break;  // completed systems are long; the leading rules stand for the rest
            sb.add(pre + "rule/" + std::to_string(i + 1) + "/" + p->word_str(rules[i].lead), "deformed relations",
                   [p, r = rules[i]] {
                       NCPoly lead = NCPoly::word(r.lead);
                       return one(poly_sides(p, p->normal_form(lead), p->normal_form(r.rhs)));
                   });
        }
    }
}

// Relations of B and coinvariance, read through the embedding into A.
void add_base_relations(SuiteBuilder& sb, const CatalogEntry& e) {
    const Presentation* b = e.B.get();
    const Presentation* a = pA(e);
    if (!b) return;
    auto embed = [&e, a, b](const NCPoly& x) {
        NCPoly r;
        for (const auto& [w, c] : x.terms()) {
            NCPoly t(c);
            for (Gen g : w) t = a->mul(t, base_el(e, gen_name(b, g)));
            r += t;
        }
        return r;
    };
    for (Gen g = 0; g < b->num_gens(); ++g) {
        const std::string name = gen_name(b, g);
        sb.add("coinvariant/" + name, "the subalgebra of invariants", [&e, a, name] {
            NCPoly x = base_el(e, name);
            return one(Sides{e.comodule->coaction(x), tensor2(a, x, e.H.get(), NCPoly(1))});
        });
        sb.add("star/" + name, "*-structure", [&e, a, b, g, name] {
            Gen s = b->star_of(g);
            return one(poly_sides(a, a->star(base_el(e, name)), base_el(e, gen_name(b, s))));
        });
        for (Gen h = Gen(g + 1); h < b->num_gens(); ++h)
            sb.add("commute/" + name + "." + gen_name(b, h), "one computes the commutation rules", [&e, a, b, g, h] {
                NCPoly x = base_el(e, gen_name(b, g)), y = base_el(e, gen_name(b, h));
                return one(poly_sides(a, a->mul(x, y), a->mul(y, x) * b->commutation(g, h)));
            });
    }
    const auto rules = b->rules();
    for (std::size_t i = 0; i < rules.size(); ++i)
        sb.add("sphere/" + std::to_string(i + 1), "gives an analogous one", [a, r = rules[i], embed] {
            NCPoly lead = NCPoly::word(r.lead);
            return one(poly_sides(a, embed(lead), embed(r.rhs)));
        });
}

std::vector<std::pair<std::string, Word>> hopf_sample(const Presentation* h, int random_words, std::uint64_t seed) {
    std::vector<std::pair<std::string, Word>> sample;
    for (Gen g = 0; g < h->num_gens(); ++g) sample.emplace_back(gen_name(h, g), Word{g});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> len(2, 3);
    for (int i = 0; i < random_words; ++i) {
        Word w = random_word(*h, len(rng), rng);
        sample.emplace_back("w" + std::to_string(i) + "[" + h->word_str(w) + "]", w);
    }
    return sample;
}

void add_hopf(SuiteBuilder& sb, const HopfAlgebra* H, int random_words, int pairs, std::uint64_t seed) {
    const Presentation* h = H->pres();
    auto sample = hopf_sample(h, random_words, seed);
    for (const auto& [label, w] : sample) {
        sb.add("coassociativity/" + label, "coassociative coproduct", [H, w] {
            TensorExpr d = H->coproduct(NCPoly::word(w));
            auto D = [H](const Word& x) { return H->coproduct_word(x); };
            return one(Sides{d.map_slot(0, D), d.map_slot(1, D)});
        });
        sb.add("counit/" + label, "counit law", [H, h, w] {
            TensorExpr d = H->coproduct(NCPoly::word(w));
            auto eps = [H](const Word& x) { return H->counit_word(x); };
            TensorExpr x = tensor1(h, h->normal_form(NCPoly::word(w)));
            return std::vector<Sides>{{d.apply_scalar(0, eps), x}, {d.apply_scalar(1, eps), x}};
        });
        sb.add("antipode/" + label, "We are left to verify", [H, h, w] {
            NCPoly x = NCPoly::word(w);
            TensorExpr d = H->coproduct(x);
            auto S = [H](const Word& y) { return H->antipode_word(y); };
            TensorExpr unit = tensor1(h, NCPoly(H->counit(x)));
            return std::vector<Sides>{{d.map_slot_poly(0, h, S).contract(0), unit},
                                      {d.map_slot_poly(1, h, S).contract(0), unit}};
        });
    }
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<std::size_t> pick(0, sample.size() - 1);
    for (int i = 0; i < pairs; ++i) {
        const auto& [la, wa] = sample[pick(rng)];
        const auto& [lb, wb] = sample[pick(rng)];
        const std::string label = "p" + std::to_string(i) + "[" + la + "*" + lb + "]";
        sb.add("coproduct-multiplicative/" + label, "still an algebra homomorphism", [H, h, wa, wb] {
            NCPoly a = NCPoly::word(wa), b = NCPoly::word(wb);
            return one(Sides{H->coproduct(h->mul(a, b)), H->coproduct(a).mul(H->coproduct(b))});
        });
        sb.add("counit-multiplicative/" + label, "counit is an algebra map", [H, h, wa, wb] {
            NCPoly a = NCPoly::word(wa), b = NCPoly::word(wb);
            return one(poly_sides(h, NCPoly(H->counit(h->mul(a, b))), NCPoly(H->counit(a) * H->counit(b))));
        });
        sb.add("antipode-antimultiplicative/" + label, "antipode is an anti-algebra map", [H, h, wa, wb] {
            NCPoly a = NCPoly::word(wa), b = NCPoly::word(wb);
            return one(poly_sides(h, H->antipode(h->mul(a, b)), h->mul(H->antipode(b), H->antipode(a))));
        });
    }
}

void add_translation(SuiteBuilder& sb, const CatalogEntry& e) {
    const ComoduleAlgebra& ca = *e.comodule;
    const TranslationTable& tt = *e.translation;
    const Presentation* H = e.H.get();
    const Presentation* A = pA(e);
    const std::string anchor = "translation map enjoys a number of properties";
    for (Gen g = 0; g < H->num_gens(); ++g) {
        Word h{g};
        const std::string name = gen_name(H, g);
        sb.add("p1/" + name, anchor, [&ca, &tt, h] { return one(p1_sides(ca, tt, h)); });
        sb.add("p4/" + name, anchor, [&ca, &tt, h] { return one(p4_sides(ca, tt, h)); });
        sb.add("p5/" + name, "both agree with (p5)", [&ca, &tt, h] { return one(p5_sides(ca, tt, h)); });
        sb.add("p6/" + name, anchor, [&ca, &tt, h] { return one(p6_sides(ca, tt, h)); });
        sb.add("p7/" + name, "Thus by definition", [&ca, &tt, h] { return one(p7_sides(ca, tt, h)); });
        for (std::size_t b = 0; b < ca.base_generators().size(); ++b)
            sb.add("p8/" + name + "/" + e.base_order[b], anchor,
                   [&ca, &tt, h, b] { return one(p8_sides(ca, tt, ca.base_generators()[b], h)); });
        for (Gen k = 0; k < H->num_gens(); ++k)
            sb.add("p2/" + name + "." + gen_name(H, k), anchor, [&ca, &tt, g, k] { return one(p2_sides(ca, tt, g, k)); });
    }
    for (Gen g = 0; g < A->num_gens(); ++g)
        sb.add("p3/" + gen_name(A, g), anchor, [&ca, &tt, g] { return one(p3_sides(ca, tt, Word{g})); });
}

// Identities on the frame X: X-dagger X = I, X X-dagger against its display, coinvariance.
void add_frame(SuiteBuilder& sb, const CatalogEntry& e, const std::string& display, const std::string& op_display) {
    const Presentation* a = pA(e);
    const std::size_t rows = frame(e).rows(), cols = frame(e).cols();
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            sb.add("unitary/" + idx(i, j), "gives that Phi-dagger Phi = I", [&e, a, i, j] {
                PolyMatrix x = frame(e);
                NCPoly v = mat_mul(*a, dagger(*a, x), x)(i, j);
                return one(poly_sides(a, v, NCPoly(i == j ? 1 : 0)));
            });
            sb.add("unitary-op/" + idx(i, j), "Phi-dagger .op Phi = I", [&e, a, i, j] {
                PolyMatrix x = frame(e);
                NCPoly v = mat_mul(*a, dagger(*a, x), x, true)(i, j);
                return one(poly_sides(a, v, NCPoly(i == j ? 1 : 0)));
            });
        }
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) {
            const std::string k = idx(i, j);
            sb.add("projection-display/" + k, "p = Psi . Psi-dagger", [&e, a, i, j, display] {
                PolyMatrix x = frame(e);
                return one(poly_sides(a, mat_mul(*a, x, dagger(*a, x))(i, j), e.matrix(display)(i, j)));
            });
            sb.add("projection-idempotent/" + k, "is a projection", [&e, a, i, j] {
                PolyMatrix x = frame(e);
                PolyMatrix p = mat_mul(*a, x, dagger(*a, x));
                return one(poly_sides(a, mat_mul(*a, p, p)(i, j), p(i, j)));
            });
            sb.add("projection-selfadjoint/" + k, "is a projection", [&e, a, i, j] {
                PolyMatrix x = frame(e);
                PolyMatrix p = mat_mul(*a, x, dagger(*a, x));
                return one(poly_sides(a, dagger(*a, p)(i, j), p(i, j)));
            });
            sb.add("projection-coinvariant/" + k, "are coinvariants", [&e, a, i, j] {
                PolyMatrix x = frame(e);
                NCPoly p = mat_mul(*a, x, dagger(*a, x))(i, j);
                return one(Sides{e.comodule->coaction(p), tensor2(a, p, e.H.get(), NCPoly(1))});
            });
            sb.add("opposite-display/" + k, "opposite projection", [&e, a, i, j, op_display] {
                PolyMatrix x = frame(e);
                NCPoly q = mat_mul(*a, x, dagger(*a, x), true)(i, j);
                if (!op_display.empty()) return one(poly_sides(a, q, e.matrix(op_display)(i, j)));
                // Q (X X-dagger)^t Q
                PolyMatrix Q = e.matrix("Q");
                PolyMatrix p = mat_mul(*a, x, dagger(*a, x));
                PolyMatrix r = mat_mul(*a, mat_mul(*a, Q, p.transpose()), Q);
                return one(poly_sides(a, q, r(i, j)));
            });
            sb.add("opposite-coinvariant/" + k, "are coinvariants", [&e, a, i, j] {
                PolyMatrix x = frame(e);
                NCPoly q = mat_mul(*a, x, dagger(*a, x), true)(i, j);
                return one(Sides{e.comodule->coaction(q), tensor2(a, q, e.H.get(), NCPoly(1))});
            });
        }
}

// Relations among the generators V of the bialgebroid.
void add_v_relations(SuiteBuilder& sb, const CatalogEntry& e) {
    const Presentation* a = pA(e);
    const std::size_t m = frame(e).rows();
    const Bialgebroid* C = e.bialgebroid.get();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const std::string k = idx(i, j);
            sb.add("V-coinvariant/" + k, "are coinvariants for the diagonal coaction", [&e, C, i, j] {
                TensorMatrix v = vmat(e);
                TensorExpr x = v(i, j);
                TensorExpr d = e.comodule->diagonal_coaction(x);
                return one(Sides{d, x.concat(tensor1(e.H.get(), NCPoly(1)), P)});
            });
            sb.add("V-dagger-coinvariant/" + k, "are coinvariants for the diagonal coaction", [&e, i, j] {
                TensorMatrix v = vmat(e);
                TensorExpr x = vdag(e, v, i, j);
                TensorExpr d = e.comodule->diagonal_coaction(x);
                return one(Sides{d, x.concat(tensor1(e.H.get(), NCPoly(1)), P)});
            });
            sb.add("VVdagger/" + k, "which express relations among the generators", [&e, a, C, i, j, m] {
                TensorMatrix v = vmat(e);
                TensorExpr acc = C->unit().zero();
                for (std::size_t r = 0; r < m; ++r) acc += C->product(v(i, r), vdag(e, v, r, j));
                PolyMatrix x = frame(e);
                NCPoly p = mat_mul(*a, x, dagger(*a, x))(i, j);
                return one(Sides{acc, base_pair(e, p, NCPoly(1))});
            });
            sb.add("VdaggerV/" + k, "which express relations among the generators", [&e, a, C, i, j, m] {
                TensorMatrix v = vmat(e);
                TensorExpr acc = C->unit().zero();
                for (std::size_t r = 0; r < m; ++r) acc += C->product(vdag(e, v, i, r), v(r, j));
                PolyMatrix x = frame(e);
                NCPoly q = mat_mul(*a, x, dagger(*a, x), true)(i, j);
                return one(Sides{acc, base_pair(e, NCPoly(1), q)});
            });
        }
}

void add_coring(SuiteBuilder& sb, const CatalogEntry& e) {
    const std::size_t m = frame(e).rows();
    const Bialgebroid* C = e.bialgebroid.get();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const std::string k = idx(i, j);
            sb.add("coproduct-V/" + k, "Delta(V) = V (x)_B V", [&e, C, i, j, m] {
                TensorMatrix v = vmat(e);
                TensorExpr rhs = v(i, j).concat(v(j, j), B).zero();
                for (std::size_t r = 0; r < m; ++r) rhs += v(i, r).concat(v(r, j), B);
                return one(Sides{C->coproduct(v(i, j)), rhs});
            });
            sb.add("coproduct-Vdagger/" + k, "Delta(V-dagger)", [&e, C, i, j, m] {
                TensorMatrix v = vmat(e);
                TensorExpr rhs = v(i, j).concat(v(j, j), B).zero();
                for (std::size_t r = 0; r < m; ++r) rhs += vdag(e, v, r, j).concat(vdag(e, v, i, r), B);
                return one(Sides{C->coproduct(vdag(e, v, i, j)), rhs});
            });
            sb.add("coassociativity/" + k, "coassociative", [&e, C, i, j] {
                return one(C->coassociativity(vmat(e)(i, j)));
            });
            sb.add("counit/" + k, "counit", [&e, C, i, j] {
                TensorExpr h = vmat(e)(i, j);
                return std::vector<Sides>{C->counit_left(h), C->counit_right(h)};
            });
        }
}

void add_bialgebroid(SuiteBuilder& sb, const CatalogEntry& e) {
    const Presentation* a = pA(e);
    const std::size_t m = frame(e).rows();
    const Bialgebroid* C = e.bialgebroid.get();
    const auto& names = e.base_order;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const std::string k = idx(i, j);
            sb.add("two-descriptions/" + k, "an equivalent description", [&e, C, i, j] {
                return one(C->two_descriptions(vmat(e)(i, j)));
            });
            for (const auto& b : names)
                sb.add("takeuchi/" + k + "/" + b, "Takeuchi product", [&e, C, i, j, b] {
                    return one(C->takeuchi(vmat(e)(i, j), base_el(e, b)));
                });
            // counit property iii on V_ij against every V_kl with k,l on the diagonal block
            sb.add("counit-source/" + k, "counit property", [&e, a, C, i, j, names] {
                TensorExpr h = vmat(e)(i, j);
                std::vector<Sides> out;
                for (const auto& b : names) {
                    NCPoly bb = base_el(e, b);
                    out.push_back(poly_sides(a, C->counit(C->product(C->source(bb), h)), a->mul(bb, C->counit(h))));
                }
                return out;
            });
            sb.add("counit-product/" + k, "counit property", [&e, a, C, i, j, m] {
                TensorMatrix v = vmat(e);
                TensorExpr h = v(i, j);
                std::vector<Sides> out;
                for (std::size_t r = 0; r < m; ++r) {
                    TensorExpr g = v(j, r);
                    NCPoly eg = C->counit(g);
                    NCPoly mid = C->counit(C->product(h, g));
                    out.push_back(poly_sides(a, C->counit(C->product(h, C->source(eg))), mid));
                    out.push_back(poly_sides(a, C->counit(C->product(h, C->target(eg))), mid));
                }
                return out;
            });
        }
    sb.add("counit-unit", "counit property", [C, a] { return one(poly_sides(a, C->counit(C->unit()), NCPoly(1))); });
    for (const auto& b : names)
        for (const auto& c : names)
            sb.add("source-target-commute/" + b + "." + c, "source and target map", [&e, C, b, c] {
                TensorExpr s = C->source(base_el(e, b)), t = C->target(base_el(e, c));
                return one(Sides{C->product(s, t), C->product(t, s)});
            });
}

void add_antipode(SuiteBuilder& sb, const CatalogEntry& e) {
    const std::size_t m = frame(e).rows();
    const Bialgebroid* C = e.bialgebroid.get();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            sb.add("V" + idx(i, j), "In components of V this works as follows", [&e, C, i, j] {
                TensorMatrix v = vmat(e);
                TensorExpr h = v(i, j);
                return std::vector<Sides>{{C->flip(h), vdag(e, v, i, j)},
                                          {C->flip(C->flip(h)), h},
                                          C->antipode_second(h),
                                          C->antipode_first(h)};
            });
}

// --- SU(2) generators and relations ----------------------------------------------------------

TensorExpr bilinear(const CatalogEntry& e, const std::string& text) {
    const Presentation* a = pA(e);
    TensorExpr r = e.bialgebroid->unit().zero();
    std::size_t pos = 0;
    bool neg = false;
    while (pos < text.size()) {
        std::size_t next = text.find_first_of("+-", pos);
        // a '-' right after '*' cannot occur: generators end with '*' only before spaces
        std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        auto at = tok.find('@');
        if (at != std::string::npos) {
            TensorExpr t = e.bialgebroid->element(a->parse(tok.substr(0, at)), a->parse(tok.substr(at + 1)));
            r += neg ? t * PhaseScalar(-1) : t;
        }
        if (next == std::string::npos) break;
        neg = text[next] == '-';
        pos = next + 1;
    }
    return r;
}

struct Named {
    const char* name;
    std::size_t i, j;
    int sign;
    const char* display;
};

// V = [[P1, Q2], [Q1, P2]] with tilde entries; the displayed bilinear expressions.
const std::vector<Named>& su2_names() {
    static const std::vector<Named> n = {
        {"Z0", 0, 0, 1, "psi1@psi1* + psi2*@psi2"},   {"~Z0", 1, 1, 1, "psi1*@psi1 + psi2@psi2*"},
        {"X0", 1, 0, 1, "psi2@psi1* - psi1*@psi2"},   {"~X0", 0, 1, -1, "psi2*@psi1 - psi1@psi2*"},
        {"W0", 2, 2, 1, "psi3@psi3* + psi4*@psi4"},   {"~W0", 3, 3, 1, "psi3*@psi3 + psi4@psi4*"},
        {"Y0", 3, 2, 1, "psi4@psi3* - psi3*@psi4"},   {"~Y0", 2, 3, -1, "psi4*@psi3 - psi3@psi4*"},
        {"Z1", 2, 0, 1, "psi3@psi1* + psi4*@psi2"},   {"~Z1", 3, 1, 1, "psi3*@psi1 + psi4@psi2*"},
        {"W1", 3, 0, 1, "psi4@psi1* - psi3*@psi2"},   {"~W1", 2, 1, -1, "psi4*@psi1 - psi3@psi2*"},
        {"Z2", 0, 2, 1, "psi1@psi3* + psi2*@psi4"},   {"~Z2", 1, 3, 1, "psi2@psi4* + psi1*@psi3"},
        {"W2", 1, 2, 1, "psi2@psi3* - psi1*@psi4"},   {"~W2", 0, 3, -1, "psi2*@psi3 - psi1@psi4*"},
    };
    return n;
}

TensorExpr su2_gen(const TensorMatrix& v, const std::string& name) {
    for (const auto& n : su2_names())
        if (name == n.name) return n.sign > 0 ? v(n.i, n.j) : v(n.i, n.j) * PhaseScalar(-1);
    throw std::logic_error("unknown bialgebroid generator " + name);
}

// "~Z0 Z0 + ~X0 X0" in the bialgebroid product.
TensorExpr su2_expr(const CatalogEntry& e, const TensorMatrix& v, const std::string& text) {
    const Bialgebroid* C = e.bialgebroid.get();
    TensorExpr r = C->unit().zero();
    std::istringstream in(text);
    std::string tok;
    TensorExpr term = C->unit();
    bool neg = false, open = false;
    auto flush = [&] {
        if (open) r += neg ? term * PhaseScalar(-1) : term;
        term = C->unit();
        open = false;
    };
    while (in >> tok) {
        if (tok == "+" || tok == "-") {
            flush();
            neg = tok == "-";
            continue;
        }
        term = C->product(term, su2_gen(v, tok));
        open = true;
    }
    flush();
    return r;
}

void add_su2_generators(SuiteBuilder& sb, const CatalogEntry& e) {
    for (const auto& n : su2_names()) {
        std::string name = n.name;
        sb.add("bilinear/" + name, "An explicit computation leads to", [&e, name, n] {
            TensorMatrix v = vmat(e);
            return one(Sides{su2_gen(v, name), bilinear(e, n.display)});
        });
    }
    const Presentation* a = pA(e);
    auto z0 = [&e] { return base_el(e, "zeta0"); };
    auto co = [&e, a](const NCPoly& x) { return a->normal_form(NCPoly(1) - x); };
    struct Rel {
        std::string id, lhs;
        int left, right;  // 0: zeta0, 1: 1 - zeta0
    };
    const std::vector<Rel> spheres = {
        {"sphere-1a", "~Z0 Z0 + ~X0 X0", 0, 0}, {"sphere-1b", "Z0 ~Z0 + X0 ~X0", 0, 0},
        {"sphere-2a", "~W0 W0 + ~Y0 Y0", 1, 1}, {"sphere-2b", "W0 ~W0 + Y0 ~Y0", 1, 1},
        {"sphere-3a", "~Z1 Z1 + ~W1 W1", 1, 0}, {"sphere-3b", "Z1 ~Z1 + W1 ~W1", 1, 0},
        {"sphere-4a", "~Z2 Z2 + ~W2 W2", 0, 1}, {"sphere-4b", "Z2 ~Z2 + W2 ~W2", 0, 1},  // printed with Z1, W1
    };
    for (const auto& r : spheres)
        sb.add(r.id, "There are four sphere relations", [&e, r, z0, co] {
            TensorMatrix v = vmat(e);
            NCPoly l = r.left ? co(z0()) : z0(), rr = r.right ? co(z0()) : z0();
            return one(Sides{su2_expr(e, v, r.lhs), base_pair(e, l, rr)});
        });
    struct St {
        std::string id, lhs, base;
        bool source;
    };
    const std::vector<St> st = {
        {"source-zeta0", "~Z0 Z0 + ~X0 X0 + ~Z2 Z2 + ~W2 W2", "zeta0", true},
        {"source-zeta1", "Z0 ~Z1 + ~X0 W1 + Z2 ~W0 + ~W2 Y0", "zeta1", true},  // (V V-dagger)_13; printed with W2
        {"source-zeta2", "X0 ~Z1 + W2 ~W0 - ~Z0 W1 - ~Z2 Y0", "zeta2", true},
        {"target-zeta0", "~Z0 Z0 + ~X0 X0 + ~Z1 Z1 + ~W1 W1", "zeta0", false},
        {"target-zeta1", "W2 ~X0 + Z2 ~Z0 + Y0 ~W1 + W0 ~Z1", "zeta1", false},
        {"target-zeta2", "W2 Z0 - Z2 X0 + Y0 Z1 - W0 W1", "zeta2", false},
    };
    for (const auto& s : st)
        sb.add(s.id, "The source map", [&e, s] {
            TensorMatrix v = vmat(e);
            NCPoly b = base_el(e, s.base);
            return one(Sides{su2_expr(e, v, s.lhs), s.source ? base_pair(e, b, NCPoly(1)) : base_pair(e, NCPoly(1), b)});
        });
    add_v_relations(sb, e);
}

// Random word pairs: the oracle compares the normal form of the product with the free product.
void add_word_products(SuiteBuilder& sb, const CatalogEntry& e, int per_algebra, std::uint64_t seed) {
    for (char tag : {'A', 'H', 'B'}) {
        const Presentation* p = e.algebra(tag);
        if (!p) continue;
        std::mt19937_64 rng(seed ^ fnv(std::string(1, tag)));
        std::uniform_int_distribution<std::size_t> len(1, 3);
        for (int i = 0; i < per_algebra; ++i) {
            Word x = random_word(*p, len(rng), rng), y = random_word(*p, len(rng), rng);
            Word xy = x;
            xy.insert(xy.end(), y.begin(), y.end());
            const std::string id = std::string(1, char(std::tolower(tag))) + "/" + std::to_string(i) + "[" +
                                   p->word_str(x) + "*" + p->word_str(y) + "]";
            sb.add(id, "deformed product", [p, x, y, xy] {
                NCPoly prod = p->mul(NCPoly::word(x), NCPoly::word(y));
                // the free word keeps its unreduced shape on the right-hand side
                TensorExpr raw({p}, {});
                raw.add_normal({xy}, PhaseScalar(1));
                TensorExpr lhs = tensor1(p, prod);
                if (UnreducedScope::active()) return one(Sides{lhs, raw});
                return one(Sides{lhs, tensor1(p, p->product(xy))});
            });
        }
    }
}

// --- registry --------------------------------------------------------------------------------

const std::vector<std::string>& su2_suites() {
    static const std::vector<std::string> s = {"relations",           "projection",        "base-relations",
                                               "hopf-axioms",         "translation-properties",
                                               "generator-relations", "coring-axioms",     "bialgebroid-axioms",
                                               "antipode-flip",       "word-products"};
    return s;
}

const std::vector<std::string>& so_suites() {
    static const std::vector<std::string> s = {
        "relations",          "bigrading",       "hopf-axioms-HTheta", "hopf-axioms-A",     "frame",
        "translation-properties", "degree-lemmas", "base-relations",   "generator-relations", "coring-axioms",
        "bialgebroid-axioms", "antipode-flip",   "word-products"};
    return s;
}

}  // namespace

std::vector<std::string> list_suites(const CatalogEntry& e) {
    if (e.family == "su2") return su2_suites();
    if (e.family == "so-theta") {
        auto s = so_suites();
        if (!e.hopf_total) s.erase(std::find(s.begin(), s.end(), "hopf-axioms-A"));
        return s;
    }
    std::vector<std::string> s = {"relations", "hopf-axioms", "translation-properties"};
    if (e.B) s.push_back("base-relations");
    if (!e.frame.empty()) {
        s.push_back("frame");
        s.push_back("generator-relations");
        s.push_back("coring-axioms");
        s.push_back("bialgebroid-axioms");
        s.push_back("antipode-flip");
    }
    s.push_back("word-products");
    return s;
}

std::vector<std::string> list_suites(const std::string& entry_name) {
    if (entry_name == "su2") return su2_suites();
    if (entry_name == "so-theta") return so_suites();
    return {};
}

Suite make_suite(const CatalogEntry& e, const std::string& name) {
    auto avail = list_suites(e);
    if (std::find(avail.begin(), avail.end(), name) == avail.end())
        throw std::invalid_argument("unknown suite '" + name + "' for entry " + e.name);
    SuiteBuilder sb(name);
    const std::uint64_t seed = fnv(e.name + "/" + name);
    if (name == "relations") add_relations(sb, e);
    else if (name == "base-relations") add_base_relations(sb, e);
    else if (name == "hopf-axioms" || name == "hopf-axioms-HTheta") add_hopf(sb, e.hopf.get(), 20, 40, seed);
    else if (name == "hopf-axioms-A") add_hopf(sb, e.hopf_total.get(), e.n > 1 ? 4 : 10, e.n > 1 ? 8 : 20, seed);
    else if (name == "translation-properties") add_translation(sb, e);
    else if (name == "projection") add_frame(sb, e, "p_display", "q_display");
    else if (name == "frame") add_frame(sb, e, e.has_matrix("PhiPhiDagger_display") ? "PhiPhiDagger_display" : "", "");
    else if (name == "generator-relations") {
        if (e.family == "su2") add_su2_generators(sb, e);
        else add_v_relations(sb, e);
    } else if (name == "coring-axioms") add_coring(sb, e);
    else if (name == "bialgebroid-axioms") add_bialgebroid(sb, e);
    else if (name == "antipode-flip") add_antipode(sb, e);
    else if (name == "word-products") add_word_products(sb, e, 170, seed);
    else if (name == "bigrading") sb.batch([&e] { return check_bigrading(*e.hopf); });
    else if (name == "degree-lemmas") sb.batch([&e] { return check_degree_lemmas(*e.comodule, *e.translation); });
    return sb.done();
}

double numeric_difference(const CatalogEntry& e, const Sides& s, const ThetaMatrix& theta, std::mt19937_64& rng,
                          int points) {
    // Balanced tensors are only defined up to moving B across the boundary, so they are moved to
    // A (x) H by chi before evaluation. Raw input is reduced slotwise first: chi of long unreduced
    // words expands exponentially.
    auto prep = [&](const TensorExpr& t) {
        for (auto bd : t.boundaries())
            if (bd == B) {
                TensorExpr r = t.zero();
                for (const auto& [k, c] : t.terms()) r.add(k, c);
                return e.comodule->chi_transport(r);
            }
        return t;
    };
    TensorExpr l = prep(s.lhs), r = prep(s.rhs);
    if (!l.same_layout(r)) throw std::logic_error("numeric oracle: sides have different layouts");
    std::vector<PointSampler> samplers;
    for (const Presentation* p : l.slots()) {
        samplers.push_back(e.sampler(p));
        if (!samplers.back()) throw std::logic_error("numeric oracle: no sampler for " + p->name());
    }
    double worst = 0;
    for (int k = 0; k < points; ++k) {
        std::vector<Point> pts;
        for (auto& f : samplers) pts.push_back(f(rng));
        worst = std::max(worst, std::abs(l.eval(theta, pts) - r.eval(theta, pts)));
    }
    return worst;
}

namespace {

std::string decision_word(Decision d) { return decision_str(d); }

CheckItem run_identity(const CatalogEntry& e, const Identity& id, const RunOptions& o) {
    CheckItem it;
    it.id = id.id;
    it.anchor = id.anchor;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Sides> reduced;
    try {
        std::vector<std::string> sink;
        std::optional<TraceScope> scope;
        if (o.trace) scope.emplace(sink);
        reduced = id.sides();
        it.verdict = Verdict::EQUAL;
        std::string how;
        for (std::size_t k = 0; k < reduced.size(); ++k) {
            Decision d;
            if (o.trace && reduced.size() > 1) trace("-- part " + std::to_string(k + 1));
            Verdict v = e.bialgebroid->decide(reduced[k].lhs, reduced[k].rhs, &d);
            if (v != Verdict::EQUAL) {
                it.verdict = v;
                std::string diff = (reduced[k].lhs - reduced[k].rhs).str();
                if (diff.size() > 300) diff = diff.substr(0, 300) + "...";
                how = "part " + std::to_string(k + 1) + " undecided; difference " + diff;
                break;
            }
            if (how.find(decision_word(d)) == std::string::npos) how += (how.empty() ? "" : ",") + decision_word(d);
        }
        it.detail = it.verdict == Verdict::EQUAL ? "by " + how : how;
        scope.reset();
        it.trace = std::move(sink);
    } catch (const std::exception& ex) {
        it.verdict = Verdict::INDETERMINATE;
        it.detail = std::string("error: ") + ex.what();
        reduced.clear();
    }
    if (o.numeric && !reduced.empty()) {
        try {
            std::vector<Sides> raw;
            {
                UnreducedScope u;
                raw = id.sides();
            }
            ThetaMatrix th = e.numeric_theta(*o.numeric);
            std::mt19937_64 rng(o.seed ^ fnv(id.id));
            double worst = 0;
            for (std::size_t k = 0; k < reduced.size() && k < raw.size(); ++k) {
                worst = std::max(worst, numeric_difference(e, {reduced[k].lhs, raw[k].rhs}, th, rng, o.numeric_points));
                worst = std::max(worst, numeric_difference(e, {raw[k].lhs, reduced[k].rhs}, th, rng, o.numeric_points));
            }
            it.numeric_diff = worst;
            if (worst > o.numeric_tolerance) {
                if (it.verdict == Verdict::EQUAL) it.detail += "; numeric oracle conflict";
                it.verdict = Verdict::UNEQUAL_NUMERIC;
            }
        } catch (const std::exception& ex) {
            it.detail += std::string("; numeric oracle error: ") + ex.what();
            if (it.verdict == Verdict::EQUAL) it.verdict = Verdict::INDETERMINATE;
        }
    }
    it.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return it;
}

}  // namespace

CheckReport run_suite(const CatalogEntry& e, const Suite& s, const RunOptions& o) {
    CheckReport rep;
    rep.suite = s.name;
    std::vector<CheckItem> items(s.identities.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) items[i] = run_identity(e, s.identities[i], o);
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(o.jobs, unsigned(items.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& it : items) rep.add(std::move(it));
    for (const auto& b : s.batches) {
        auto t0 = std::chrono::steady_clock::now();
        CheckReport r = b();
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (auto& it : r.items) {
            if (it.seconds == 0) it.seconds = dt / double(std::max<std::size_t>(1, r.items.size()));
            rep.add(it);
        }
    }
    rep.sort_items();
    return rep;
}

}  // namespace tdeform
