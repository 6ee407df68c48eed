#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tdeform/phase.hpp"

namespace tdeform {

using Gen = std::uint16_t;
/// A monomial: generator indices sorted ascending (PBW order of the quantum affine space).
using Word = std::vector<Gen>;

/// Degree-compatible reverse lexicographic order; higher generator index is the smaller variable.
struct TermOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

enum class Verdict { EQUAL, INDETERMINATE, UNEQUAL_NUMERIC };
std::string verdict_str(Verdict v);

/// Sum of PhaseScalar * Word with distinct words and no zero coefficients.
class NCPoly {
public:
    using Map = std::map<Word, PhaseScalar, TermOrder>;

    NCPoly() = default;
    NCPoly(PhaseScalar c);
    NCPoly(long c) : NCPoly(PhaseScalar(c)) {}
    static NCPoly word(Word w, PhaseScalar c = 1);
    static NCPoly gen(Gen g) { return word(Word{g}); }

    bool is_zero() const { return t_.empty(); }
    /// Scalar multiple of the empty word (including zero).
    bool is_scalar() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
    PhaseScalar scalar_part() const;
    const Map& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    const Word& leading_word() const { return t_.rbegin()->first; }
    const PhaseScalar& leading_coef() const { return t_.rbegin()->second; }

    void add(const Word& w, const PhaseScalar& c);
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const PhaseScalar& c);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator-(NCPoly a) { return a *= PhaseScalar(-1); }
    friend NCPoly operator*(NCPoly a, const PhaseScalar& c) { return a *= c; }
    friend NCPoly operator*(const PhaseScalar& c, NCPoly a) { return a *= c; }
    friend bool operator==(const NCPoly& a, const NCPoly& b);
    friend bool operator<(const NCPoly& a, const NCPoly& b);

private:
    Map t_;
};

struct GeneratorSpec {
    std::string name;
    DegreeVector degree;
    std::string star_partner;  ///< empty means self-adjoint
};

struct RewriteRule {
    Word lead;
    NCPoly rhs;  ///< every word strictly below lead
};

struct OverlapIssue {
    Word overlap;
    NCPoly difference;  ///< normal form of the two branches' difference
    std::string description;
};

/// Bicharacter lambda(r,l) used by deformed presentations.
using Bicharacter = std::function<PhaseMonomial(const DegreeVector&, const DegreeVector&)>;

/// Finitely presented graded *-algebra on a quantum affine space: g h = c(g,h) h g for all
/// generator pairs, plus oriented rewrite rules.
class Presentation {
public:
    Presentation(std::string name, std::vector<GeneratorSpec> gens, int grading_arity);

    const std::string& name() const { return name_; }
    int arity() const { return arity_; }
    std::size_t num_gens() const { return gens_.size(); }
    const GeneratorSpec& generator(Gen g) const { return gens_[g]; }
    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    Gen index(const std::string& name) const;
    std::optional<Gen> find(const std::string& name) const;
    Gen star_of(Gen g) const { return star_[g]; }
    const DegreeVector& degree(Gen g) const { return gens_[g].degree; }
    DegreeVector word_degree(const Word& w) const;

    /// g h = c h g; c(h,g) is set to the inverse.
    void set_commutation(Gen g, Gen h, const PhaseScalar& c);
    const PhaseScalar& commutation(Gen g, Gen h) const { return comm_[std::size_t(g) * gens_.size() + h]; }
    bool commutative() const { return commutative_; }

    /// Install lead -> rhs after making the leading coefficient 1; the poly is orientated
    /// by TermOrder. Returns false if the relation is 0 = 0.
    bool add_relation(const NCPoly& relation);
    void add_rule(RewriteRule r);
    const std::vector<RewriteRule>& rules() const { return rules_; }
    void clear_rules();

    /// Vector-space identification with an undeformed algebra: sorted word W of this
    /// presentation equals phi(W) times the commutative monomial.
    void set_underlying(Bicharacter lambda) { lambda_ = std::move(lambda); }
    bool has_underlying() const { return bool(lambda_); }
    PhaseMonomial underlying_phase(const Word& w) const;
    const Bicharacter& bicharacter() const { return lambda_; }

    // Arithmetic.
    PhaseScalar merge_phase(const Word& a, const Word& b) const;  ///< a*b = phase * sorted(a+b)
    Word merge(const Word& a, const Word& b) const;
    NCPoly mul_free(const NCPoly& a, const NCPoly& b) const;      ///< quantum affine product, no rules
    NCPoly mul(const NCPoly& a, const NCPoly& b) const;           ///< product then normal form
    NCPoly product(const std::vector<Gen>& gens) const;          ///< ordered generator string
    NCPoly star(const NCPoly& x) const;
    NCPoly normal_form(const NCPoly& x) const;
    bool is_normal(const Word& w) const;
    Verdict equals(const NCPoly& x, const NCPoly& y) const;
    DegreeVector degree_of(const NCPoly& x) const;
    /// Split into homogeneous components keyed by degree.
    std::map<DegreeVector, NCPoly> components(const NCPoly& x) const;

    /// Critical pairs of the rule set up to the given overlap length.
    std::vector<OverlapIssue> check_overlaps(std::size_t max_len) const;
    /// Bounded Buchberger completion for this quantum affine setting. Returns the number of
    /// rules added; the rule set ends interreduced.
    std::size_t complete(std::size_t max_degree);

    // Text.
    std::string word_str(const Word& w) const;
    std::string str(const NCPoly& x) const;
    /// Lenient polynomial syntax; named elements (and their starred forms) may stand for factors.
    NCPoly parse(const std::string& text, const std::map<std::string, NCPoly>* named = nullptr) const;
    Word parse_word(const std::string& text) const;

    /// Numeric value of x at theta (numeric values of the q's) and a point of the underlying
    /// commutative variety (one value per generator).
    std::complex<double> eval(const NCPoly& x, const ThetaMatrix& theta,
                              const std::vector<std::complex<double>>& point) const;

private:
    std::string name_;
    std::vector<GeneratorSpec> gens_;
    std::vector<Gen> star_;
    int arity_;
    std::vector<PhaseScalar> comm_;
    bool commutative_ = true;
    std::vector<RewriteRule> rules_;
    std::vector<std::uint64_t> rule_mask_;
    Bicharacter lambda_;
    std::map<std::string, Gen> by_name_;

    std::uint64_t mask(const Word& w) const;
    const RewriteRule* find_rule(const Word& w, std::uint64_t m) const;
    void reduce_into(NCPoly::Map& work, NCPoly& out) const;
    NCPoly spoly(const RewriteRule& a, const RewriteRule& b, Word* lcm) const;
    void interreduce();
};

/// While alive, normal_form on this thread returns its input unchanged. The numeric oracle uses
/// it to rebuild identities without any rewriting.
class UnreducedScope {
public:
    UnreducedScope();
    ~UnreducedScope();
    UnreducedScope(const UnreducedScope&) = delete;
    UnreducedScope& operator=(const UnreducedScope&) = delete;
    static bool active();

private:
    bool prev_;
};

bool word_divides(const Word& d, const Word& w);
Word word_quotient(const Word& w, const Word& d);  ///< w minus d as multisets
Word word_lcm(const Word& a, const Word& b);

}  // namespace tdeform
