#include "tdeform/nc_algebra.hpp"
#include "tdeform/trace.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace tdeform {

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::EQUAL: return "EQUAL";
        case Verdict::INDETERMINATE: return "INDETERMINATE";
        case Verdict::UNEQUAL_NUMERIC: return "UNEQUAL_NUMERIC";
    }
    return "?";
}

bool word_divides(const Word& d, const Word& w) {
    return std::includes(w.begin(), w.end(), d.begin(), d.end());
}

Word word_quotient(const Word& w, const Word& d) {
    Word r;
    r.reserve(w.size() - std::min(w.size(), d.size()));
    std::set_difference(w.begin(), w.end(), d.begin(), d.end(), std::back_inserter(r));
    return r;
}

Word word_lcm(const Word& a, const Word& b) {
    Word r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

// ---------------------------------------------------------------- NCPoly

NCPoly::NCPoly(PhaseScalar c) {
    if (!c.is_zero()) t_.emplace(Word{}, std::move(c));
}

NCPoly NCPoly::word(Word w, PhaseScalar c) {
    NCPoly p;
    if (!c.is_zero()) p.t_.emplace(std::move(w), std::move(c));
    return p;
}

PhaseScalar NCPoly::scalar_part() const {
    auto it = t_.find(Word{});
    return it == t_.end() ? PhaseScalar() : it->second;
}

void NCPoly::add(const Word& w, const PhaseScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) add(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) add(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const PhaseScalar& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto it = t_.begin(); it != t_.end();) {
        it->second = it->second * c;
        if (it->second.is_zero()) it = t_.erase(it);
        else ++it;
    }
    return *this;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (auto i = a.t_.begin(), j = b.t_.begin(); i != a.t_.end(); ++i, ++j)
        if (i->first != j->first || !(i->second == j->second)) return false;
    return true;
}

bool operator<(const NCPoly& a, const NCPoly& b) {
    return std::lexicographical_compare(a.t_.begin(), a.t_.end(), b.t_.begin(), b.t_.end(),
                                        [](const auto& x, const auto& y) {
                                            if (TermOrder{}(x.first, y.first)) return true;
                                            if (TermOrder{}(y.first, x.first)) return false;
                                            return x.second < y.second;
                                        });
}

// ---------------------------------------------------------------- Presentation

Presentation::Presentation(std::string name, std::vector<GeneratorSpec> gens, int grading_arity)
    : name_(std::move(name)), gens_(std::move(gens)), arity_(grading_arity) {
    const std::size_t n = gens_.size();
    if (n > 0xffff) throw std::invalid_argument("too many generators");
    for (std::size_t g = 0; g < n; ++g) {
        if (int(gens_[g].degree.size()) != arity_)
            throw std::invalid_argument("generator " + gens_[g].name + " has degree of wrong arity");
        if (!by_name_.emplace(gens_[g].name, Gen(g)).second)
            throw std::invalid_argument("duplicate generator " + gens_[g].name);
    }
    star_.resize(n);
    for (std::size_t g = 0; g < n; ++g) {
        const auto& partner = gens_[g].star_partner;
        if (partner.empty() || partner == gens_[g].name) {
            star_[g] = Gen(g);
        } else {
            auto it = by_name_.find(partner);
            if (it == by_name_.end()) throw std::invalid_argument("unknown star partner " + partner);
            star_[g] = it->second;
        }
    }
    for (std::size_t g = 0; g < n; ++g) {
        if (star_[star_[g]] != g) throw std::invalid_argument("star of star of " + gens_[g].name + " is not itself");
        if (gens_[star_[g]].degree != -gens_[g].degree)
            throw std::invalid_argument("star partner of " + gens_[g].name + " must carry the opposite degree");
    }
    comm_.assign(n * n, PhaseScalar(1));
}

Gen Presentation::index(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw std::invalid_argument("unknown generator '" + name + "' in " + name_);
    return it->second;
}

std::optional<Gen> Presentation::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

DegreeVector Presentation::word_degree(const Word& w) const {
    DegreeVector d(std::size_t(arity_), 0);
    for (Gen g : w)
        for (int i = 0; i < arity_; ++i) d[std::size_t(i)] += gens_[g].degree[std::size_t(i)];
    return d;
}

void Presentation::set_commutation(Gen g, Gen h, const PhaseScalar& c) {
    if (!c.is_unit()) throw std::invalid_argument("commutation phase must be a unit");
    if (g == h) {
        if (!c.is_one()) throw std::invalid_argument("a generator commutes with itself");
        return;
    }
    comm_[std::size_t(g) * gens_.size() + h] = c;
    comm_[std::size_t(h) * gens_.size() + g] = c.inverse();
    commutative_ = std::all_of(comm_.begin(), comm_.end(), [](const PhaseScalar& x) { return x.is_one(); });
}

std::uint64_t Presentation::mask(const Word& w) const {
    std::uint64_t m = 0;
    for (Gen g : w) m |= std::uint64_t(1) << (g & 63);
    return m;
}

bool Presentation::add_relation(const NCPoly& relation) {
    if (relation.is_zero()) return false;
    const Word lead = relation.leading_word();
    const PhaseScalar& c = relation.leading_coef();
    if (!c.is_unit()) throw std::invalid_argument("relation leading coefficient is not invertible");
    if (lead.empty()) throw std::invalid_argument("relation reduces to a nonzero constant");
    NCPoly rhs = relation;
    rhs.add(lead, -c);
    rhs *= -c.inverse();
    DegreeVector d = word_degree(lead);
    for (const auto& [w, _] : rhs.terms())
        if (word_degree(w) != d) throw std::invalid_argument("relation is not degree-homogeneous at " + word_str(w));
    add_rule({lead, std::move(rhs)});
    return true;
}

void Presentation::add_rule(RewriteRule r) {
    for (const auto& [w, _] : r.rhs.terms())
        if (!TermOrder{}(w, r.lead)) throw std::invalid_argument("rule does not decrease the word order");
    rule_mask_.push_back(mask(r.lead));
    rules_.push_back(std::move(r));
}

void Presentation::clear_rules() {
    rules_.clear();
    rule_mask_.clear();
}

PhaseMonomial Presentation::underlying_phase(const Word& w) const {
    PhaseMonomial m;
    if (!lambda_) return m;
    for (std::size_t s = 0; s < w.size(); ++s)
        for (std::size_t t = s + 1; t < w.size(); ++t) m = m * lambda_(gens_[w[s]].degree, gens_[w[t]].degree);
    return m;
}

PhaseScalar Presentation::merge_phase(const Word& a, const Word& b) const {
    PhaseScalar ph(1);
    if (commutative_) return ph;
    // b's letters move left past the larger letters of a
    for (Gen x : a)
        for (Gen y : b)
            if (x > y) {
                const PhaseScalar& c = comm_[std::size_t(x) * gens_.size() + y];
                if (!c.is_one()) ph = ph * c;
            }
    return ph;
}

Word Presentation::merge(const Word& a, const Word& b) const {
    Word r;
    r.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

NCPoly Presentation::mul_free(const NCPoly& a, const NCPoly& b) const {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) r.add(merge(wa, wb), ca * cb * merge_phase(wa, wb));
    return r;
}

NCPoly Presentation::mul(const NCPoly& a, const NCPoly& b) const { return normal_form(mul_free(a, b)); }

NCPoly Presentation::product(const std::vector<Gen>& gens) const {
    NCPoly r(1);
    for (Gen g : gens) r = mul_free(r, NCPoly::gen(g));
    return normal_form(r);
}

NCPoly Presentation::star(const NCPoly& x) const {
    NCPoly r;
    for (const auto& [w, c] : x.terms()) {
        NCPoly t(c.conj());
        for (auto it = w.rbegin(); it != w.rend(); ++it) t = mul_free(t, NCPoly::gen(star_[*it]));
        r += t;
    }
    return normal_form(r);
}

const RewriteRule* Presentation::find_rule(const Word& w, std::uint64_t m) const {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        if ((rule_mask_[i] & ~m) != 0) continue;
        if (rules_[i].lead.size() <= w.size() && word_divides(rules_[i].lead, w)) return &rules_[i];
    }
    return nullptr;
}

bool Presentation::is_normal(const Word& w) const { return find_rule(w, mask(w)) == nullptr; }

void Presentation::reduce_into(NCPoly::Map& work, NCPoly& out) const {
    while (!work.empty()) {
        auto it = std::prev(work.end());
        Word w = it->first;
        PhaseScalar c = std::move(it->second);
        work.erase(it);
        const RewriteRule* r = find_rule(w, mask(w));
        if (!r) {
            out.add(w, c);
            continue;
        }
        Word rest = word_quotient(w, r->lead);
        PhaseScalar f = c * merge_phase(r->lead, rest).inverse();
        if (tracing())
            trace(name_ + ": rewrite " + word_str(r->lead) + " in " + word_str(w) + " -> " + str(r->rhs) +
                  (f == c ? "" : "  (reordering phase " + merge_phase(r->lead, rest).inverse().str() + ")"));
        for (const auto& [rw, rc] : r->rhs.terms()) {
            Word m = merge(rw, rest);
            PhaseScalar v = f * rc * merge_phase(rw, rest);
            auto [jt, fresh] = work.try_emplace(std::move(m), v);
            if (!fresh) {
                jt->second += v;
                if (jt->second.is_zero()) work.erase(jt);
            }
        }
    }
}

namespace {
thread_local bool g_unreduced = false;
}

UnreducedScope::UnreducedScope() : prev_(g_unreduced) { g_unreduced = true; }
UnreducedScope::~UnreducedScope() { g_unreduced = prev_; }
bool UnreducedScope::active() { return g_unreduced; }

NCPoly Presentation::normal_form(const NCPoly& x) const {
    if (rules_.empty() || g_unreduced) return x;
    NCPoly::Map work = x.terms();
    NCPoly out;
    reduce_into(work, out);
    return out;
}

Verdict Presentation::equals(const NCPoly& x, const NCPoly& y) const {
    return normal_form(x - y).is_zero() ? Verdict::EQUAL : Verdict::INDETERMINATE;
}

DegreeVector Presentation::degree_of(const NCPoly& x) const {
    if (x.is_zero()) throw std::invalid_argument("degree of zero polynomial");
    std::set<DegreeVector> found;
    for (const auto& [w, _] : x.terms()) found.insert(word_degree(w));
    if (found.size() != 1) {
        std::string s;
        for (const auto& d : found) s += (s.empty() ? "" : " ") + degree_str(d);
        throw std::invalid_argument("InhomogeneousInput: degrees " + s);
    }
    return *found.begin();
}

std::map<DegreeVector, NCPoly> Presentation::components(const NCPoly& x) const {
    std::map<DegreeVector, NCPoly> r;
    for (const auto& [w, c] : x.terms()) r[word_degree(w)].add(w, c);
    return r;
}

// ---------------------------------------------------------------- completion

NCPoly Presentation::spoly(const RewriteRule& a, const RewriteRule& b, Word* lcm_out) const {
    Word l = word_lcm(a.lead, b.lead);
    if (lcm_out) *lcm_out = l;
    Word ra = word_quotient(l, a.lead), rb = word_quotient(l, b.lead);
    // lcm = pa^{-1} lead_a * ra = pb^{-1} lead_b * rb; substitute the right-hand sides
    PhaseScalar pa = merge_phase(a.lead, ra).inverse(), pb = merge_phase(b.lead, rb).inverse();
    NCPoly s = mul_free(a.rhs, NCPoly::word(ra)) * pa;
    s -= mul_free(b.rhs, NCPoly::word(rb)) * pb;
    return s;
}

std::vector<OverlapIssue> Presentation::check_overlaps(std::size_t max_len) const {
    std::vector<OverlapIssue> out;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        // a generator g q-commutes past lead_i; the rule must be compatible with that
        for (Gen g = 0; g < gens_.size(); ++g) {
            if (rules_[i].lead.size() + 1 > max_len) break;
            Word gw{g};
            NCPoly rel = NCPoly::word(rules_[i].lead) - rules_[i].rhs;
            NCPoly left = mul_free(NCPoly::word(gw), rel);
            NCPoly right = mul_free(rel, NCPoly::word(gw));
            PhaseScalar ph = merge_phase(gw, rules_[i].lead) * merge_phase(rules_[i].lead, gw).inverse();
            NCPoly d = normal_form(left - right * ph);
            if (!d.is_zero())
                out.push_back({merge(gw, rules_[i].lead), d,
                               "generator " + gens_[g].name + " does not q-commute with rule " + word_str(rules_[i].lead)});
        }
        for (std::size_t j = i + 1; j < rules_.size(); ++j) {
            const Word &a = rules_[i].lead, &b = rules_[j].lead;
            Word common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (common.empty()) continue;
            Word l;
            NCPoly s = spoly(rules_[i], rules_[j], &l);
            if (l.size() > max_len) continue;
            NCPoly d = normal_form(s);
            if (!d.is_zero())
                out.push_back({l, d, "overlap of " + word_str(a) + " and " + word_str(b) + " at " + word_str(l)});
        }
    }
    return out;
}

void Presentation::interreduce() {
    std::vector<RewriteRule> old = std::move(rules_);
    std::sort(old.begin(), old.end(), [](const auto& x, const auto& y) { return TermOrder{}(x.lead, y.lead); });
    std::vector<RewriteRule> keep;
    for (auto& r : old) {
        bool redundant = std::any_of(keep.begin(), keep.end(), [&](const auto& k) { return word_divides(k.lead, r.lead); });
        if (!redundant) keep.push_back(std::move(r));
    }
    clear_rules();
    for (auto& r : keep) add_rule(std::move(r));
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        RewriteRule self = std::move(rules_[i]);
        rules_[i].lead = self.lead;
        rules_[i].rhs = NCPoly();
        rule_mask_[i] = ~std::uint64_t(0);  // disable while reducing its own tail
        NCPoly t = normal_form(self.rhs);
        rules_[i] = {self.lead, std::move(t)};
        rule_mask_[i] = mask(self.lead);
    }
}

std::size_t Presentation::complete(std::size_t max_degree) {
    struct Pair {
        Word lcm;
        std::size_t i, j;
        bool operator<(const Pair& o) const {
            if (TermOrder{}(lcm, o.lcm)) return true;
            if (TermOrder{}(o.lcm, lcm)) return false;
            return std::tie(i, j) < std::tie(o.i, o.j);
        }
    };
    std::set<Pair> pairs;
    std::set<std::pair<std::size_t, std::size_t>> live;
    std::vector<bool> active(rules_.size(), true);
    std::size_t added = 0;

    auto push_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            if (!active[i]) continue;
            Word common;
            std::set_intersection(rules_[i].lead.begin(), rules_[i].lead.end(), rules_[k].lead.begin(),
                                  rules_[k].lead.end(), std::back_inserter(common));
            if (common.empty()) continue;  // coprime leads: the pair reduces to zero
            Word l = word_lcm(rules_[i].lead, rules_[k].lead);
            if (l.size() > max_degree) continue;
            pairs.insert({l, i, k});
            live.insert({i, k});
        }
    };
    auto add_poly = [&](NCPoly s) {
        s *= s.leading_coef().inverse();
        Word lead = s.leading_word();
        s.add(lead, -PhaseScalar(1));
        add_rule({lead, -s});
        active.push_back(true);
        const std::size_t k = rules_.size() - 1;
        for (std::size_t i = 0; i < k; ++i)
            if (active[i] && word_divides(lead, rules_[i].lead)) {
                // the old rule stays usable for reduction; its pairs are covered by k
                active[i] = false;
            }
        push_pairs(k);
        ++added;
    };

    // commutation compatibility of each relation with every generator
    for (std::size_t i = 0; i < rules_.size(); ++i)
        for (Gen g = 0; g < gens_.size() && rules_[i].lead.size() + 1 <= max_degree; ++g) {
            Word gw{g};
            NCPoly rel = NCPoly::word(rules_[i].lead) - rules_[i].rhs;
            PhaseScalar ph = merge_phase(gw, rules_[i].lead) * merge_phase(rules_[i].lead, gw).inverse();
            NCPoly d = normal_form(mul_free(NCPoly::word(gw), rel) - mul_free(rel, NCPoly::word(gw)) * ph);
            if (!d.is_zero()) add_poly(std::move(d));
        }
    for (std::size_t k = 0; k < rules_.size(); ++k) push_pairs(k);

    while (!pairs.empty()) {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        live.erase({p.i, p.j});
        if (!active[p.i] || !active[p.j]) continue;
        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < rules_.size() && !skip; ++k) {
            if (k == p.i || k == p.j || !active[k]) continue;
            if (!word_divides(rules_[k].lead, p.lcm)) continue;
            auto key = [](std::size_t a, std::size_t b) { return std::pair{std::min(a, b), std::max(a, b)}; };
            if (!live.count(key(p.i, k)) && !live.count(key(p.j, k))) skip = true;
        }
        if (skip) continue;
        NCPoly s = normal_form(spoly(rules_[p.i], rules_[p.j], nullptr));
        if (!s.is_zero()) add_poly(std::move(s));
    }
    interreduce();
    return added;
}

// ---------------------------------------------------------------- text

std::string Presentation::word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "." : "") + gens_[w[i]].name;
    return s;
}

std::string Presentation::str(const NCPoly& x) const {
    if (x.is_zero()) return "0";
    std::string s;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        const auto& [w, c] = *it;
        if (!s.empty()) s += " ";
        if (c.terms().size() == 1) s += c.str();
        else s += "+[" + c.str() + "]";
        if (!w.empty()) s += " * " + word_str(w);
    }
    return s;
}

namespace {

struct PolyParser {
    const Presentation& p;
    const std::string& s;
    const std::map<std::string, NCPoly>* macros = nullptr;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at column " + std::to_string(pos + 1) + ": " + what);
    }
    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    mpz_class integer() {
        ws();
        std::size_t b = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        std::size_t d = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (d == pos) fail("expected integer");
        return mpz_class(s.substr(b, pos - b));
    }
    Rational rational() {
        mpz_class a = integer();
        mpz_class c = 1;
        if (peek('/') && pos + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
            ++pos;
            c = integer();
            if (c == 0) fail("zero denominator");
        }
        Rational r(a, c);
        r.canonicalize();
        return r;
    }
    std::string ident() {
        ws();
        std::size_t b = pos;
        if (pos >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            fail("expected generator name");
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        if (pos < s.size() && s[pos] == '*') ++pos;
        return s.substr(b, pos - b);
    }

    NCPoly factor() {
        ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '[') {
            ++pos;
            std::size_t e = s.find(']', pos);
            // nested q[...] brackets: find the matching bracket
            int depth = 1;
            for (e = pos; e < s.size() && depth; ++e) {
                if (s[e] == '[') ++depth;
                if (s[e] == ']') --depth;
            }
            if (depth) fail("unbalanced '['");
            PhaseScalar v = PhaseScalar::parse(s.substr(pos, e - 1 - pos));
            pos = e;
            return NCPoly(v);
        }
        if (c == '(') {
            ++pos;
            Rational a = rational();
            ws();
            bool neg = false;
            if (eat('-')) neg = true;
            else expect('+');
            Rational b = rational();
            expect('i');
            expect(')');
            if (peek('/')) {
                ++pos;
                mpz_class d = integer();
                if (d == 0) fail("zero denominator");
                a /= Rational(d);
                b /= Rational(d);
            }
            return NCPoly(PhaseScalar(GaussRat(a, neg ? Rational(-b) : b)));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return NCPoly(PhaseScalar(GaussRat(rational())));
        if (c == 'q' && pos + 1 < s.size() && s[pos + 1] == '[') {
            pos += 2;
            long j = integer().get_si();
            expect(',');
            long k = integer().get_si();
            expect(']');
            long e = 1;
            if (eat('^')) e = integer().get_si();
            return NCPoly(PhaseScalar::q(int(j), int(k), e));
        }
        if (c == 'i' && (pos + 1 == s.size() || !(std::isalnum(static_cast<unsigned char>(s[pos + 1])) || s[pos + 1] == '_'))) {
            ++pos;
            return NCPoly(PhaseScalar::i());
        }
        std::vector<Gen> gens;
        while (true) {
            std::size_t at = pos;
            std::string name = ident();
            auto g = p.find(name);
            if (!g && macros && gens.empty()) {
                bool starred = name.back() == '*';
                auto it = macros->find(starred ? name.substr(0, name.size() - 1) : name);
                if (it != macros->end()) {
                    if (pos < s.size() && s[pos] == '.') fail("named element cannot start a dotted word");
                    return starred ? p.star(it->second) : it->second;
                }
            }
            if (!g) {
                pos = at;
                fail("unknown generator '" + name + "'");
            }
            gens.push_back(*g);
            if (pos < s.size() && s[pos] == '.') {
                ++pos;
                continue;
            }
            break;
        }
        NCPoly r(1);
        for (Gen g : gens) r = p.mul_free(r, NCPoly::gen(g));
        return r;
    }

    NCPoly term() {
        NCPoly t = factor();
        while (true) {
            ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                t = p.mul_free(t, factor());
            } else {
                break;
            }
        }
        return t;
    }

    NCPoly poly() {
        NCPoly r;
        ws();
        if (s.substr(pos) == "0") return r;
        bool first = true;
        while (true) {
            ws();
            if (pos >= s.size()) break;
            bool neg = false;
            if (eat('-')) neg = true;
            else if (!eat('+') && !first) fail("expected '+' or '-'");
            NCPoly t = term();
            if (neg) r -= t;
            else r += t;
            first = false;
        }
        if (first) fail("empty polynomial");
        return r;
    }
};

}  // namespace

NCPoly Presentation::parse(const std::string& text, const std::map<std::string, NCPoly>* named) const {
    PolyParser pp{*this, text, named};
    return pp.poly();
}

Word Presentation::parse_word(const std::string& text) const {
    NCPoly x = parse(text);
    if (x.size() != 1 || !x.leading_coef().is_unit()) throw std::invalid_argument("not a single word: " + text);
    return x.leading_word();
}

std::complex<double> Presentation::eval(const NCPoly& x, const ThetaMatrix& theta,
                                        const std::vector<std::complex<double>>& point) const {
    if (point.size() != gens_.size()) throw std::invalid_argument("evaluation point has wrong size");
    if (!commutative_ && !lambda_) throw std::logic_error(name_ + " has no underlying commutative algebra");
    std::complex<double> acc = 0;
    for (const auto& [w, c] : x.terms()) {
        std::complex<double> v = c.eval(theta) * PhaseScalar(underlying_phase(w)).eval(theta);
        for (Gen g : w) v *= point[g];
        acc += v;
    }
    return acc;
}

}  // namespace tdeform
