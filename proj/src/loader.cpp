#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "tdeform/catalog.hpp"

namespace tdeform {

ParseError::ParseError(std::string source, int line, int col, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
      line_(line),
      col_(col) {}

namespace {

struct Line {
    int number;
    std::string text;
    int indent;  // column of the first character of text
};

std::string trim(const std::string& s, int* lead = nullptr) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    if (lead) *lead = int(b);
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

class Loader {
public:
    Loader(const std::string& text, std::string source) : source_(std::move(source)) {
        std::istringstream in(text);
        std::string raw;
        int n = 0;
        std::string section;
        while (std::getline(in, raw)) {
            ++n;
            std::string s = raw;
            auto hash = s.find('#');
            if (hash != std::string::npos) s = s.substr(0, hash);
            int lead = 0;
            std::string t = trim(s, &lead);
            if (t.empty()) continue;
            if (t.front() == '[' && t.back() == ']') {
                section = trim(t.substr(1, t.size() - 2));
                if (sections_.count(section)) fail(n, lead + 1, "duplicate section [" + section + "]");
                sections_[section];
                continue;
            }
            if (section.empty()) fail(n, lead + 1, "content before the first section");
            sections_[section].push_back({n, t, lead + 1});
        }
    }

    std::unique_ptr<CatalogEntry> run(const std::string& text) {
        auto e = std::make_unique<CatalogEntry>();
        e->source_text = text;
        read_entry(*e);
        read_theta(*e);
        e->A0 = read_algebra('A', *e, true);
        e->H0 = read_algebra('H', *e, true);
        e->B0 = read_algebra('B', *e, false);
        e->A = deform(*e, *e->A0, 'A');
        e->H = deform(*e, *e->H0, 'H');
        if (e->B0) e->B = deform(*e, *e->B0, 'B');
        read_base(*e);
        read_matrices(*e);
        read_tables(*e);
        for (const auto& l : lines("notes")) e->notes.push_back(l.text);
        return e;
    }

private:
    std::string source_;
    std::map<std::string, std::vector<Line>> sections_;

    [[noreturn]] void fail(int line, int col, const std::string& what) const {
        throw ParseError(source_, line, col, what);
    }

    const std::vector<Line>& lines(const std::string& s) const {
        static const std::vector<Line> none;
        auto it = sections_.find(s);
        return it == sections_.end() ? none : it->second;
    }

    // Runs f, turning parser errors about a column into file positions.
    template <class F>
    auto guarded(const Line& l, std::size_t offset, F&& f) const -> decltype(f()) {
        try {
            return f();
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& ex) {
            std::smatch m;
            std::string what = ex.what();
            int col = l.indent + int(offset);
            if (std::regex_search(what, m, std::regex("column ([0-9]+)"))) col += std::stoi(m[1]) - 1;
            fail(l.number, col, what);
        }
    }

    std::pair<std::string, std::string> key_value(const Line& l, std::size_t* rhs_offset = nullptr) const {
        auto eq = l.text.find('=');
        if (eq == std::string::npos) fail(l.number, l.indent, "expected 'key = value'");
        int lead = 0;
        std::string v = trim(l.text.substr(eq + 1), &lead);
        if (rhs_offset) *rhs_offset = eq + 1 + std::size_t(lead);
        return {trim(l.text.substr(0, eq)), v};
    }

    void read_entry(CatalogEntry& e) {
        if (!sections_.count("entry")) throw ParseError(source_, 1, 1, "missing [entry] section");
        for (const auto& l : lines("entry")) {
            auto [k, v] = key_value(l);
            if (k == "name") e.name = v;
            else if (k == "family") e.family = v;
            else if (k == "scenario") {
                if (v == "I") e.ctx.scenario = Scenario::I;
                else if (v == "II") e.ctx.scenario = Scenario::II;
                else fail(l.number, l.indent, "scenario must be I or II");
            } else if (k == "n") e.n = guarded(l, 0, [&] { return std::stoi(v); });
            else if (k == "frame") e.frame = v;
            else if (k == "completion_degree") e.completion_degree = guarded(l, 0, [&] { return std::size_t(std::stoul(v)); });
            else if (k == "theta_scale") e.theta_scale = guarded(l, 0, [&] { return Rational(v); });
            else fail(l.number, l.indent, "unknown entry key '" + k + "'");
        }
        if (e.name.empty()) throw ParseError(source_, 1, 1, "entry has no name");
        if (e.family.empty()) e.family = "custom";
        e.theta_scale.canonicalize();
    }

    void read_theta(CatalogEntry& e) {
        std::vector<std::vector<Rational>> rows;
        for (const auto& l : lines("theta")) {
            std::istringstream in(l.text);
            std::string tok;
            std::vector<Rational> row;
            while (in >> tok) {
                Rational r;
                guarded(l, 0, [&] {
                    r = Rational(tok);
                    r.canonicalize();
                    return 0;
                });
                row.push_back(r);
            }
            rows.push_back(row);
        }
        if (rows.empty()) throw ParseError(source_, 1, 1, "missing [theta] section");
        const Line& first = lines("theta").front();
        guarded(first, 0, [&] {
            e.ctx.theta = ThetaMatrix::from_rows(rows);
            return 0;
        });
    }

    std::unique_ptr<Presentation> read_algebra(char tag, CatalogEntry& e, bool required) {
        const std::string gs = std::string("generators ") + tag;
        if (!sections_.count(gs)) {
            if (required) throw ParseError(source_, 1, 1, "missing [" + gs + "] section");
            return nullptr;
        }
        std::vector<GeneratorSpec> gens;
        for (const auto& l : lines(gs)) {
            auto parts = split(l.text, ':');
            if (parts.size() < 2 || parts.size() > 3) fail(l.number, l.indent, "expected 'name : degree [: star]'");
            GeneratorSpec g;
            g.name = trim(parts[0]);
            std::istringstream in(parts[1]);
            long d;
            while (in >> d) g.degree.push_back(d);
            if (!in.eof()) fail(l.number, l.indent, "bad degree vector");
            if (int(g.degree.size()) != e.ctx.arity())
                fail(l.number, l.indent, "degree of '" + g.name + "' has arity " + std::to_string(g.degree.size()) +
                                             ", expected " + std::to_string(e.ctx.arity()));
            if (parts.size() == 3) g.star_partner = trim(parts[2]);
            gens.push_back(g);
        }
        auto p = guarded(lines(gs).front(), 0, [&] {
            return std::make_unique<Presentation>(e.name + "." + tag, gens, e.ctx.arity());
        });
        for (const auto& l : lines(std::string("relations ") + tag)) {
            std::size_t off = 0;
            NCPoly rel;
            if (l.text.find('=') != std::string::npos) {
                auto eq = l.text.find('=');
                NCPoly lhs = guarded(l, 0, [&] { return p->parse(l.text.substr(0, eq)); });
                auto [k, v] = key_value(l, &off);
                NCPoly rhs = guarded(l, off, [&] { return p->parse(v); });
                rel = lhs - rhs;
            } else {
                rel = guarded(l, 0, [&] { return p->parse(l.text); });
            }
            guarded(l, 0, [&] {
                p->degree_of(rel);
                return 0;
            });
            p->add_relation(p->normal_form(rel));
        }
        if (e.completion_degree > 0) p->complete(e.completion_degree);
        return p;
    }

    std::unique_ptr<Presentation> deform(const CatalogEntry& e, const Presentation& p0, char tag) {
        auto p = std::make_unique<Presentation>(deformed_presentation(e.ctx, p0, e.name + "." + tag));
        for (const auto& l : lines(std::string("commutation ") + tag)) {
            std::size_t off = 0;
            auto [k, v] = key_value(l, &off);
            std::istringstream in(k);
            std::string g, h;
            in >> g >> h;
            Gen a = guarded(l, 0, [&] { return p->index(g); });
            Gen b = guarded(l, 0, [&] { return p->index(h); });
            PhaseScalar want = guarded(l, off, [&] { return p->parse(v).scalar_part(); });
            if (!(p->commutation(a, b) == want))
                fail(l.number, l.indent,
                     "commutation phase of " + g + " " + h + " from degrees is " + p->commutation(a, b).str() +
                         ", table says " + want.str());
        }
        return p;
    }

    void read_base(CatalogEntry& e) {
        for (const auto& l : lines("base")) {
            std::size_t off = 0;
            auto [k, v] = key_value(l, &off);
            NCPoly x = guarded(l, off, [&] { return e.A->normal_form(e.A->parse(v, &e.base)); });
            e.base[k] = x;
            e.base_order.push_back(k);
        }
    }

    void read_matrices(CatalogEntry& e) {
        for (const auto& l : lines("matrices")) {
            std::size_t off = 0;
            auto [k, v] = key_value(l, &off);
            auto colon = k.find(':');
            if (colon == std::string::npos) fail(l.number, l.indent, "expected 'Name : algebra = rows'");
            std::string name = trim(k.substr(0, colon));
            std::string alg = trim(k.substr(colon + 1));
            if (alg.size() != 1 || std::string("AHB").find(alg[0]) == std::string::npos)
                fail(l.number, l.indent, "matrix algebra must be A, H or B");
            const Presentation* p = e.algebra(alg[0]);
            if (!p) fail(l.number, l.indent, "no algebra " + alg);
            auto rows = split(v, ';');
            PolyMatrix m(rows.size(), split(rows[0], '&').size());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                auto cols = split(rows[i], '&');
                if (cols.size() != m.cols()) fail(l.number, l.indent, "ragged matrix row " + std::to_string(i + 1));
                for (std::size_t j = 0; j < cols.size(); ++j) {
                    const std::map<std::string, NCPoly>* named = alg[0] == 'A' ? &e.base : nullptr;
                    m(i, j) = guarded(l, off, [&] { return p->normal_form(p->parse(trim(cols[j]), named)); });
                }
            }
            e.matrices[name] = {alg[0], m};
        }
    }

    // Term of a matrix equation: NAME, dagger(NAME) or I.
    NamedMatrix term(const CatalogEntry& e, const Line& l, std::string t, char default_alg, std::size_t size) const {
        t = trim(t);
        if (t == "I") return {default_alg, identity_matrix(size)};
        bool dag = false;
        if (t.rfind("dagger(", 0) == 0 && t.back() == ')') {
            dag = true;
            t = trim(t.substr(7, t.size() - 8));
        }
        auto it = e.matrices.find(t);
        if (it == e.matrices.end()) fail(l.number, l.indent, "unknown matrix '" + t + "'");
        if (!dag) return it->second;
        return {it->second.algebra, dagger(*e.algebra(it->second.algebra), it->second.value)};
    }

    template <class V, class Store>
    void assign(const CatalogEntry& e, const Line& l, const NamedMatrix& lhs, const Matrix<V>& rhs, Store&& store,
                const std::function<bool(const V&)>& is_zero, const std::function<V(const V&, const PhaseScalar&)>& scale) {
        if (rhs.rows() != lhs.value.rows() || rhs.cols() != lhs.value.cols())
            fail(l.number, l.indent, "matrix equation has mismatched shapes");
        const Presentation* p = e.algebra(lhs.algebra);
        for (std::size_t i = 0; i < rhs.rows(); ++i)
            for (std::size_t j = 0; j < rhs.cols(); ++j) {
                const NCPoly& x = lhs.value(i, j);
                if (x.is_zero()) {
                    if (!is_zero(rhs(i, j))) fail(l.number, l.indent, "zero entry maps to a nonzero value");
                    continue;
                }
                if (x.size() != 1 || x.leading_word().size() != 1 || !x.leading_coef().is_unit()) {
                    if (x.is_scalar()) continue;  // constant entries carry no generator
                    fail(l.number, l.indent, "left-hand matrix entries must be unit multiples of generators");
                }
                Gen g = x.leading_word()[0];
                store(g, scale(rhs(i, j), x.leading_coef().inverse()), p->generator(g).name);
            }
    }

    void read_tables(CatalogEntry& e) {
        StructureTable st[2];  // H, A
        auto lhs_of = [&](const Line& l, std::string* rhs_text) {
            auto [k, v] = key_value(l);
            *rhs_text = v;
            auto it = e.matrices.find(k);
            if (it == e.matrices.end()) fail(l.number, l.indent, "unknown matrix '" + k + "'");
            return it->second;
        };
        auto tensor_rhs = [&](const Line& l, const std::string& v, const NamedMatrix& lhs, char a1, char a2,
                              Boundary want) {
            std::string op = want == Boundary::Plain ? " otimes " : " obtimesB ";
            auto at = v.find(op);
            if (at == std::string::npos) fail(l.number, l.indent, "expected '" + trim(op) + "'");
            NamedMatrix x = term(e, l, v.substr(0, at), a1, lhs.value.rows());
            NamedMatrix y = term(e, l, v.substr(at + op.size()), a2, lhs.value.cols());
            if (x.algebra != a1 || y.algebra != a2)
                fail(l.number, l.indent, std::string("tensor legs must live in ") + a1 + " and " + a2);
            return guarded(l, 0, [&] { return otimes_dot(e.algebra(a1), x.value, e.algebra(a2), y.value, want); });
        };
        auto tscale = [](const TensorExpr& t, const PhaseScalar& c) { return t * c; };
        auto tzero = [](const TensorExpr& t) { return t.is_zero(); };
        auto store_into = [&](std::map<Gen, TensorExpr>& m, const Line& l) {
            return [&m, &l, this](Gen g, const TensorExpr& v, const std::string& name) {
                auto [it, fresh] = m.emplace(g, v);
                if (!fresh && !(it->second == v)) fail(l.number, l.indent, "inconsistent values for " + name);
            };
        };
        auto hopf_side = [&](const Line& l, const NamedMatrix& lhs) {
            if (lhs.algebra != 'H' && lhs.algebra != 'A') fail(l.number, l.indent, "Hopf tables live on H or A");
            return lhs.algebra == 'H' ? 0 : 1;
        };
        for (const auto& l : lines("coproduct")) {
            std::string v;
            NamedMatrix lhs = lhs_of(l, &v);
            int s = hopf_side(l, lhs);
            TensorMatrix r = tensor_rhs(l, v, lhs, lhs.algebra, lhs.algebra, Boundary::Plain);
            assign<TensorExpr>(e, l, lhs, r, store_into(st[s].coproduct_of, l), tzero, tscale);
        }
        for (const auto& l : lines("counit")) {
            std::string v;
            NamedMatrix lhs = lhs_of(l, &v);
            int s = hopf_side(l, lhs);
            NamedMatrix r = term(e, l, v, lhs.algebra, lhs.value.rows());
            assign<NCPoly>(e, l, lhs, r.value,
                           [&](Gen g, const NCPoly& x, const std::string& name) {
                               if (!x.is_scalar()) fail(l.number, l.indent, "counit of " + name + " is not a scalar");
                               st[s].counit_of[g] = x.scalar_part();
                           },
                           [](const NCPoly& x) { return x.is_zero(); },
                           [](const NCPoly& x, const PhaseScalar& c) { return x * c; });
        }
        for (const auto& l : lines("antipode")) {
            std::string v;
            NamedMatrix lhs = lhs_of(l, &v);
            int s = hopf_side(l, lhs);
            NamedMatrix r = term(e, l, v, lhs.algebra, lhs.value.rows());
            if (r.algebra != lhs.algebra) fail(l.number, l.indent, "antipode values live in the same algebra");
            assign<NCPoly>(e, l, lhs, r.value,
                           [&](Gen g, const NCPoly& x, const std::string&) { st[s].antipode_of[g] = x; },
                           [](const NCPoly& x) { return x.is_zero(); },
                           [](const NCPoly& x, const PhaseScalar& c) { return x * c; });
        }
        const Line first_table = lines("coproduct").empty() ? Line{1, "", 1} : lines("coproduct").front();
        e.hopf = guarded(first_table, 0, [&] { return std::make_unique<HopfAlgebra>(e.H.get(), st[0]); });
        if (!st[1].coproduct_of.empty())
            e.hopf_total = guarded(first_table, 0, [&] { return std::make_unique<HopfAlgebra>(e.A.get(), st[1]); });

        std::map<Gen, TensorExpr> coaction;
        for (const auto& l : lines("coaction")) {
            std::string v;
            NamedMatrix lhs = lhs_of(l, &v);
            if (lhs.algebra != 'A') fail(l.number, l.indent, "coaction is defined on A");
            TensorMatrix r = tensor_rhs(l, v, lhs, 'A', 'H', Boundary::Plain);
            assign<TensorExpr>(e, l, lhs, r, store_into(coaction, l), tzero, tscale);
        }
        // Generators not covered by a matrix equation (none in the catalog) would be rejected here.
        e.comodule = guarded(lines("coaction").empty() ? Line{1, "", 1} : lines("coaction").front(), 0, [&] {
            return std::make_unique<ComoduleAlgebra>(e.A.get(), e.hopf.get(), coaction, e.base_generators());
        });

        std::map<Gen, TensorExpr> tau;
        for (const auto& l : lines("tau")) {
            std::string v;
            NamedMatrix lhs = lhs_of(l, &v);
            if (lhs.algebra != 'H') fail(l.number, l.indent, "translation map is defined on H");
            TensorMatrix r = tensor_rhs(l, v, lhs, 'A', 'A', Boundary::Balanced);
            assign<TensorExpr>(e, l, lhs, r, store_into(tau, l), tzero, tscale);
        }
        e.translation = guarded(lines("tau").empty() ? Line{1, "", 1} : lines("tau").front(), 0,
                                [&] { return std::make_unique<TranslationTable>(e.comodule.get(), tau); });
        e.bialgebroid = std::make_unique<Bialgebroid>(e.comodule.get(), e.translation.get());
    }
};

}  // namespace

ThetaMatrix CatalogEntry::numeric_theta(const Rational& t) const {
    const int n = ctx.theta.dim();
    ThetaMatrix m(n);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) m.set(j, k, t * theta_scale);
    return m;
}

const Presentation* CatalogEntry::algebra(char tag) const {
    switch (tag) {
        case 'A': return A.get();
        case 'H': return H.get();
        case 'B': return B.get();
    }
    return nullptr;
}

const PolyMatrix& CatalogEntry::matrix(const std::string& n) const {
    auto it = matrices.find(n);
    if (it == matrices.end()) throw std::out_of_range("entry " + name + " has no matrix " + n);
    return it->second.value;
}

std::vector<NCPoly> CatalogEntry::base_generators() const {
    std::vector<NCPoly> r;
    for (const auto& k : base_order) r.push_back(base.at(k));
    return r;
}

std::unique_ptr<CatalogEntry> load_entry(const std::string& text, const std::string& source) {
    Loader l(text, source);
    return l.run(text);
}

std::unique_ptr<CatalogEntry> load_entry_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, 0, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_entry(ss.str(), path);
}

std::string export_entry(const CatalogEntry& e) { return e.source_text; }

}  // namespace tdeform
