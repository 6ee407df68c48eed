#include "tdeform/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace tdeform {

std::string su2_bundle_text() {
    return R"(# SU(2) principal bundle over the four-sphere: A(S4) inside A(S7).
[entry]
name = su2
family = su2
scenario = I
frame = Psi
theta_scale = 1/2
completion_degree = 0

# q[1,2] = exp(i pi theta / 2): the ψ-generators carry the half parameter.
[theta]
0 1
-1 0

[generators A]
psi4* : 0 -1 : psi4
psi4  : 0 1  : psi4*
psi3* : 0 1  : psi3
psi3  : 0 -1 : psi3*
psi2* : 1 0  : psi2
psi2  : -1 0 : psi2*
psi1* : -1 0 : psi1
psi1  : 1 0  : psi1*

[relations A]
psi1*.psi1 + psi2*.psi2 + psi3*.psi3 + psi4*.psi4 = 1

# the lambda' table: psi_a psi_b = lambda'_ab psi_b psi_a, mu = q^2
[commutation A]
psi1 psi3 = q[1,2]^-2
psi1 psi4 = q[1,2]^2
psi2 psi3 = q[1,2]^2
psi2 psi4 = q[1,2]^-2
psi1 psi3* = q[1,2]^2
psi1 psi4* = q[1,2]^-2
psi1 psi2 = 1
psi3 psi4 = 1

[generators H]
w2* : 0 0 : w2
w2  : 0 0 : w2*
w1* : 0 0 : w1
w1  : 0 0 : w1*

[relations H]
w1*.w1 + w2*.w2 = 1

[generators B]
zeta2* : 1 -1  : zeta2
zeta2  : -1 1  : zeta2*
zeta1* : -1 -1 : zeta1
zeta1  : 1 1   : zeta1*
zeta0  : 0 0

[relations B]
zeta1*.zeta1 + zeta2*.zeta2 = zeta0 - zeta0.zeta0

# lambda = q^4
[commutation B]
zeta1 zeta2 = q[1,2]^4
zeta1 zeta2* = q[1,2]^-4

[base]
zeta0 = psi1.psi1* + psi2*.psi2
zeta1 = psi1.psi3* + psi2*.psi4
zeta2 = psi2.psi3* - psi1*.psi4
zeta1* = zeta1*
zeta2* = zeta2*

[matrices]
Psi : A = psi1 & -psi2* ; psi2 & psi1* ; psi3 & -psi4* ; psi4 & psi3*
w : H = w1 & -w2* ; w2 & w1*
p_display : A = zeta0 & 0 & zeta1 & -q[1,2]^-2 * zeta2* ; 0 & zeta0 & zeta2 & q[1,2]^2 * zeta1* ; zeta1* & zeta2* & 1 - zeta0 & 0 ; -q[1,2]^2 * zeta2 & q[1,2]^-2 * zeta1 & 0 & 1 - zeta0
q_display : A = zeta0 & 0 & q[1,2]^-2 * zeta1 & -zeta2* ; 0 & zeta0 & q[1,2]^2 * zeta2 & zeta1* ; q[1,2]^2 * zeta1* & q[1,2]^-2 * zeta2* & 1 - zeta0 & 0 ; -zeta2 & zeta1 & 0 & 1 - zeta0

[coproduct]
w = w otimes w

[counit]
w = I

[antipode]
w = dagger(w)

[coaction]
Psi = Psi otimes w

[tau]
w = dagger(Psi) obtimesB Psi

[notes]
The psi-degrees follow the double cover action, so lambda(deg a, deg b)^2 = lambda'_ab with q = exp(i pi theta/2).
Inside S7 this makes mu = q^2 and lambda = q^4; the base ζ's carry the induced degrees (1,1) and (-1,1).
)";
}

namespace {

struct SoNames {
    int n;
    // N = [[a, b, u], [b*, a*, u*], [v, v*, x]], entrywise star
    std::string N(int i, int j) const {
        auto ij = [](int a, int b) { return std::to_string(a + 1) + std::to_string(b + 1); };
        if (i < n && j < n) return "a" + ij(i, j);
        if (i < n && j < 2 * n) return "b" + ij(i, j - n);
        if (i < n) return "u" + std::to_string(i + 1);
        if (i < 2 * n && j < n) return "b" + ij(i - n, j) + "*";
        if (i < 2 * n && j < 2 * n) return "a" + ij(i - n, j - n) + "*";
        if (i < 2 * n) return "u" + std::to_string(i - n + 1) + "*";
        if (j < n) return "v" + std::to_string(j + 1);
        if (j < 2 * n) return "v" + std::to_string(j - n + 1) + "*";
        return "x";
    }
    // M = [[h, k], [k*, h*]]
    std::string M(int i, int j) const {
        std::string s = N(i, j);
        s[0] = s[0] == 'a' ? 'h' : 'k';
        return s;
    }
    std::string degree(const std::string& g) const {
        std::vector<long> d(std::size_t(2 * n), 0);
        bool star = g.back() == '*';
        std::string s = star ? g.substr(0, g.size() - 1) : g;
        int sign = star ? -1 : 1;
        char c = s[0];
        if (c == 'a' || c == 'h' || c == 'b' || c == 'k') {
            int i = s[1] - '1', j = s[2] - '1';
            d[std::size_t(i)] += sign;
            d[std::size_t(n + j)] += (c == 'a' || c == 'h') ? sign : -sign;
        } else if (c == 'u') {
            d[std::size_t(s[1] - '1')] += sign;
        } else if (c == 'v') {
            d[std::size_t(n + s[1] - '1')] += sign;
        }
        std::ostringstream o;
        for (std::size_t k = 0; k < d.size(); ++k) o << (k ? " " : "") << d[k];
        return o.str();
    }
    static std::string partner(const std::string& g) {
        if (g == "x") return "";
        return g.back() == '*' ? g.substr(0, g.size() - 1) : g + "*";
    }
};

// Orthogonality relations for a matrix X of size m with Q = [[0,I,0],[I,0,0],[0,0,1]].
template <class Name>
void orthogonality(std::ostringstream& o, int m, int n, Name name) {
    auto Qp = [&](int i) { return i < n ? i + n : (i < 2 * n ? i - n : i); };
    auto emit = [&](const std::vector<std::string>& terms, bool one) {
        for (std::size_t t = 0; t < terms.size(); ++t) o << (t ? " + " : "") << terms[t];
        o << " = " << (one ? "1" : "0") << "\n";
    };
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            std::vector<std::string> r, s;
            for (int k = 0; k < m; ++k) {
                r.push_back(name(k, i) + "." + name(Qp(k), j));
                s.push_back(name(i, k) + "." + name(j, Qp(k)));
            }
            emit(r, Qp(i) == j);
            emit(s, Qp(i) == j);
        }
}

std::string row_major(int m, int cols, const std::function<std::string(int, int)>& f) {
    std::ostringstream o;
    for (int i = 0; i < m; ++i) {
        if (i) o << " ; ";
        for (int j = 0; j < cols; ++j) o << (j ? " & " : "") << f(i, j);
    }
    return o.str();
}

}  // namespace

std::string so_theta_text(int n) {
    if (n < 1) throw std::invalid_argument("so-theta needs n >= 1, got " + std::to_string(n));
    SoNames nm{n};
    const int m = 2 * n + 1;
    std::ostringstream o;
    o << "# The orthogonal bundle SO(2n+1) -> S^2n, deformed along the torus T^n x T^n.\n"
      << "[entry]\nname = so-theta-" << n << "\nfamily = so-theta\nscenario = II\nn = " << n
      << "\nframe = Phi\ntheta_scale = 1\ncompletion_degree = " << (n == 1 ? 4 : 6) << "\n\n[theta]\n";
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) o << (k ? " " : "") << (j < k ? 1 : (j > k ? -1 : 0));
        o << "\n";
    }
    o << "\n[generators A]\n";
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::string g = nm.N(i, j);
            o << g << " : " << nm.degree(g);
            if (!SoNames::partner(g).empty()) o << " : " << SoNames::partner(g);
            o << "\n";
        }
    o << "\n[relations A]\n";
    orthogonality(o, m, n, [&](int i, int j) { return nm.N(i, j); });
    o << "\n[generators H]\n";
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) {
            std::string g = nm.M(i, j);
            o << g << " : " << nm.degree(g) << " : " << SoNames::partner(g) << "\n";
        }
    o << "\n[relations H]\n";
    orthogonality(o, 2 * n, n, [&](int i, int j) { return nm.M(i, j); });
    o << "\n[generators B]\n";
    for (int j = 0; j < n; ++j) {
        std::string u = "u" + std::to_string(j + 1);
        o << u << " : " << nm.degree(u) << " : " << u << "*\n";
        o << u << "* : " << nm.degree(u + "*") << " : " << u << "\n";
    }
    o << "x : " << nm.degree("x") << "\n\n[relations B]\n";
    for (int j = 0; j < n; ++j) o << "2 * u" << j + 1 << "*.u" << j + 1 << " + ";
    o << "x.x = 1\n\n[base]\n";
    for (int j = 0; j < n; ++j) o << "u" << j + 1 << " = u" << j + 1 << "\nu" << j + 1 << "* = u" << j + 1 << "*\n";
    o << "x = x\n\n[matrices]\n";
    o << "N : A = " << row_major(m, m, [&](int i, int j) { return nm.N(i, j); }) << "\n";
    o << "Phi : A = " << row_major(m, 2 * n, [&](int i, int j) { return nm.N(i, j); }) << "\n";
    o << "Q : A = " << row_major(m, m, [&](int i, int j) {
        int q = i < n ? i + n : (i < 2 * n ? i - n : i);
        return std::string(q == j ? "1" : "0");
    }) << "\n";
    o << "w : H = " << row_major(2 * n, 2 * n, [&](int i, int j) { return nm.M(i, j); }) << "\n";
    o << "piN : H = " << row_major(m, m, [&](int i, int j) {
        if (i < 2 * n && j < 2 * n) return nm.M(i, j);
        return std::string(i == j ? "1" : "0");
    }) << "\n";
    // c = (u, u*, x): (Phi Phi-dagger)_IJ = delta_IJ - c_I c_J*
    auto c = [&](int i) { return nm.N(i, 2 * n); };
    o << "PhiPhiDagger_display : A = " << row_major(m, m, [&](int i, int j) {
        std::string cj = c(j) == "x" ? "x" : SoNames::partner(c(j));
        return std::string(i == j ? "1 " : "") + "- " + c(i) + "." + cj;
    }) << "\n";
    o << "\n[coproduct]\nw = w otimes w\nN = N otimes N\n\n[counit]\nw = I\nN = I\n\n[antipode]\nw = dagger(w)\nN = "
         "dagger(N)\n\n[coaction]\nN = N otimes piN\n\n[tau]\nw = dagger(Phi) obtimesB Phi\n\n[notes]\n"
      << "h_jl and k_jl carry the H-side bidegrees (e_j, e_l) and (e_j, -e_l).\n"
      << "det is kept as an opaque symbol and never enters the rules.\n";
    return o.str();
}

std::unique_ptr<CatalogEntry> build_su2_bundle() { return load_entry(su2_bundle_text(), "catalog:su2"); }

std::unique_ptr<CatalogEntry> build_so_theta(int n) {
    return load_entry(so_theta_text(n), "catalog:so-theta-" + std::to_string(n));
}

std::unique_ptr<Presentation> build_s4_theta(const DeformationContext& ctx) {
    if (ctx.arity() != 2) throw std::invalid_argument("the four-sphere uses a 2x2 theta");
    std::vector<GeneratorSpec> g = {{"zeta2*", {0, -1}, "zeta2"},
                                    {"zeta2", {0, 1}, "zeta2*"},
                                    {"zeta1*", {-1, 0}, "zeta1"},
                                    {"zeta1", {1, 0}, "zeta1*"},
                                    {"zeta0", {0, 0}, ""}};
    Presentation p0("S4", g, 2);
    p0.add_relation(p0.normal_form(p0.parse("zeta1*.zeta1 + zeta2*.zeta2 - zeta0 + zeta0.zeta0")));
    return std::make_unique<Presentation>(deformed_presentation(ctx, p0, "S4theta"));
}

}  // namespace tdeform
