#include "tdeform/phase.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace tdeform {

GaussRat GaussRat::inverse() const {
    Rational n = re * re + im * im;
    if (sgn(n) == 0) throw std::domain_error("inverse of zero");
    return {re / n, -im / n};
}

std::string GaussRat::str() const {
    // (a+bi)/c with c the common denominator; the caller adds the sign
    mpz_class c = lcm(re.get_den(), im.get_den());
    mpz_class a = re.get_num() * (c / re.get_den());
    mpz_class b = im.get_num() * (c / im.get_den());
    std::string s = "(" + a.get_str() + (sgn(b) < 0 ? "-" : "+") + mpz_class(abs(b)).get_str() + "i)";
    if (c != 1) s += "/" + c.get_str();
    return s;
}

PhaseMonomial PhaseMonomial::q(int j, int k, long e) {
    PhaseMonomial m;
    if (j == k || e == 0) return m;
    if (j > k) {
        std::swap(j, k);
        e = -e;
    }
    m.f_.push_back({j, k, e});
    return m;
}

long PhaseMonomial::exponent(int j, int k) const {
    long sign = 1;
    if (j > k) {
        std::swap(j, k);
        sign = -1;
    }
    for (const auto& f : f_)
        if (f.j == j && f.k == k) return sign * f.e;
    return 0;
}

void PhaseMonomial::mul_factor(int j, int k, long e) {
    auto it = std::lower_bound(f_.begin(), f_.end(), std::pair{j, k},
                               [](const Factor& f, const std::pair<int, int>& p) {
                                   return std::pair{f.j, f.k} < p;
                               });
    if (it != f_.end() && it->j == j && it->k == k) {
        it->e += e;
        if (it->e == 0) f_.erase(it);
    } else if (e != 0) {
        f_.insert(it, {j, k, e});
    }
}

PhaseMonomial PhaseMonomial::inverse() const {
    PhaseMonomial r = *this;
    for (auto& f : r.f_) f.e = -f.e;
    return r;
}

PhaseMonomial PhaseMonomial::pow(long n) const {
    if (n == 0) return {};
    PhaseMonomial r = *this;
    for (auto& f : r.f_) f.e *= n;
    return r;
}

PhaseMonomial operator*(const PhaseMonomial& a, const PhaseMonomial& b) {
    PhaseMonomial r;
    r.f_.reserve(a.f_.size() + b.f_.size());
    auto i = a.f_.begin(), j = b.f_.begin();
    while (i != a.f_.end() || j != b.f_.end()) {
        if (j == b.f_.end() || (i != a.f_.end() && std::pair{i->j, i->k} < std::pair{j->j, j->k})) {
            r.f_.push_back(*i++);
        } else if (i == a.f_.end() || std::pair{j->j, j->k} < std::pair{i->j, i->k}) {
            r.f_.push_back(*j++);
        } else {
            long e = i->e + j->e;
            if (e != 0) r.f_.push_back({i->j, i->k, e});
            ++i, ++j;
        }
    }
    return r;
}

bool operator<(const PhaseMonomial& a, const PhaseMonomial& b) {
    return std::lexicographical_compare(a.f_.begin(), a.f_.end(), b.f_.begin(), b.f_.end(),
                                        [](const auto& x, const auto& y) {
                                            return std::tie(x.j, x.k, x.e) < std::tie(y.j, y.k, y.e);
                                        });
}

std::string PhaseMonomial::str() const {
    std::string s;
    for (const auto& f : f_) {
        if (!s.empty()) s += " * ";
        s += "q[" + std::to_string(f.j) + "," + std::to_string(f.k) + "]^" + std::to_string(f.e);
    }
    return s;
}

std::size_t PhaseMonomial::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& f : f_) h = (h ^ std::size_t(f.j * 131 + f.k * 7 + f.e * 1000003)) * 0x100000001b3ull;
    return h;
}

ThetaMatrix::ThetaMatrix(int n) : n_(n), m_(std::size_t(n * n)) {}

ThetaMatrix ThetaMatrix::standard(int n) {
    ThetaMatrix t(n);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) t.set(j, k, 1);
    return t;
}

ThetaMatrix ThetaMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    ThetaMatrix t(int(rows.size()));
    for (int j = 0; j < t.n_; ++j) {
        if (int(rows[std::size_t(j)].size()) != t.n_) throw std::invalid_argument("theta matrix is not square");
        for (int k = 0; k < t.n_; ++k) {
            if (rows[std::size_t(j)][std::size_t(k)] != -rows[std::size_t(k)][std::size_t(j)])
                throw std::invalid_argument("theta matrix is not skew-symmetric");
            t.m_[std::size_t(j * t.n_ + k)] = rows[std::size_t(j)][std::size_t(k)];
        }
    }
    return t;
}

void ThetaMatrix::set(int j, int k, const Rational& v) {
    if (j == k) {
        if (sgn(v) != 0) throw std::invalid_argument("theta diagonal must vanish");
        return;
    }
    m_[std::size_t(j * n_ + k)] = v;
    m_[std::size_t(k * n_ + j)] = -v;
}

ThetaMatrix ThetaMatrix::scaled(const Rational& s) const {
    ThetaMatrix t = *this;
    for (auto& x : t.m_) x *= s;
    return t;
}

bool ThetaMatrix::is_zero() const {
    return std::all_of(m_.begin(), m_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

PhaseScalar::PhaseScalar(long c) {
    if (c != 0) t_.push_back({{}, GaussRat(c)});
}

PhaseScalar::PhaseScalar(GaussRat c) {
    if (!c.is_zero()) t_.push_back({{}, std::move(c)});
}

PhaseScalar::PhaseScalar(PhaseMonomial m, GaussRat c) {
    if (!c.is_zero()) t_.push_back({std::move(m), std::move(c)});
}

bool PhaseScalar::is_one() const { return t_.size() == 1 && t_[0].mono.is_one() && t_[0].coef.is_one(); }

void PhaseScalar::add_term(const PhaseMonomial& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(t_.begin(), t_.end(), m, [](const Term& t, const PhaseMonomial& x) { return t.mono < x; });
    if (it != t_.end() && it->mono == m) {
        it->coef = it->coef + c;
        if (it->coef.is_zero()) t_.erase(it);
    } else {
        t_.insert(it, {m, c});
    }
}

PhaseScalar& PhaseScalar::operator+=(const PhaseScalar& o) {
    for (const auto& t : o.t_) add_term(t.mono, t.coef);
    return *this;
}

PhaseScalar& PhaseScalar::operator-=(const PhaseScalar& o) {
    for (const auto& t : o.t_) add_term(t.mono, -t.coef);
    return *this;
}

PhaseScalar operator-(const PhaseScalar& a) {
    PhaseScalar r = a;
    for (auto& t : r.t_) t.coef = -t.coef;
    return r;
}

PhaseScalar operator*(const PhaseScalar& a, const PhaseScalar& b) {
    PhaseScalar r;
    if (a.t_.size() == 1 && b.t_.size() == 1) {
        r.t_.push_back({a.t_[0].mono * b.t_[0].mono, a.t_[0].coef * b.t_[0].coef});
        return r;
    }
    for (const auto& x : a.t_)
        for (const auto& y : b.t_) r.add_term(x.mono * y.mono, x.coef * y.coef);
    return r;
}

PhaseScalar operator*(const PhaseScalar& a, const PhaseMonomial& m) {
    PhaseScalar r = a;
    if (m.is_one()) return r;
    for (auto& t : r.t_) t.mono = t.mono * m;
    std::sort(r.t_.begin(), r.t_.end(), [](const auto& x, const auto& y) { return x.mono < y.mono; });
    return r;
}

bool operator==(const PhaseScalar& a, const PhaseScalar& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
        if (!(a.t_[i].mono == b.t_[i].mono) || !(a.t_[i].coef == b.t_[i].coef)) return false;
    return true;
}

bool operator<(const PhaseScalar& a, const PhaseScalar& b) {
    return std::lexicographical_compare(a.t_.begin(), a.t_.end(), b.t_.begin(), b.t_.end(),
                                        [](const auto& x, const auto& y) {
                                            if (x.mono < y.mono) return true;
                                            if (y.mono < x.mono) return false;
                                            return x.coef < y.coef;
                                        });
}

PhaseScalar PhaseScalar::conj() const {
    PhaseScalar r;
    for (const auto& t : t_) r.add_term(t.mono.inverse(), t.coef.conj());
    return r;
}

PhaseScalar PhaseScalar::inverse() const {
    if (!is_unit()) throw std::domain_error("phase scalar " + str() + " is not invertible");
    return PhaseScalar(t_[0].mono.inverse(), t_[0].coef.inverse());
}

PhaseScalar PhaseScalar::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    PhaseScalar r(1), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

std::complex<double> PhaseScalar::eval(const ThetaMatrix& theta) const {
    std::complex<double> acc = 0;
    for (const auto& t : t_) {
        double arg = 0;
        for (const auto& f : t.mono.factors()) {
            if (f.j < 1 || f.k > theta.dim())
                throw std::out_of_range("phase index q[" + std::to_string(f.j) + "," + std::to_string(f.k) +
                                        "] outside theta matrix of size " + std::to_string(theta.dim()));
            arg += double(f.e) * theta(f.j - 1, f.k - 1).get_d();
        }
        acc += t.coef.to_complex() * std::polar(1.0, std::numbers::pi * arg);
    }
    return acc;
}

std::string PhaseScalar::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& t : t_) {
        bool neg = sgn(t.coef.re) < 0 || (sgn(t.coef.re) == 0 && sgn(t.coef.im) < 0);
        if (!s.empty()) s += " ";
        s += neg ? "-" : "+";
        s += (neg ? -t.coef : t.coef).str();
        if (!t.mono.is_one()) s += " * " + t.mono.str();
    }
    return s;
}

namespace {

struct Scanner {
    const std::string& s;
    std::size_t pos = 0;
    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("phase scalar parse error at column " + std::to_string(pos + 1) + ": " + what);
    }
    mpz_class integer() {
        ws();
        std::size_t b = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (b == pos || (pos == b + 1 && !std::isdigit(static_cast<unsigned char>(s[b])))) fail("expected integer");
        std::string digits = s.substr(b, pos - b);
        if (digits[0] == '+') digits.erase(0, 1);
        return mpz_class(digits);
    }
};

}  // namespace

PhaseScalar PhaseScalar::parse(const std::string& text) {
    Scanner sc{text};
    PhaseScalar r;
    sc.ws();
    if (text.substr(sc.pos) == "0") return r;
    while (true) {
        sc.ws();
        if (sc.pos >= text.size()) break;
        bool neg = false;
        if (sc.eat('-')) neg = true;
        else sc.expect('+');
        sc.expect('(');
        mpz_class a = sc.integer();
        sc.ws();
        bool bneg = false;
        if (sc.eat('-')) bneg = true;
        else sc.expect('+');
        mpz_class b = sc.integer();
        sc.expect('i');
        sc.expect(')');
        mpz_class c = 1;
        if (sc.eat('/')) c = sc.integer();
        if (c == 0) sc.fail("zero denominator");
        GaussRat coef(Rational(a, c), Rational(bneg ? mpz_class(-b) : b, c));
        coef.re.canonicalize();
        coef.im.canonicalize();
        if (neg) coef = -coef;
        PhaseMonomial m;
        while (sc.eat('*')) {
            sc.expect('q');
            sc.expect('[');
            long j = sc.integer().get_si();
            sc.expect(',');
            long k = sc.integer().get_si();
            sc.expect(']');
            sc.expect('^');
            long e = sc.integer().get_si();
            if (j >= k) sc.fail("phase pair must satisfy j<k");
            m = m * PhaseMonomial::q(int(j), int(k), e);
        }
        r.add_term(m, coef);
    }
    return r;
}

std::size_t PhaseScalar::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& t : t_) {
        h ^= t.mono.hash();
        h *= 1099511628211ull;
        h ^= std::hash<std::string>{}(t.coef.re.get_str() + "/" + t.coef.im.get_str());
        h *= 1099511628211ull;
    }
    return h;
}

PhaseScalar phase_mul(const PhaseScalar& a, const PhaseScalar& b) { return a * b; }

std::complex<double> phase_eval(const PhaseScalar& a, const ThetaMatrix& theta) { return a.eval(theta); }

PhaseMonomial cocycle_lambda(const ThetaMatrix& theta, const DegreeVector& r, const DegreeVector& l) {
    const int n = theta.dim();
    if (int(r.size()) != n || int(l.size()) != n)
        throw std::invalid_argument("cocycle_lambda: degree dimension " + std::to_string(r.size()) + "/" +
                                    std::to_string(l.size()) + " does not match theta of size " + std::to_string(n));
    PhaseMonomial m;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            const Rational& t = theta(j, k);
            if (sgn(t) == 0) continue;
            Rational e = t * (r[std::size_t(j)] * l[std::size_t(k)] - r[std::size_t(k)] * l[std::size_t(j)]);
            if (e.get_den() != 1) throw std::domain_error("cocycle_lambda: non-integral phase exponent");
            m.mul_factor(j + 1, k + 1, e.get_num().get_si());
        }
    return m;
}

DegreeVector operator+(const DegreeVector& a, const DegreeVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("degree dimension mismatch");
    DegreeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

DegreeVector operator-(const DegreeVector& a) {
    DegreeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

std::string degree_str(const DegreeVector& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

}  // namespace tdeform
