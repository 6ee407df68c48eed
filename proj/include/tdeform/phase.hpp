#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tdeform {

using Rational = mpq_class;

/// Element a + b i of Q(i).
struct GaussRat {
    Rational re, im;

    GaussRat() = default;
    GaussRat(long r) : re(r), im(0) {}
    GaussRat(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }
    GaussRat conj() const { return {re, -im}; }
    GaussRat inverse() const;
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator<(const GaussRat& a, const GaussRat& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    std::string str() const;
};

using DegreeVector = std::vector<long>;
class ThetaMatrix;
class PhaseMonomial;
PhaseMonomial cocycle_lambda(const ThetaMatrix& theta, const DegreeVector& r, const DegreeVector& l);

/// Laurent monomial in the formal units q_{jk}, j<k (1-based torus directions).
class PhaseMonomial {
public:
    struct Factor {
        int j, k;
        long e;
        bool operator==(const Factor&) const = default;
    };

    PhaseMonomial() = default;
    /// q_{jk}^e; q_{kj} is stored as q_{jk}^{-e} and q_{jj} is dropped.
    static PhaseMonomial q(int j, int k, long e = 1);

    bool is_one() const { return f_.empty(); }
    long exponent(int j, int k) const;
    const std::vector<Factor>& factors() const { return f_; }

    PhaseMonomial inverse() const;
    PhaseMonomial pow(long n) const;
    friend PhaseMonomial operator*(const PhaseMonomial& a, const PhaseMonomial& b);
    friend bool operator==(const PhaseMonomial& a, const PhaseMonomial& b) { return a.f_ == b.f_; }
    friend bool operator<(const PhaseMonomial& a, const PhaseMonomial& b);

    std::string str() const;
    std::size_t hash() const;

private:
    std::vector<Factor> f_;  // sorted by (j,k), nonzero exponents
    void mul_factor(int j, int k, long e);
    friend class PhaseScalar;
    friend PhaseMonomial cocycle_lambda(const ThetaMatrix&, const DegreeVector&, const DegreeVector&);
};

/// Skew-symmetric rational matrix; numeric values of theta or formal multiplicities.
class ThetaMatrix {
public:
    ThetaMatrix() = default;
    explicit ThetaMatrix(int n);
    static ThetaMatrix standard(int n);  ///< theta_{jk} = 1 for j<k
    static ThetaMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int dim() const { return n_; }
    const Rational& operator()(int j, int k) const { return m_[std::size_t(j * n_ + k)]; }
    void set(int j, int k, const Rational& v);  ///< sets (j,k) and (k,j) = -v
    ThetaMatrix scaled(const Rational& s) const;
    bool is_zero() const;

private:
    int n_ = 0;
    std::vector<Rational> m_;
};

/// Finite sum of GaussRat * PhaseMonomial.
class PhaseScalar {
public:
    struct Term {
        PhaseMonomial mono;
        GaussRat coef;
    };

    PhaseScalar() = default;
    PhaseScalar(long c);
    PhaseScalar(GaussRat c);
    PhaseScalar(PhaseMonomial m, GaussRat c = 1);
    static PhaseScalar q(int j, int k, long e = 1) { return PhaseScalar(PhaseMonomial::q(j, k, e)); }
    static PhaseScalar i() { return PhaseScalar(GaussRat(0, 1)); }

    bool is_zero() const { return t_.empty(); }
    bool is_one() const;
    /// Single term with nonzero coefficient: invertible in the ring.
    bool is_unit() const { return t_.size() == 1; }
    const std::vector<Term>& terms() const { return t_; }

    PhaseScalar conj() const;
    PhaseScalar inverse() const;  ///< throws unless is_unit()
    PhaseScalar pow(long n) const;

    PhaseScalar& operator+=(const PhaseScalar& o);
    PhaseScalar& operator-=(const PhaseScalar& o);
    PhaseScalar& operator*=(const PhaseScalar& o) { return *this = *this * o; }
    friend PhaseScalar operator+(PhaseScalar a, const PhaseScalar& b) { return a += b; }
    friend PhaseScalar operator-(PhaseScalar a, const PhaseScalar& b) { return a -= b; }
    friend PhaseScalar operator-(const PhaseScalar& a);
    friend PhaseScalar operator*(const PhaseScalar& a, const PhaseScalar& b);
    friend PhaseScalar operator*(const PhaseScalar& a, const PhaseMonomial& m);
    friend bool operator==(const PhaseScalar& a, const PhaseScalar& b);
    friend bool operator<(const PhaseScalar& a, const PhaseScalar& b);

    /// Substitute q_{jk} -> exp(i pi theta_{jk}).
    std::complex<double> eval(const ThetaMatrix& theta) const;

    std::string str() const;
    static PhaseScalar parse(const std::string& s);
    std::size_t hash() const;

private:
    std::vector<Term> t_;  // sorted by monomial, zero-free
    void add_term(const PhaseMonomial& m, const GaussRat& c);
};

PhaseScalar phase_mul(const PhaseScalar& a, const PhaseScalar& b);
std::complex<double> phase_eval(const PhaseScalar& a, const ThetaMatrix& theta);

/// lambda_theta(r,l) = prod_{j<k} q_{jk}^{theta_{jk}(r_j l_k - r_k l_j)}; theta holds
/// formal multiplicities and the exponents must come out integral.
PhaseMonomial cocycle_lambda(const ThetaMatrix& theta, const DegreeVector& r, const DegreeVector& l);

DegreeVector operator+(const DegreeVector& a, const DegreeVector& b);
DegreeVector operator-(const DegreeVector& a);
std::string degree_str(const DegreeVector& d);

}  // namespace tdeform
