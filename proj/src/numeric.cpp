// Random classical points on the undeformed varieties, used by the numeric oracle.
#include <Eigen/Dense>

#include "tdeform/catalog.hpp"

namespace tdeform {

namespace {

using cd = std::complex<double>;

Eigen::MatrixXd random_orthogonal(int m, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXd a(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a(i, j) = g(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ();
    // fix signs so the distribution is Haar and det = +1
    for (int j = 0; j < m; ++j)
        if (qr.matrixQR()(j, j) < 0) q.col(j) *= -1;
    if (q.determinant() < 0) q.col(0) *= -1;
    return q;
}

// U R U^-1 with U = (1/sqrt2)[[I, iI], [I, -iI]] (+ 1): a point of the complexified group for Q.
Eigen::MatrixXcd orthogonal_point(int n, int m, std::mt19937_64& rng) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(m, m);
    const double s = 1 / std::sqrt(2.0);
    for (int j = 0; j < n; ++j) {
        u(j, j) = s;
        u(j, n + j) = cd(0, s);
        u(n + j, j) = s;
        u(n + j, n + j) = cd(0, -s);
    }
    if (m > 2 * n) u(2 * n, 2 * n) = 1;
    Eigen::MatrixXcd r = random_orthogonal(m, rng).cast<cd>();
    return u * r * u.inverse();
}

Eigen::VectorXcd unit_vector(int m, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::VectorXcd v(m);
    for (int i = 0; i < m; ++i) v(i) = cd(g(rng), g(rng));
    return v / v.norm();
}

// Reads generator values off a named matrix of generators.
Point from_matrix(const Presentation* p, const PolyMatrix& names, const Eigen::MatrixXcd& value, int dim) {
    Point pt(p->num_gens(), cd(0));
    for (std::size_t i = 0; i < names.rows(); ++i)
        for (std::size_t j = 0; j < names.cols(); ++j) {
            const NCPoly& x = names(i, j);
            if (x.size() != 1 || x.leading_word().size() != 1) continue;
            // entries are c * g with |c| = 1 at theta = 0
            cd c = x.leading_coef().eval(ThetaMatrix(dim));
            pt[x.leading_word()[0]] = value(Eigen::Index(i), Eigen::Index(j)) / c;
        }
    return pt;
}

}  // namespace

PointSampler CatalogEntry::sampler(const Presentation* p) const {
    const bool isA = p == A.get() || p == A0.get();
    const bool isH = p == H.get() || p == H0.get();
    const bool isB = p && (p == B.get() || p == B0.get());
    if (!isA && !isH && !isB) return {};
    if (isB) {
        PointSampler a = sampler(A0.get());
        if (!a) return {};
        return [this, p, a](std::mt19937_64& rng) {
            Point pa = a(rng);
            ThetaMatrix zero(ctx.theta.dim());
            Point pt(p->num_gens());
            for (Gen g = 0; g < p->num_gens(); ++g)
                pt[g] = A0->eval(base.at(p->generator(g).name), zero, pa);
            return pt;
        };
    }
    if (family == "su2") {
        const int m = isA ? 4 : 2;
        const std::string stem = isA ? "psi" : "w";
        return [p, m, stem](std::mt19937_64& rng) {
            Eigen::VectorXcd v = unit_vector(m, rng);
            Point pt(p->num_gens());
            for (int a = 0; a < m; ++a) {
                std::string g = stem + std::to_string(a + 1);
                pt[p->index(g)] = v(a);
                pt[p->index(g + "*")] = std::conj(v(a));
            }
            return pt;
        };
    }
    if (family == "so-theta") {
        const int size = isA ? 2 * n + 1 : 2 * n;
        const PolyMatrix& names = matrix(isA ? "N" : "w");
        const int nn = n, dim = ctx.theta.dim();
        return [p, size, nn, dim, &names](std::mt19937_64& rng) {
            return from_matrix(p, names, orthogonal_point(nn, size, rng), dim);
        };
    }
    return {};
}

}  // namespace tdeform
