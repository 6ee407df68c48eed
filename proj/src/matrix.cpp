#include "tdeform/matrix.hpp"

namespace tdeform {

PolyMatrix gen_matrix(const Presentation& p, const std::vector<std::vector<std::string>>& names) {
    PolyMatrix m(names.size(), names.empty() ? 0 : names[0].size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = p.parse(names[i][j]);
    return m;
}

PolyMatrix identity_matrix(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = NCPoly(1);
    return m;
}

PolyMatrix dagger(const Presentation& p, const PolyMatrix& m) {
    PolyMatrix d(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d(j, i) = p.star(m(i, j));
    return d;
}

PolyMatrix mat_mul(const Presentation& p, const PolyMatrix& x, const PolyMatrix& y, bool opposite) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    PolyMatrix r(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) {
            NCPoly acc;
            for (std::size_t k = 0; k < x.cols(); ++k)
                acc += opposite ? p.mul_free(y(k, j), x(i, k)) : p.mul_free(x(i, k), y(k, j));
            r(i, j) = p.normal_form(acc);
        }
    return r;
}

PolyMatrix mat_sub(const PolyMatrix& x, const PolyMatrix& y) {
    PolyMatrix r(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) - y(i, j);
    return r;
}

TensorMatrix otimes_dot(const Presentation* px, const PolyMatrix& x, const Presentation* py, const PolyMatrix& y,
                        Boundary b) {
    if (x.cols() != y.rows()) throw std::invalid_argument("otimes-dot: shape mismatch");
    TensorMatrix r(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) {
            TensorExpr acc({px, py}, {b});
            for (std::size_t k = 0; k < x.cols(); ++k) acc += tensor2(px, x(i, k), py, y(k, j), b);
            r(i, j) = acc;
        }
    return r;
}

TensorMatrix otimes_dot(const TensorMatrix& x, const TensorMatrix& y, Boundary b) {
    if (x.cols() != y.rows()) throw std::invalid_argument("otimes-dot: shape mismatch");
    TensorMatrix r(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) {
            TensorExpr acc = x(i, 0).concat(y(0, j), b);
            for (std::size_t k = 1; k < x.cols(); ++k) acc += x(i, k).concat(y(k, j), b);
            r(i, j) = acc;
        }
    return r;
}

TensorMatrix tensor_mat_mul(const TensorMatrix& x, const TensorMatrix& y, const std::vector<bool>& opposite) {
    if (x.cols() != y.rows()) throw std::invalid_argument("tensor matrix product: shape mismatch");
    TensorMatrix r(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) {
            TensorExpr acc = x(i, 0).mul(y(0, j), opposite);
            for (std::size_t k = 1; k < x.cols(); ++k) acc += x(i, k).mul(y(k, j), opposite);
            r(i, j) = acc;
        }
    return r;
}

TensorMatrix left_leg(const Presentation* p, const PolyMatrix& x, const Presentation* other, bool left) {
    return x.map([&](const NCPoly& e) {
        return left ? tensor2(p, e, other, NCPoly(1)) : tensor2(other, NCPoly(1), p, e);
    });
}

}  // namespace tdeform
