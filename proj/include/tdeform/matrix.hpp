#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "tdeform/tensor.hpp"

namespace tdeform {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, T fill = T()) : r_(r), c_(c), v_(r * c, fill) {}
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return v_.at(i * c_ + j); }
    const T& operator()(std::size_t i, std::size_t j) const { return v_.at(i * c_ + j); }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> m(r_, c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }
    Matrix transpose() const {
        Matrix m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> v_;
};

using PolyMatrix = Matrix<NCPoly>;
using TensorMatrix = Matrix<TensorExpr>;

/// Generator matrix from a grid of names.
PolyMatrix gen_matrix(const Presentation& p, const std::vector<std::vector<std::string>>& names);
PolyMatrix identity_matrix(std::size_t n);
/// Entrywise star of the transpose.
PolyMatrix dagger(const Presentation& p, const PolyMatrix& m);
/// (X Y)_{ij} = sum_k X_ik Y_kj; opposite uses Y_kj X_ik.
PolyMatrix mat_mul(const Presentation& p, const PolyMatrix& x, const PolyMatrix& y, bool opposite = false);
PolyMatrix mat_sub(const PolyMatrix& x, const PolyMatrix& y);
/// (X (x). Y)_{ij} = sum_k X_ik (x) Y_kj.
TensorMatrix otimes_dot(const Presentation* px, const PolyMatrix& x, const Presentation* py, const PolyMatrix& y,
                        Boundary b = Boundary::Plain);
TensorMatrix otimes_dot(const TensorMatrix& x, const TensorMatrix& y, Boundary b);
/// Row-by-column product of tensor matrices with slotwise multiplication.
TensorMatrix tensor_mat_mul(const TensorMatrix& x, const TensorMatrix& y, const std::vector<bool>& opposite = {});
/// Entrywise x (x) 1 or 1 (x) x.
TensorMatrix left_leg(const Presentation* p, const PolyMatrix& x, const Presentation* other, bool left = true);

}  // namespace tdeform
