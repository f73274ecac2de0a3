#pragma once

#include <Eigen/Core>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "kronrep/fp.hpp"
#include "kronrep/rational.hpp"

namespace kronrep {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
using MatQ = Mat<Rational>;

template <class S>
struct Echelon {
    Mat<S> reduced;
    std::vector<int> pivots;
    int rank = 0;
};

template <class S>
Mat<S> zeros(Eigen::Index rows, Eigen::Index cols) {
    return Mat<S>::Constant(rows, cols, S(0));
}

template <class S>
Mat<S> identity(Eigen::Index n) {
    Mat<S> m = zeros<S>(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
}

template <class S>
bool is_zero_matrix(const Mat<S>& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!is_zero(m(i, j))) return false;
    return true;
}

// Gauss-Jordan over an exact field; first nonzero entry is the pivot.
template <class S>
Echelon<S> rref_direct(Mat<S> m) {
    Echelon<S> out;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (!is_zero(m(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) m.row(piv).swap(m.row(r));
        const S inv = S(1) / m(r, c);
        for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const S f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    out.rank = static_cast<int>(r);
    out.reduced = std::move(m);
    return out;
}

// Free variable = 1, other free variables 0, ascending column order.
template <class S>
Mat<S> kernel_from_echelon(const Echelon<S>& e, Eigen::Index cols) {
    std::vector<char> is_pivot(static_cast<size_t>(cols), 0);
    for (int p : e.pivots) is_pivot[static_cast<size_t>(p)] = 1;
    Mat<S> k = zeros<S>(cols, cols - e.rank);
    Eigen::Index col = 0;
    for (Eigen::Index f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        k(f, col) = S(1);
        for (int i = 0; i < e.rank; ++i) k(e.pivots[static_cast<size_t>(i)], col) = -e.reduced(i, f);
        ++col;
    }
    return k;
}

template <class S>
Mat<S> kernel_direct(const Mat<S>& m) {
    return kernel_from_echelon(rref_direct<S>(m), m.cols());
}

namespace detail {
// Exact kernel over Q by p-adic lifting; returns nullopt when the matrix is
// unsuitable for the lifting route (entries too large) so callers fall back.
std::optional<MatQ> kernel_lifted(const MatQ& m);
bool prefer_lifting(const MatQ& m);
}  // namespace detail

template <class S>
Mat<S> kernel_basis(const Mat<S>& m) {
    if constexpr (std::is_same_v<S, Rational>) {
        if (detail::prefer_lifting(m))
            if (auto k = detail::kernel_lifted(m)) return *std::move(k);
    }
    return kernel_direct<S>(m);
}

template <class S>
Echelon<S> rref(const Mat<S>& m) {
    return rref_direct<S>(m);
}

template <class S>
int rank(const Mat<S>& m) {
    return static_cast<int>(m.cols() - kernel_basis<S>(m).cols());
}

// Pivot columns of the reduced echelon form, read off the normalized kernel.
template <class S>
std::vector<int> pivot_columns(const Mat<S>& m) {
    const Mat<S> k = kernel_basis<S>(m);
    std::vector<char> free_col(static_cast<size_t>(m.cols()), 0);
    for (Eigen::Index c = 0; c < k.cols(); ++c) {
        for (Eigen::Index i = m.cols() - 1; i >= 0; --i)
            if (!is_zero(k(i, c))) { free_col[static_cast<size_t>(i)] = 1; break; }
    }
    std::vector<int> piv;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        if (!free_col[static_cast<size_t>(j)]) piv.push_back(static_cast<int>(j));
    return piv;
}

// Particular solution of a*x = b with free variables set to zero.
template <class S>
std::optional<Mat<S>> solve(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    const Eigen::Index n = a.cols(), nb = b.cols();
    Mat<S> aug(a.rows(), n + nb);
    aug << a, b;
    const Mat<S> k = kernel_basis<S>(aug);
    // b columns must all be free, and the free ones carry the solution
    Mat<S> x = zeros<S>(n, nb);
    std::vector<int> owner(static_cast<size_t>(nb), -1);
    for (Eigen::Index c = 0; c < k.cols(); ++c) {
        Eigen::Index last = -1;
        for (Eigen::Index i = n + nb - 1; i >= 0; --i)
            if (!is_zero(k(i, c))) { last = i; break; }
        if (last >= n) owner[static_cast<size_t>(last - n)] = static_cast<int>(c);
    }
    for (Eigen::Index j = 0; j < nb; ++j) {
        const int c = owner[static_cast<size_t>(j)];
        if (c < 0) return std::nullopt;
        for (Eigen::Index i = 0; i < n; ++i) x(i, j) = -k(i, c);
    }
    return x;
}

template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    auto x = solve<S>(a, identity<S>(a.rows()));
    if (!x) return std::nullopt;
    if (rank<S>(a) != a.rows()) return std::nullopt;
    return x;
}

// Column-reduced echelon form: the canonical representative of a column span.
template <class S>
Mat<S> column_rref(const Mat<S>& m) {
    const Echelon<S> e = rref_direct<S>(m.transpose());
    return e.reduced.topRows(e.rank).transpose();
}

// Kronecker product A (x) B.
template <class S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b) {
    Mat<S> out = zeros<S>(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!is_zero(a(i, j))) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

template <class S>
Mat<S> vec(const Mat<S>& m) {
    Mat<S> v(m.size(), 1);
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) v(j * m.rows() + i, 0) = m(i, j);
    return v;
}

template <class S, class Derived>
Mat<S> unvec(const Eigen::MatrixBase<Derived>& v, Eigen::Index rows, Eigen::Index cols) {
    Mat<S> m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = v(j * rows + i);
    return m;
}

}  // namespace kronrep
