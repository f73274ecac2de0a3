#pragma once

#include <compare>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kronrep/linalg.hpp"

namespace kronrep {

using Rng = std::mt19937_64;

struct DimVector {
    long x = 0;
    long y = 0;
    auto operator<=>(const DimVector&) const = default;
    DimVector operator+(const DimVector& o) const { return {x + o.x, y + o.y}; }
    DimVector operator-(const DimVector& o) const { return {x - o.x, y - o.y}; }
    DimVector operator*(long k) const { return {k * x, k * y}; }
    bool is_zero() const { return x == 0 && y == 0; }
};

long euler_form(DimVector a, DimVector b, int r);
inline long tits_form(DimVector a, int r) { return euler_form(a, a, r); }
inline bool is_schur_root_candidate(DimVector a, int r) { return tits_form(a, r) <= 1; }
inline bool is_regular_vector(DimVector a, int r) { return tits_form(a, r) <= 0; }
// y - d*x
inline long defect(DimVector a, int d) { return a.y - static_cast<long>(d) * a.x; }
inline DimVector sigma_dim(DimVector a, int r) { return {r * a.x - a.y, a.x}; }
inline DimVector sigma_inv_dim(DimVector a, int r) { return {a.y, r * a.y - a.x}; }
inline DimVector swap_dim(DimVector a) { return {a.y, a.x}; }

template <class S>
struct Rep {
    int r = 1;
    DimVector dim;
    std::vector<Mat<S>> maps;  // r matrices, each dim.y x dim.x

    static Rep zero(int arrows, DimVector d) {
        Rep m;
        m.r = arrows;
        m.dim = d;
        m.maps.assign(static_cast<size_t>(arrows), zeros<S>(d.y, d.x));
        return m;
    }
    const Mat<S>& map(int i) const { return maps[static_cast<size_t>(i)]; }
    Mat<S>& map(int i) { return maps[static_cast<size_t>(i)]; }
};

using KroneckerRep = Rep<Rational>;

template <class S>
bool operator==(const Rep<S>& a, const Rep<S>& b) {
    return a.r == b.r && a.dim == b.dim && a.maps == b.maps;
}

template <class S>
std::optional<std::string> validate(const Rep<S>& m) {
    if (m.r < 1) return "arrow count must be positive";
    if (m.dim.x < 0 || m.dim.y < 0) return "negative dimension";
    if (static_cast<int>(m.maps.size()) != m.r)
        return "expected " + std::to_string(m.r) + " maps, found " + std::to_string(m.maps.size());
    for (int i = 0; i < m.r; ++i) {
        const auto& a = m.map(i);
        if (a.rows() != m.dim.y || a.cols() != m.dim.x)
            return "map " + std::to_string(i) + " has shape " + std::to_string(a.rows()) + "x" +
                   std::to_string(a.cols()) + ", expected " + std::to_string(m.dim.y) + "x" +
                   std::to_string(m.dim.x);
    }
    return std::nullopt;
}

// [M_1 | ... | M_r]: dim.y x (r*dim.x)
template <class S>
Mat<S> structure_matrix(const Rep<S>& m) {
    Mat<S> psi(m.dim.y, m.r * m.dim.x);
    for (int i = 0; i < m.r; ++i) psi.block(0, i * m.dim.x, m.dim.y, m.dim.x) = m.map(i);
    return psi;
}

// (M_1; ...; M_r): (r*dim.y) x dim.x
template <class S>
Mat<S> stacked_matrix(const Rep<S>& m) {
    Mat<S> eta(m.r * m.dim.y, m.dim.x);
    for (int i = 0; i < m.r; ++i) eta.block(i * m.dim.y, 0, m.dim.y, m.dim.x) = m.map(i);
    return eta;
}

template <class S>
Rep<S> direct_sum(const Rep<S>& a, const Rep<S>& b) {
    if (a.r != b.r) throw std::invalid_argument("direct_sum: arrow count mismatch");
    Rep<S> out = Rep<S>::zero(a.r, a.dim + b.dim);
    for (int i = 0; i < a.r; ++i) {
        out.map(i).topLeftCorner(a.dim.y, a.dim.x) = a.map(i);
        out.map(i).bottomRightCorner(b.dim.y, b.dim.x) = b.map(i);
    }
    return out;
}

template <class S>
Rep<S> direct_sum(const std::vector<Rep<S>>& parts, int r) {
    Rep<S> out = Rep<S>::zero(r, {});
    for (const auto& p : parts) out = direct_sum(out, p);
    return out;
}

template <class S>
Rep<S> dual(const Rep<S>& m) {
    Rep<S> out;
    out.r = m.r;
    out.dim = swap_dim(m.dim);
    for (const auto& a : m.maps) out.maps.push_back(a.transpose());
    return out;
}

// maps'[j] = sum_i alpha(i, j) * maps[i]; alpha is r x d, any matrix
template <class S>
Rep<S> restrict_along(const Rep<S>& m, const Mat<S>& alpha) {
    if (alpha.rows() != m.r) throw std::invalid_argument("restrict: subspace lives in a different arrow space");
    Rep<S> out = Rep<S>::zero(static_cast<int>(alpha.cols()), m.dim);
    for (Eigen::Index j = 0; j < alpha.cols(); ++j)
        for (int i = 0; i < m.r; ++i)
            if (!is_zero(alpha(i, j))) out.map(static_cast<int>(j)) += alpha(i, j) * m.map(i);
    return out;
}

template <class S>
Rep<S> inflate(const Rep<S>& x, int r) {
    if (r < x.r) throw std::invalid_argument("inflate: target arrow count below source");
    Rep<S> out = x;
    out.r = r;
    out.maps.resize(static_cast<size_t>(r), zeros<S>(x.dim.y, x.dim.x));
    return out;
}

// Point of Gr_d(A_r), stored as the column-reduced echelon form of alpha.
class SubspaceMap {
public:
    SubspaceMap() = default;
    explicit SubspaceMap(const MatQ& alpha);
    static SubspaceMap coordinate(int r, const std::vector<int>& arrows);
    static SubspaceMap standard(int d, int r);

    int d() const { return static_cast<int>(cols_.cols()); }
    int r() const { return static_cast<int>(cols_.rows()); }
    const MatQ& cols() const { return cols_; }
    bool operator==(const SubspaceMap& o) const { return cols_ == o.cols_; }
    bool operator<(const SubspaceMap& o) const;
    std::string str() const;

private:
    MatQ cols_;
};

class GroupElement {
public:
    explicit GroupElement(const MatQ& g);
    static GroupElement identity(int r);
    int r() const { return static_cast<int>(g_.rows()); }
    const MatQ& matrix() const { return g_; }
    const MatQ& inverse() const { return inv_; }
    GroupElement operator*(const GroupElement& o) const { return GroupElement(MatQ(g_ * o.g_)); }

private:
    MatQ g_, inv_;
};

KroneckerRep restrict(const KroneckerRep& m, const SubspaceMap& v);
KroneckerRep act(const GroupElement& g, const KroneckerRep& m);

struct RankAtSubspace {
    int rank = 0;
    bool relatively_projective = false;
};
RankAtSubspace rank_at_subspace(const KroneckerRep& m, const SubspaceMap& v);

struct StdModels {
    KroneckerRep s1, s2, p0, p1, i0, i1;
};
StdModels std_models(int r);

KroneckerRep random_rep(int r, DimVector dim, int bound, Rng& rng);
MatQ random_matrix(Eigen::Index rows, Eigen::Index cols, int bound, Rng& rng);
long random_int(Rng& rng, long lo, long hi);

}  // namespace kronrep
