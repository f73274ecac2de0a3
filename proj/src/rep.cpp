#include "kronrep/rep.hpp"

#include <sstream>

namespace kronrep {

long euler_form(DimVector a, DimVector b, int r) { return a.x * b.x + a.y * b.y - static_cast<long>(r) * a.x * b.y; }

SubspaceMap::SubspaceMap(const MatQ& alpha) {
    if (alpha.cols() < 1 || alpha.cols() > alpha.rows())
        throw std::invalid_argument("subspace: need 1 <= d <= r");
    cols_ = column_rref(alpha);
    if (cols_.cols() != alpha.cols()) throw std::invalid_argument("subspace: columns are not independent");
}

SubspaceMap SubspaceMap::coordinate(int r, const std::vector<int>& arrows) {
    MatQ a = zeros<Rational>(r, static_cast<Eigen::Index>(arrows.size()));
    for (size_t j = 0; j < arrows.size(); ++j) a(arrows[j], static_cast<Eigen::Index>(j)) = 1;
    return SubspaceMap(a);
}

SubspaceMap SubspaceMap::standard(int d, int r) {
    std::vector<int> arrows;
    for (int i = 0; i < d; ++i) arrows.push_back(i);
    return coordinate(r, arrows);
}

bool SubspaceMap::operator<(const SubspaceMap& o) const {
    if (r() != o.r()) return r() < o.r();
    if (d() != o.d()) return d() < o.d();
    for (Eigen::Index j = 0; j < cols_.cols(); ++j)
        for (Eigen::Index i = 0; i < cols_.rows(); ++i)
            if (cols_(i, j) != o.cols_(i, j)) return cols_(i, j) < o.cols_(i, j);
    return false;
}

std::string SubspaceMap::str() const {
    std::ostringstream os;
    for (Eigen::Index j = 0; j < cols_.cols(); ++j) {
        if (j) os << ';';
        for (Eigen::Index i = 0; i < cols_.rows(); ++i) os << (i ? "," : "") << cols_(i, j);
    }
    return os.str();
}

GroupElement::GroupElement(const MatQ& g) : g_(g) {
    auto inv = kronrep::inverse<Rational>(g);
    if (!inv) throw std::invalid_argument("group element is singular");
    inv_ = *inv;
}

GroupElement GroupElement::identity(int r) { return GroupElement(kronrep::identity<Rational>(r)); }

KroneckerRep restrict(const KroneckerRep& m, const SubspaceMap& v) { return restrict_along(m, v.cols()); }

KroneckerRep act(const GroupElement& g, const KroneckerRep& m) {
    if (g.r() != m.r) throw std::invalid_argument("act: arrow count mismatch");
    return restrict_along(m, g.inverse());
}

RankAtSubspace rank_at_subspace(const KroneckerRep& m, const SubspaceMap& v) {
    const KroneckerRep res = restrict(m, v);
    RankAtSubspace out;
    out.rank = rank<Rational>(structure_matrix(res));
    out.relatively_projective = out.rank == v.d() * m.dim.x;
    return out;
}

StdModels std_models(int r) {
    if (r < 1) throw std::invalid_argument("std_models: r >= 1");
    StdModels s;
    s.s1 = KroneckerRep::zero(r, {1, 0});
    s.s2 = KroneckerRep::zero(r, {0, 1});
    s.p0 = s.s2;
    s.i0 = s.s1;
    s.p1 = KroneckerRep::zero(r, {1, r});
    for (int i = 0; i < r; ++i) s.p1.map(i)(i, 0) = 1;
    s.i1 = dual(s.p1);
    return s;
}

long random_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

MatQ random_matrix(Eigen::Index rows, Eigen::Index cols, int bound, Rng& rng) {
    MatQ a(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = Rational(random_int(rng, -bound, bound));
    return a;
}

KroneckerRep random_rep(int r, DimVector dim, int bound, Rng& rng) {
    KroneckerRep m = KroneckerRep::zero(r, dim);
    for (int i = 0; i < r; ++i) m.map(i) = random_matrix(dim.y, dim.x, bound, rng);
    return m;
}

}  // namespace kronrep
