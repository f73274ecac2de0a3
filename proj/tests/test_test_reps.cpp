#include "doctest.h"
#include "kronrep/analysis.hpp"
#include "oracle.hpp"

using namespace kronrep;

namespace {

std::vector<SubspaceMap> coordinate_planes(int r) { return line_sampler(r, 0, 1, LineStrategy::coordinate); }

}  // namespace

TEST_CASE("complete_to_glr") {
    CHECK(complete_to_glr(SubspaceMap::standard(2, 3)).matrix() == identity<Rational>(3));
    const GroupElement g = complete_to_glr(SubspaceMap::coordinate(3, {1, 2}));
    MatQ perm = zeros<Rational>(3, 3);
    perm(1, 0) = 1;
    perm(2, 1) = 1;
    perm(0, 2) = 1;
    CHECK(g.matrix() == perm);
    Rng rng(1);
    for (int t = 0; t < 10; ++t) {
        const MatQ a = random_matrix(4, 2, 5, rng);
        if (rank<Rational>(a) < 2) continue;
        const SubspaceMap v(a);
        const GroupElement h = complete_to_glr(v);
        CHECK(rank<Rational>(h.matrix()) == 4);
        CHECK(h.matrix().leftCols(2) == v.cols());
    }
}

TEST_CASE("test representations of simple seeds") {
    for (int r : {3, 4}) {
        const SubspaceMap v = SubspaceMap::coordinate(r, {0, 1});
        const auto d2 = std_models(2);
        CHECK(is_isomorphic(test_rep(d2.p0, v, Sign::minus).rep, std_models(r).p1) == IsoVerdict::yes);
        CHECK(test_rep(d2.p0, v, Sign::plus).rep.dim == DimVector{0, 0});
        CHECK(is_isomorphic(test_rep(d2.i0, v, Sign::plus).rep, std_models(r).i1) == IsoVerdict::yes);
    }
    const TestRep e = test_rep(std_models(2).p1, SubspaceMap::standard(2, 3), Sign::minus);
    CHECK(e.rep.dim == DimVector{2, 5});
    CHECK(e.base == DimVector{1, 2});
}

TEST_CASE("p_test dimensions") {
    for (auto [d, r] : {std::pair{2, 3}, {2, 4}, {3, 4}}) {
        const SubspaceMap v = SubspaceMap::standard(d, r);
        CHECK(p_test(1, v, Sign::minus).rep.dim == DimVector{d, r * d - 1});
        const auto a = a_seq(d, 4);
        for (int n = 1; n <= 2; ++n) {
            const auto an = a[static_cast<size_t>(n)], an1 = a[static_cast<size_t>(n + 1)];
            CHECK(p_test(n, v, Sign::minus).rep.dim == DimVector{an1, r * an1 - an});
            CHECK(p_test(n, v, Sign::plus).rep.dim == sigma_dim({an, an1}, r));
        }
    }
}

TEST_CASE("restriction identity") {
    Rng rng(2);
    for (int r : {3, 4}) {
        auto planes = coordinate_planes(r);
        const auto extra = subspace_sampler(r, 2, 2, rng);
        planes.insert(planes.end(), extra.begin(), extra.end());
        for (const auto& v : planes)
            for (int n = 0; n <= 2; ++n) {
                const SplittingType t = split_k2(restrict(p_test(n, v, Sign::minus).rep, v));
                std::map<int, long> want{{n + 1, 1}};
                want[0] += (r - 2) * (n + 1);
                CHECK(t.b == want);
                CHECK_FALSE(t.remainder);
            }
    }
    // d = 3 via dimension of the restricted splitting into K_3 preprojectives
    const SubspaceMap w = SubspaceMap::standard(3, 4);
    const KroneckerRep res = restrict(p_test(1, w, Sign::minus).rep, w);
    CHECK(is_isomorphic(res, direct_sum(direct_sum(preprojective(3, 0), direct_sum(preprojective(3, 0), preprojective(3, 0))),
                                        preprojective(3, 2))) == IsoVerdict::yes);
}

TEST_CASE("separation of P1 minus") {
    Rng rng(3);
    auto planes = coordinate_planes(3);
    const auto extra = subspace_sampler(3, 2, 3, rng);
    planes.insert(planes.end(), extra.begin(), extra.end());
    for (const auto& u : planes)
        for (const auto& v : planes) {
            const int h = hom_basis(p_test(1, u, Sign::minus).rep, p_test(1, v, Sign::minus).rep).dim();
            CHECK(h == (u == v ? 1 : 0));
        }
}

TEST_CASE("image-only dependence") {
    Rng rng(4);
    for (int t = 0; t < 4; ++t) {
        MatQ a = random_matrix(3, 2, 4, rng);
        if (rank<Rational>(a) < 2) continue;
        MatQ change = random_matrix(2, 2, 3, rng);
        while (rank<Rational>(change) < 2) change = random_matrix(2, 2, 3, rng);
        const MatQ b = a * change;
        for (int n = 1; n <= 2; ++n) {
            const KroneckerRep x = preprojective(2, n);
            const KroneckerRep lhs = act(complete_to_glr(SubspaceMap(a)), shift_minus(inflate(x, 3)).rep);
            MatQ full = identity<Rational>(3);
            full.leftCols(2) = b;
            const MatQ rest = complete_to_glr(SubspaceMap(a)).matrix().rightCols(1);
            full.rightCols(1) = rest;
            const KroneckerRep rhs = act(GroupElement(full), shift_minus(inflate(x, 3)).rep);
            CHECK(is_isomorphic(lhs, rhs) == IsoVerdict::yes);
        }
    }
}

TEST_CASE("adjunction instances") {
    Rng rng(5);
    for (int t = 0; t < 6; ++t) {
        const KroneckerRep m = random_rep(3, {random_int(rng, 1, 3), random_int(rng, 1, 5)}, 2, rng);
        const SubspaceMap v = subspace_sampler(3, 2, 1, rng).front();
        for (int n = 1; n <= 2; ++n) {
            const int lhs = oracle::hom_dim(p_test(n, v, Sign::minus).rep, m);
            const int rhs = oracle::hom_dim(preprojective(2, n + 1), restrict(m, v));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("bricks and tau") {
    const SubspaceMap v = SubspaceMap::coordinate(3, {0, 2});
    for (int n = 1; n <= 2; ++n) {
        const KroneckerRep minus = p_test(n, v, Sign::minus).rep;
        const KroneckerRep plus = p_test(n, v, Sign::plus).rep;
        CHECK(end_analysis(minus).is_brick);
        CHECK(end_analysis(plus).is_brick);
        CHECK(is_isomorphic(plus, tau(minus)) == IsoVerdict::yes);
    }
}

TEST_CASE("P1 minus lies in rep_proj(K_r, d-1)") {
    Rng rng(6);
    for (auto [d, r] : {std::pair{2, 3}, {3, 4}}) {
        const KroneckerRep e = p_test(1, SubspaceMap::standard(d, r), Sign::minus).rep;
        for (const auto& w : subspace_sampler(r, d - 1, 10, rng)) CHECK(rank_at_subspace(e, w).relatively_projective);
        for (int i = 0; i < r; ++i)
            if (d == 2) CHECK(rank_at_subspace(e, SubspaceMap::coordinate(r, {i})).relatively_projective);
    }
}
