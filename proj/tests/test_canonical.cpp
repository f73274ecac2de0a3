#include "doctest.h"
#include "kronrep/canonical.hpp"
#include "kronrep/homalg.hpp"
#include "oracle.hpp"

using namespace kronrep;

TEST_CASE("a_seq") {
    const auto two = a_seq(2, 8);
    for (int n = 0; n <= 8; ++n) CHECK(two[static_cast<size_t>(n)] == n);
    CHECK(a_seq(3, 5) == std::vector<long>{0, 1, 3, 8, 21, 55});
    CHECK_THROWS_AS(a_seq(1, 3), std::invalid_argument);
    for (int d : {2, 3, 4}) {
        const auto a = a_seq(d, 7);
        for (size_t n = 0; n + 1 < a.size(); ++n) {
            CHECK(tits_form({a[n], a[n + 1]}, d) == 1);
            CHECK(a[n] == oracle::a_term(d, static_cast<int>(n)));
        }
    }
}

TEST_CASE("preprojective models") {
    CHECK(preprojective(2, 2).dim == DimVector{2, 3});
    CHECK(preprojective(3, 2).dim == DimVector{3, 8});
    for (int n = 0; n <= 4; ++n) {
        const KroneckerRep i = preprojective(2, n, Family::I);
        CHECK(i.dim == DimVector{n + 1, n});
        CHECK(i == dual(preprojective(2, n)));
        CHECK(is_isomorphic(preprojective(2, n), oracle::kronecker_preprojective(n)) == IsoVerdict::yes);
    }
    CHECK(preprojective(3, 0) == std_models(3).p0);
}

TEST_CASE("almost split dimension law") {
    for (int d : {2, 3, 4})
        for (int n = 0; n <= 3; ++n)
            CHECK(preprojective(d, n).dim + preprojective(d, n + 2).dim == preprojective(d, n + 1).dim * d);
}

TEST_CASE("hom table between preprojectives") {
    for (int d : {2, 3})
        for (int n = 0; n <= 4; ++n)
            for (int m = 0; m <= 4; ++m) {
                CAPTURE(d);
                CAPTURE(n);
                CAPTURE(m);
                const int h = hom_basis(preprojective(d, n), preprojective(d, m)).dim();
                CHECK(h == (n <= m ? oracle::a_term(d, m - n + 1) : 0));
            }
}

TEST_CASE("split_k2 examples") {
    const auto s = std_models(2);
    const SplittingType t = split_k2(direct_sum(direct_sum(s.p0, s.p0), s.p1));
    CHECK(t.b == std::map<int, long>{{0, 2}, {1, 1}});
    CHECK_FALSE(t.remainder);
    for (int m = 0; m <= 5; ++m) CHECK(split_k2(preprojective(2, m)).b == std::map<int, long>{{m, 1}});

    KroneckerRep reg = KroneckerRep::zero(2, {1, 1});
    reg.map(0)(0, 0) = 1;
    reg.map(1)(0, 0) = 1;
    const SplittingType rt = split_k2(reg);
    REQUIRE(rt.remainder);
    CHECK(*rt.remainder == DimVector{1, 1});
    CHECK(rt.b.empty());

    const SplittingType mixed = split_k2(direct_sum(reg, s.p1));
    CHECK(mixed.b == std::map<int, long>{{1, 1}});
    REQUIRE(mixed.remainder);
    CHECK(*mixed.remainder == DimVector{1, 1});
    CHECK_THROWS(split_k2(std_models(3).p1));
}

TEST_CASE("split_k2 round trip") {
    Rng rng(10);
    for (int t = 0; t < 40; ++t) {
        std::map<int, long> b;
        const int total = static_cast<int>(random_int(rng, 1, 6));
        for (int k = 0; k < total; ++k) ++b[static_cast<int>(random_int(rng, 0, 4))];
        KroneckerRep sum = KroneckerRep::zero(2, {});
        for (const auto& [i, c] : b)
            for (long k = 0; k < c; ++k) sum = direct_sum(sum, preprojective(2, i));
        // hide the block structure
        MatQ a = random_matrix(sum.dim.x, sum.dim.x, 2, rng), c = random_matrix(sum.dim.y, sum.dim.y, 2, rng);
        while (rank<Rational>(a) < sum.dim.x) a = random_matrix(sum.dim.x, sum.dim.x, 2, rng);
        while (rank<Rational>(c) < sum.dim.y) c = random_matrix(sum.dim.y, sum.dim.y, 2, rng);
        for (auto& map : sum.maps) map = c * map * a;
        const SplittingType st = split_k2(sum);
        CHECK(st.b == b);
        CHECK_FALSE(st.remainder);
        CHECK(st.preprojective_dim() == sum.dim);
        const auto naive = oracle::k2_multiplicities(sum, 5);
        for (int i = 0; i <= 5; ++i) CHECK(naive[static_cast<size_t>(i)] == (b.count(i) ? b.at(i) : 0));
    }
}

TEST_CASE("splitting type helpers") {
    SplittingType t;
    t.b = {{0, 2}, {3, 1}};
    CHECK(t.preprojective_dim() == DimVector{3, 6});
    CHECK(t.support() == std::set<int>{0, 3});
}
