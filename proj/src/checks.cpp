#include "kronrep/checks.hpp"

namespace kronrep {

namespace {

MatQ flatten(const MorphismPair& f) {
    MatQ v(f.f1.size() + f.f2.size(), 1);
    v << vec<Rational>(f.f1), vec<Rational>(f.f2);
    return v;
}

int span_rank(const std::vector<MorphismPair>& fs) {
    if (fs.empty()) return 0;
    MatQ m(flatten(fs.front()).rows(), static_cast<long>(fs.size()));
    for (size_t i = 0; i < fs.size(); ++i) m.col(static_cast<long>(i)) = flatten(fs[i]);
    return rank<Rational>(m);
}

MorphismPair combination(const std::vector<MorphismPair>& basis, Rng& rng, int bound) {
    MorphismPair g{zeros<Rational>(basis.front().f1.rows(), basis.front().f1.cols()),
                   zeros<Rational>(basis.front().f2.rows(), basis.front().f2.cols())};
    for (const auto& b : basis) {
        const Rational c(random_int(rng, -bound, bound));
        g.f1 += c * b.f1;
        g.f2 += c * b.f2;
    }
    return g;
}

}  // namespace

AdjointCheck adjoint_check(int d, int r, std::uint64_t seed, int trials, DimVector max_x, DimVector max_m, int bound) {
    if (d < 1 || d > r) throw std::invalid_argument("adjoint_check: need 1 <= d <= r");
    AdjointCheck out;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        AdjointTrial tr;
        const DimVector xd{random_int(rng, 0, max_x.x), random_int(rng, 0, max_x.y)};
        const DimVector md{random_int(rng, 0, max_m.x), random_int(rng, 0, max_m.y)};
        const KroneckerRep x = random_rep(d, xd, bound, rng);
        const KroneckerRep m = random_rep(r, md, bound, rng);
        tr.x_dim = xd;
        tr.m_dim = md;

        const ShiftWitness left = shift_minus(inflate(x, r));
        const ShiftWitness right = shift_plus(restrict(m, SubspaceMap::standard(d, r)));
        const HomBasis hl = hom_basis(left.rep, m);
        const HomBasis hr = hom_basis(x, right.rep);
        tr.hom_left = hl.dim();
        tr.hom_right = hr.dim();

        bool ok = tr.hom_left == tr.hom_right;
        std::vector<MorphismPair> fwd;
        for (const auto& f : hl.basis) {
            const MorphismPair g = adjunction_transport(x, m, f, TransportDirection::forward);
            if (!is_morphism(x, right.rep, g)) { ok = false; break; }
            if (!(adjunction_transport(x, m, g, TransportDirection::backward) == f)) { ok = false; break; }
            fwd.push_back(g);
        }
        if (ok) {
            for (const auto& g : hr.basis) {
                const MorphismPair f = adjunction_transport(x, m, g, TransportDirection::backward);
                if (!is_morphism(left.rep, m, f) ||
                    !(adjunction_transport(x, m, f, TransportDirection::forward) == g)) { ok = false; break; }
            }
        }
        if (ok && span_rank(fwd) != tr.hom_right) ok = false;
        tr.round_trip = ok;

        // naturality in the first variable along g: X (+) Z -> X
        const KroneckerRep z = random_rep(d, {random_int(rng, 0, 2), random_int(rng, 0, 2)}, bound, rng);
        const KroneckerRep xs = direct_sum(x, z);
        const HomBasis hg = hom_basis(xs, x);
        bool natural = true;
        if (hg.dim() > 0 && hl.dim() > 0) {
            const MorphismPair g = combination(hg.basis, rng, bound);
            const MorphismPair f = combination(hl.basis, rng, bound);
            const KroneckerRep xs_inf = inflate(xs, r), x_inf = inflate(x, r);
            const ShiftWitness left_s = shift_minus(xs_inf);
            const MorphismPair sg = shift_on_morphism(g, ShiftDirection::minus, xs_inf, x_inf, left_s, left);
            const MorphismPair lhs = adjunction_transport(xs, m, compose(f, sg), TransportDirection::forward);
            const MorphismPair rhs = compose(adjunction_transport(x, m, f, TransportDirection::forward), g);
            natural = lhs == rhs;
        }
        tr.natural = natural;

        out.dims_equal += tr.hom_left == tr.hom_right;
        out.round_trips += tr.round_trip;
        out.natural += tr.natural;
        out.details.push_back(tr);
        ++out.trials;
    }
    return out;
}

}  // namespace kronrep
