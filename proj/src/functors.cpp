#include "kronrep/functors.hpp"

#include <stdexcept>

namespace kronrep {

bool is_morphism(const KroneckerRep& source, const KroneckerRep& target, const MorphismPair& f) {
    if (source.r != target.r) return false;
    if (f.f1.rows() != target.dim.x || f.f1.cols() != source.dim.x) return false;
    if (f.f2.rows() != target.dim.y || f.f2.cols() != source.dim.y) return false;
    for (int i = 0; i < source.r; ++i)
        if (MatQ(f.f2 * source.map(i)) != MatQ(target.map(i) * f.f1)) return false;
    return true;
}

MorphismPair identity_morphism(const KroneckerRep& m) {
    return {identity<Rational>(m.dim.x), identity<Rational>(m.dim.y)};
}

MorphismPair zero_morphism(const KroneckerRep& source, const KroneckerRep& target) {
    return {zeros<Rational>(target.dim.x, source.dim.x), zeros<Rational>(target.dim.y, source.dim.y)};
}

MorphismPair compose(const MorphismPair& second, const MorphismPair& first) {
    return {second.f1 * first.f1, second.f2 * first.f2};
}

bool is_zero_morphism(const MorphismPair& f) { return is_zero_matrix(f.f1) && is_zero_matrix(f.f2); }

MatQ block_diag_power(const MatQ& f, int k) {
    MatQ out = zeros<Rational>(k * f.rows(), k * f.cols());
    for (int i = 0; i < k; ++i) out.block(i * f.rows(), i * f.cols(), f.rows(), f.cols()) = f;
    return out;
}

ShiftWitness shift_plus(const KroneckerRep& m) {
    ShiftWitness w;
    w.basis = kernel_basis<Rational>(structure_matrix(m));
    const long k = w.basis.cols();
    w.rep = KroneckerRep::zero(m.r, {k, m.dim.x});
    for (int i = 0; i < m.r; ++i) w.rep.map(i) = w.basis.block(i * m.dim.x, 0, m.dim.x, k);
    return w;
}

ShiftWitness shift_minus(const KroneckerRep& m) {
    ShiftWitness w;
    w.basis = kernel_basis<Rational>(MatQ(stacked_matrix(m).transpose())).transpose();
    const long c = w.basis.rows();
    w.rep = KroneckerRep::zero(m.r, {m.dim.y, c});
    for (int i = 0; i < m.r; ++i) w.rep.map(i) = w.basis.block(0, i * m.dim.y, c, m.dim.y);
    return w;
}

MorphismPair shift_on_morphism(const MorphismPair& f, ShiftDirection dir, const KroneckerRep& source,
                               const KroneckerRep& target, const ShiftWitness& source_shift,
                               const ShiftWitness& target_shift) {
    if (!is_morphism(source, target, f)) throw std::invalid_argument("shift_on_morphism: not a morphism");
    MorphismPair out;
    if (dir == ShiftDirection::plus) {
        out.f2 = f.f1;
        const MatQ image = block_diag_power(f.f1, source.r) * source_shift.basis;
        auto x = solve<Rational>(target_shift.basis, image);
        if (!x) throw std::logic_error("shift_on_morphism: kernel not preserved (inconsistent witness)");
        out.f1 = *x;
    } else {
        out.f1 = f.f2;
        const MatQ image = target_shift.basis * block_diag_power(f.f2, source.r);
        auto x = solve<Rational>(MatQ(source_shift.basis.transpose()), MatQ(image.transpose()));
        if (!x) throw std::logic_error("shift_on_morphism: map does not descend (inconsistent witness)");
        out.f2 = x->transpose();
    }
    return out;
}

MorphismPair adjunction_transport(const KroneckerRep& x, const KroneckerRep& m, const MorphismPair& f,
                                  TransportDirection dir) {
    const int d = x.r, r = m.r;
    if (d > r) throw std::invalid_argument("adjunction_transport: need d <= r");
    const KroneckerRep res = restrict(m, SubspaceMap::standard(d, r));
    if (dir == TransportDirection::forward) {
        const ShiftWitness left = shift_minus(inflate(x, r));
        if (!is_morphism(left.rep, m, f)) throw std::invalid_argument("adjunction_transport: not a morphism");
        const ShiftWitness right = shift_plus(res);
        MorphismPair g;
        g.f2 = f.f1;
        const MatQ image = block_diag_power(f.f1, d) * stacked_matrix(x);
        auto sol = solve<Rational>(right.basis, image);
        if (!sol) throw std::logic_error("adjunction_transport: image leaves the kernel");
        g.f1 = *sol;
        return g;
    }
    const ShiftWitness right = shift_plus(res);
    if (!is_morphism(x, right.rep, f)) throw std::invalid_argument("adjunction_transport: not a morphism");
    const ShiftWitness left = shift_minus(inflate(x, r));
    MorphismPair g;
    g.f1 = f.f2;
    const MatQ image = structure_matrix(m) * block_diag_power(f.f2, r);
    auto sol = solve<Rational>(MatQ(left.basis.transpose()), MatQ(image.transpose()));
    if (!sol) throw std::logic_error("adjunction_transport: map does not factor through the cokernel");
    g.f2 = sol->transpose();
    return g;
}

}  // namespace kronrep
