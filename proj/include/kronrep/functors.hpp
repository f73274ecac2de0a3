#pragma once

#include "kronrep/rep.hpp"

namespace kronrep {

// (f1, f2) with f2 * source.maps[i] = target.maps[i] * f1
struct MorphismPair {
    MatQ f1;
    MatQ f2;
    bool operator==(const MorphismPair&) const = default;
};

bool is_morphism(const KroneckerRep& source, const KroneckerRep& target, const MorphismPair& f);
MorphismPair identity_morphism(const KroneckerRep& m);
MorphismPair zero_morphism(const KroneckerRep& source, const KroneckerRep& target);
// second after first
MorphismPair compose(const MorphismPair& second, const MorphismPair& first);
bool is_zero_morphism(const MorphismPair& f);

struct ShiftWitness {
    KroneckerRep rep;
    MatQ basis;  // plus: kernel basis of psi (columns); minus: cokernel projection (rows)
};

ShiftWitness shift_plus(const KroneckerRep& m);
ShiftWitness shift_minus(const KroneckerRep& m);

inline KroneckerRep tau(const KroneckerRep& m) { return shift_plus(shift_plus(m).rep).rep; }
inline KroneckerRep tau_inv(const KroneckerRep& m) { return shift_minus(shift_minus(m).rep).rep; }

enum class ShiftDirection { plus, minus };

MorphismPair shift_on_morphism(const MorphismPair& f, ShiftDirection dir, const KroneckerRep& source,
                               const KroneckerRep& target, const ShiftWitness& source_shift,
                               const ShiftWitness& target_shift);

enum class TransportDirection { forward, backward };

// Adjunction between shift-minus after inflation and shift-plus after
// restriction along the first d arrows. x lives over K_d, m over K_r.
// forward:  Hom(shift_minus(inflate x), m) -> Hom(x, shift_plus(restrict m))
// backward: the inverse.
MorphismPair adjunction_transport(const KroneckerRep& x, const KroneckerRep& m, const MorphismPair& f,
                                  TransportDirection dir);

// I_k (x) f, block diagonal
MatQ block_diag_power(const MatQ& f, int k);

}  // namespace kronrep
