#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kronrep/functors.hpp"

namespace kronrep {

struct HomBasis {
    KroneckerRep source, target;
    std::vector<MorphismPair> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

HomBasis hom_basis(const KroneckerRep& m, const KroneckerRep& n);

// Dimension of Hom over F_p of the reductions; an upper bound for the
// rational dimension. nullopt when the prime divides a denominator.
std::optional<int> hom_dim_mod(const KroneckerRep& m, const KroneckerRep& n, std::uint32_t p);
int hom_dim_bound(const KroneckerRep& m, const KroneckerRep& n);
// Exact rational dimension by elimination over Q.
int hom_dim_exact(const KroneckerRep& m, const KroneckerRep& n);
// Exact; the modular bound settles it whenever it meets known_lower.
int hom_dim(const KroneckerRep& m, const KroneckerRep& n, int known_lower = 0);

struct ExtCocycle {
    std::vector<MatQ> blocks;  // r blocks, x.dim.y x y.dim.x
};

struct Ext1 {
    int dim = 0;
    std::vector<ExtCocycle> cocycles;
};

// Extensions 0 -> x -> e -> y -> 0.
Ext1 ext1(const KroneckerRep& y, const KroneckerRep& x);
int ext1_dim(const KroneckerRep& y, const KroneckerRep& x);
int ext1_dim_cokernel(const KroneckerRep& y, const KroneckerRep& x);

KroneckerRep extension_from_cocycle(const KroneckerRep& y, const KroneckerRep& x, const ExtCocycle& c);
ExtCocycle random_cocycle(const Ext1& e, int bound, Rng& rng);

enum class Tri { yes, no, inconclusive };
std::string to_string(Tri t);

struct EndAnalysis {
    int end_dim = 0;
    int rad_dim = 0;
    bool is_brick = false;
    Tri geometric_indec = Tri::inconclusive;
};

EndAnalysis end_analysis(const KroneckerRep& m, std::uint64_t seed = 1);

struct UniversalExtension {
    KroneckerRep e;
    MorphismPair inclusion;
    MorphismPair projection;
    std::vector<int> multiplicities;
};

UniversalExtension universal_extension(const KroneckerRep& y, const std::vector<KroneckerRep>& xs);

enum class IsoVerdict { yes, no, probably_not };
std::string to_string(IsoVerdict v);
IsoVerdict is_isomorphic(const KroneckerRep& m, const KroneckerRep& n, std::uint64_t seed = 1, int trials = 16);

// Infinitesimal stabilizer of the structure map under gl(A_r) x gl(M1) x gl(M2).
int stabilizer_dim_exact(const KroneckerRep& m);
int stabilizer_dim_bound(const KroneckerRep& m);
// exact; skips elimination over Q when the modular bound meets the trivial lower bound
int stabilizer_dim(const KroneckerRep& m);

}  // namespace kronrep
