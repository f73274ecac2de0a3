#pragma once

#include "kronrep/canonical.hpp"
#include "kronrep/functors.hpp"

namespace kronrep {

enum class Sign { plus, minus };

struct TestRep {
    KroneckerRep rep;
    DimVector base;
    SubspaceMap subspace;
    Sign sign = Sign::minus;
};

GroupElement complete_to_glr(const SubspaceMap& alpha);
TestRep test_rep(const KroneckerRep& x, const SubspaceMap& alpha, Sign sign);
// P_n(d)^{+/-} at v, d = v.d()
TestRep p_test(int n, const SubspaceMap& v, Sign sign);

}  // namespace kronrep
