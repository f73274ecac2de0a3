#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kronrep/rep.hpp"

namespace kronrep {

// a_0..a_n with a_0 = 0, a_1 = 1, a_{k+2} = d a_{k+1} - a_k
std::vector<long> a_seq(int d, int n);

enum class Family { P, I };

// Preprojective P_n(d) by repeated shift-minus from P_0(d); I_n(d) is its dual.
KroneckerRep preprojective(int d, int n, Family family = Family::P);

struct SplittingType {
    std::map<int, long> b;                // nonzero multiplicities only
    std::optional<DimVector> remainder;   // non-preprojective part, if any
    bool operator==(const SplittingType&) const = default;
    DimVector preprojective_dim() const;
    std::set<int> support() const;
    std::string str() const;
};

SplittingType split_k2(const KroneckerRep& n);

}  // namespace kronrep
