#include "kronrep/canonical.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "kronrep/functors.hpp"
#include "kronrep/homalg.hpp"

namespace kronrep {

std::vector<long> a_seq(int d, int n) {
    if (d < 2) throw std::invalid_argument("a_seq: d >= 2");
    std::vector<long> a{0, 1};
    while (static_cast<int>(a.size()) <= n) a.push_back(d * a[a.size() - 1] - a[a.size() - 2]);
    a.resize(static_cast<size_t>(n + 1));
    return a;
}

KroneckerRep preprojective(int d, int n, Family family) {
    if (d < 1 || n < 0) throw std::invalid_argument("preprojective: need d >= 1, n >= 0");
    if (family == Family::I) return dual(preprojective(d, n, Family::P));
    static std::mutex mu;
    static std::map<int, std::vector<KroneckerRep>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& chain = cache[d];
    if (chain.empty()) chain.push_back(std_models(d).p0);
    while (static_cast<int>(chain.size()) <= n) chain.push_back(shift_minus(chain.back()).rep);
    return chain[static_cast<size_t>(n)];
}

DimVector SplittingType::preprojective_dim() const {
    DimVector v;
    for (const auto& [i, m] : b) v = v + DimVector{i, i + 1} * m;
    return v;
}

std::set<int> SplittingType::support() const {
    std::set<int> s;
    for (const auto& [i, m] : b)
        if (m) s.insert(i);
    return s;
}

std::string SplittingType::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, m] : b) {
        os << (first ? "" : " + ") << m << "*P" << i;
        first = false;
    }
    if (first) os << "0";
    if (remainder) os << " + nonpreprojective(" << remainder->x << "," << remainder->y << ")";
    return os.str();
}

SplittingType split_k2(const KroneckerRep& n) {
    if (n.r != 2) throw std::invalid_argument("split_k2: expects a K_2 representation");
    const int top = static_cast<int>(n.dim.y) + 2;
    std::vector<long> h(static_cast<size_t>(top + 1), 0);
    for (int k = 0; k <= top; ++k) {
        h[static_cast<size_t>(k)] = hom_dim(preprojective(2, k), n);
        // zero at k >= 1 means only preprojectives below k remain
        if (k >= 1 && h[static_cast<size_t>(k)] == 0) break;
    }
    SplittingType out;
    for (int k = 0; k + 2 <= top; ++k) {
        const long bk = h[static_cast<size_t>(k)] - 2 * h[static_cast<size_t>(k + 1)] + h[static_cast<size_t>(k + 2)];
        if (bk < 0) throw std::logic_error("split_k2: negative multiplicity");
        if (bk > 0) out.b[k] = bk;
    }
    const DimVector found = out.preprojective_dim();
    if (found != n.dim) out.remainder = n.dim - found;
    return out;
}

}  // namespace kronrep
