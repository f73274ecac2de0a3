#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kronrep/analysis.hpp"

namespace kronrep {

struct IntendedClaim {
    std::string claim;
    std::string tag;
};

struct ConstructionResult {
    KroneckerRep rep;
    std::vector<IntendedClaim> intended;
    CertificateReport verified;
    std::vector<std::pair<std::string, std::string>> descriptor;

    // every intended claim has a verdict and none of them is refuted
    bool intended_verified() const;
};

class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ConstructionResult chen_brick(int m, int n);

int radical_dim2(const KroneckerRep& m);

struct SamplerOptions {
    int bound = 5;
    int budget = 32;
};
bool sampler_gate(int r, int n, long s, long c);
ConstructionResult uniform_candidate_sampler(int r, int n, long s, long c, std::uint64_t seed,
                                             const std::vector<SubspaceMap>& lines, SamplerOptions opt = {});

ConstructionResult prescribed_jumping(int r, const std::vector<SubspaceMap>& planes, std::uint64_t seed,
                                      int probes = 20);

struct SupportUnionOptions {
    int bound = 3;
    int budget = 8;
    bool zero_cocycle = false;  // split control
};
ConstructionResult support_union_extension(const ConstructionResult& m, int r, std::uint64_t seed,
                                           const std::vector<SubspaceMap>& lines, SupportUnionOptions opt = {});
// smallest (a, b) passing the rep_proj(K_r,2) screen with negative Euler form against target
DimVector support_union_partner_dim(DimVector target, int r);

template <class S>
struct SubrepWitness {
    bool exists = false;
    Mat<S> u1;  // basis columns
    Mat<S> u2;
};

enum class Generator { sigma, sigma_inv, delta };
std::string to_string(Generator g);

struct Reduction {
    DimVector reduced;
    std::vector<Generator> word;
};
bool in_fundamental_domain(DimVector v, int r);
Reduction fundamental_domain_reduce(DimVector v, int r);

// ---- brute-force subrepresentation search over a small prime field

namespace detail {

// every k-dimensional subspace of F^n as an n x k basis, in RREF order
template <class S, std::uint32_t P>
void for_each_subspace(int n, int k, long& budget, const auto& visit) {
    if (k < 0 || k > n) return;
    std::vector<int> piv(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) piv[static_cast<size_t>(i)] = i;
    while (true) {
        std::vector<std::pair<int, int>> free;
        std::vector<char> is_piv(static_cast<size_t>(n), 0);
        for (int p : piv) is_piv[static_cast<size_t>(p)] = 1;
        for (int i = 0; i < k; ++i)
            for (int j = piv[static_cast<size_t>(i)] + 1; j < n; ++j)
                if (!is_piv[static_cast<size_t>(j)]) free.emplace_back(i, j);
        std::vector<std::uint32_t> digits(free.size(), 0);
        while (true) {
            if (--budget < 0) throw BudgetExhausted("subrep_bruteforce: enumeration budget exceeded");
            Mat<S> basis = zeros<S>(n, k);
            for (int i = 0; i < k; ++i) basis(piv[static_cast<size_t>(i)], i) = S(1);
            for (size_t t = 0; t < free.size(); ++t)
                basis(free[t].second, free[t].first) = S(static_cast<int>(digits[t]));
            if (visit(basis)) return;
            size_t t = 0;
            while (t < digits.size() && ++digits[t] == P) digits[t++] = 0;
            if (t == digits.size()) break;
        }
        int i = k - 1;
        while (i >= 0 && piv[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++piv[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) piv[static_cast<size_t>(j)] = piv[static_cast<size_t>(j - 1)] + 1;
    }
}

}  // namespace detail

template <std::uint32_t P>
SubrepWitness<Fp<P>> subrep_bruteforce(const Rep<Fp<P>>& m, DimVector e, long budget = 2'000'000) {
    static_assert(P == 2 || P == 3, "brute force runs over F_2 or F_3 only");
    using S = Fp<P>;
    if (m.dim.x + m.dim.y > 10) throw BudgetExhausted("subrep_bruteforce: total dimension above 10");
    if (e.x < 0 || e.y < 0 || e.x > m.dim.x || e.y > m.dim.y) return {};
    SubrepWitness<S> out;
    const int nx = static_cast<int>(m.dim.x), ny = static_cast<int>(m.dim.y);
    detail::for_each_subspace<S, P>(nx, static_cast<int>(e.x), budget, [&](const Mat<S>& u1) {
        Mat<S> images(ny, m.r * e.x);
        for (int i = 0; i < m.r; ++i) images.block(0, i * e.x, ny, e.x) = m.map(i) * u1;
        const Echelon<S> ech = rref_direct<S>(Mat<S>(images.transpose()));
        if (ech.rank > e.y) return false;
        // the images span W; any e.y-dimensional U2 above W works
        detail::for_each_subspace<S, P>(ny, static_cast<int>(e.y), budget, [&](const Mat<S>& u2) {
            Mat<S> both(ny, u2.cols() + images.cols());
            both << u2, images;
            if (rank<S>(both) != e.y) return false;
            out.exists = true;
            out.u1 = u1;
            out.u2 = u2;
            return true;
        });
        return out.exists;
    });
    return out;
}

}  // namespace kronrep
