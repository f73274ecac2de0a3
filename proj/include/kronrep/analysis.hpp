#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kronrep/canonical.hpp"
#include "kronrep/homalg.hpp"
#include "kronrep/test_reps.hpp"

namespace kronrep {

enum class Status { certified, sampled_evidence, refuted, info };
std::string to_string(Status s);

struct Verdict {
    std::string claim;
    Status status = Status::info;
    std::string rule;
    int samples = 0;
    std::string witness;
};

struct CertificateReport {
    std::vector<Verdict> verdicts;
    std::optional<SplittingType> splitting;
    std::set<int> support;
    std::optional<int> k_type;
    std::vector<SubspaceMap> jumping;
    std::map<std::string, long> numbers;

    void add(Verdict v) { verdicts.push_back(std::move(v)); }
    const Verdict* find(const std::string& claim) const;
    bool any_refuted() const;
    void merge(const CertificateReport& other);
};

SplittingType splitting_at_line(const KroneckerRep& m, const SubspaceMap& line);

enum class LineStrategy { random, coordinate, mixed };
std::vector<SubspaceMap> line_sampler(int r, int n, std::uint64_t seed, LineStrategy strategy, int bound = 10);
// random d-dimensional subspaces, canonical and distinct
std::vector<SubspaceMap> subspace_sampler(int r, int d, int n, Rng& rng, int bound = 10);

struct GenericDecomposition {
    SplittingType gen;
    std::vector<std::pair<SubspaceMap, SplittingType>> dissenters;
    bool strict_majority = true;
    std::vector<std::pair<SplittingType, int>> classes;
};
GenericDecomposition generic_decomposition(const KroneckerRep& m, const std::vector<SubspaceMap>& lines);

struct JumpingTest {
    bool in_rank_variety = false;
    int hom_witness_dim = 0;
};
JumpingTest jumping_test(const KroneckerRep& m, const SubspaceMap& v);

struct TwoTermCheck {
    bool holds = false;
    long predicted_low = 0;   // multiplicity of P_n(d)
    long predicted_high = 0;  // multiplicity of P_{n+1}(d)
    int hom_left = 0;         // dim Hom(P_{n+1}^-(v), M)
    int hom_right = 0;        // dim Hom(M, P_n^+(v))
};
TwoTermCheck two_term_support_check(const KroneckerRep& m, int n, const SubspaceMap& v);

// geometric indecomposability and q_r(dim) + defect(d) >= 1
bool rep_proj_certificate(const KroneckerRep& m, int d, const EndAnalysis& ea);
// existence screen for rep_proj(K_r, d) on the dimension vector
bool rep_proj_screen(DimVector v, int r, int d);

CertificateReport uniformity_report(const KroneckerRep& m, const std::vector<SubspaceMap>& lines,
                                    std::uint64_t seed = 1);
CertificateReport homogeneity_report(const KroneckerRep& m, std::uint64_t seed = 1);
// positive jumping tests on a finite candidate set only
CertificateReport almost_uniform_report(const KroneckerRep& m, const std::vector<SubspaceMap>& candidates,
                                        const std::vector<SubspaceMap>& probes);

struct SteinerInvariants {
    long rank = 0;
    long c1 = 0;
    Status in_rep_proj_1 = Status::info;
    std::string rule;
    std::string witness;
};
SteinerInvariants steiner_invariants(const KroneckerRep& m, std::uint64_t seed = 1, int samples = 20);

}  // namespace kronrep
