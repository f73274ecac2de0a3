#include "kronrep/analysis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kronrep {

std::string to_string(Status s) {
    switch (s) {
        case Status::certified: return "certified";
        case Status::sampled_evidence: return "sampled_evidence";
        case Status::refuted: return "refuted";
        default: return "info";
    }
}

const Verdict* CertificateReport::find(const std::string& claim) const {
    for (const auto& v : verdicts)
        if (v.claim == claim) return &v;
    return nullptr;
}

bool CertificateReport::any_refuted() const {
    return std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.status == Status::refuted; });
}

void CertificateReport::merge(const CertificateReport& other) {
    for (const auto& v : other.verdicts) verdicts.push_back(v);
    if (!splitting && other.splitting) {
        splitting = other.splitting;
        support = other.support;
        k_type = other.k_type;
    }
    for (const auto& j : other.jumping) jumping.push_back(j);
    for (const auto& [k, v] : other.numbers) numbers[k] = v;
}

SplittingType splitting_at_line(const KroneckerRep& m, const SubspaceMap& line) {
    if (line.d() != 2) throw std::invalid_argument("splitting_at_line: expects a 2-dimensional subspace");
    return split_k2(restrict(m, line));
}

std::vector<SubspaceMap> subspace_sampler(int r, int d, int n, Rng& rng, int bound) {
    std::vector<SubspaceMap> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < n) {
        if (++attempts > 1000 * (n + 1)) throw std::runtime_error("subspace_sampler: too many collisions");
        const MatQ a = random_matrix(r, d, bound, rng);
        if (rank<Rational>(a) != d) continue;
        SubspaceMap v(a);
        if (std::find(out.begin(), out.end(), v) != out.end()) continue;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<SubspaceMap> line_sampler(int r, int n, std::uint64_t seed, LineStrategy strategy, int bound) {
    if (r < 2) throw std::invalid_argument("line_sampler: r >= 2");
    std::vector<SubspaceMap> out;
    if (strategy != LineStrategy::random)
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) out.push_back(SubspaceMap::coordinate(r, {i, j}));
    if (strategy != LineStrategy::coordinate) {
        Rng rng(seed);
        int added = 0, attempts = 0;
        while (added < n) {
            if (++attempts > 1000 * (n + 1)) throw std::runtime_error("line_sampler: too many collisions");
            const MatQ a = random_matrix(r, 2, bound, rng);
            if (rank<Rational>(a) != 2) continue;
            SubspaceMap v(a);
            if (std::find(out.begin(), out.end(), v) != out.end()) continue;
            out.push_back(std::move(v));
            ++added;
        }
    }
    return out;
}

GenericDecomposition generic_decomposition(const KroneckerRep& m, const std::vector<SubspaceMap>& lines) {
    if (lines.empty()) throw std::invalid_argument("generic_decomposition: no lines");
    GenericDecomposition out;
    std::vector<SplittingType> types;
    for (const auto& v : lines) {
        types.push_back(splitting_at_line(m, v));
        auto it = std::find_if(out.classes.begin(), out.classes.end(),
                               [&](const auto& c) { return c.first == types.back(); });
        if (it == out.classes.end()) out.classes.emplace_back(types.back(), 1);
        else ++it->second;
    }
    auto best = std::max_element(out.classes.begin(), out.classes.end(),
                                 [](const auto& a, const auto& b) { return a.second < b.second; });
    out.gen = best->first;
    out.strict_majority = 2 * best->second > static_cast<int>(lines.size());
    for (size_t i = 0; i < lines.size(); ++i)
        if (!(types[i] == out.gen)) out.dissenters.emplace_back(lines[i], types[i]);
    return out;
}

JumpingTest jumping_test(const KroneckerRep& m, const SubspaceMap& v) {
    JumpingTest out;
    out.hom_witness_dim = hom_dim(p_test(1, v, Sign::minus).rep, m);
    out.in_rank_variety = out.hom_witness_dim > 0;
    if (out.in_rank_variety == rank_at_subspace(m, v).relatively_projective)
        throw std::logic_error("jumping_test: Hom criterion and rank criterion disagree");
    return out;
}

TwoTermCheck two_term_support_check(const KroneckerRep& m, int n, const SubspaceMap& v) {
    const int d = v.d();
    const auto a = a_seq(d, n + 2);
    TwoTermCheck out;
    const long x = m.dim.x, y = m.dim.y;
    out.predicted_low = -a[static_cast<size_t>(n + 2)] * x + a[static_cast<size_t>(n + 1)] * y;
    out.predicted_high = a[static_cast<size_t>(n + 1)] * x - a[static_cast<size_t>(n)] * y;
    out.hom_left = hom_dim(p_test(n + 1, v, Sign::minus).rep, m);
    out.hom_right = n == 0 ? 0 : hom_dim(m, p_test(n, v, Sign::plus).rep);
    out.holds = out.hom_left == 0 && out.hom_right == 0;
    return out;
}

bool rep_proj_certificate(const KroneckerRep& m, int d, const EndAnalysis& ea) {
    return ea.geometric_indec == Tri::yes && tits_form(m.dim, m.r) + defect(m.dim, d) >= 1;
}

bool rep_proj_screen(DimVector v, int r, int d) {
    return defect(v, d) >= static_cast<long>(r - d) * std::min<long>(d, v.x);
}

namespace {

std::string pair_witness(const SubspaceMap& a, const std::string& ta, const SubspaceMap& b, const std::string& tb) {
    return "[" + a.str() + "] -> " + ta + " ; [" + b.str() + "] -> " + tb;
}

void set_splitting(CertificateReport& rep, const SplittingType& s) {
    rep.splitting = s;
    rep.support = s.support();
    if (!rep.support.empty()) rep.k_type = *rep.support.rbegin();
}

}  // namespace

CertificateReport uniformity_report(const KroneckerRep& m, const std::vector<SubspaceMap>& lines, std::uint64_t seed) {
    if (lines.empty()) throw std::invalid_argument("uniformity_report: no lines");
    CertificateReport rep;
    const EndAnalysis ea = end_analysis(m, seed);
    rep.numbers["q"] = tits_form(m.dim, m.r);
    rep.numbers["defect2"] = defect(m.dim, 2);
    rep.numbers["end_dim"] = ea.end_dim;
    if (!rep_proj_screen(m.dim, m.r, 2))
        rep.add({"rep_proj(K_r,2)", Status::refuted, "Thm2.3.1", 0,
                 "dimension vector violates defect(2) >= (r-2)*min(2,x)"});
    const bool certified = m.r > 2 && rep_proj_certificate(m, 2, ea);
    if (certified) rep.add({"rep_proj(K_r,2)", Status::certified, "Prop2.3.3", 0, ""});

    std::vector<SplittingType> types;
    for (const auto& v : lines) types.push_back(splitting_at_line(m, v));
    size_t bad = types.size();
    for (size_t i = 1; i < types.size(); ++i)
        if (!(types[i] == types[0])) { bad = i; break; }

    if (certified && m.dim.x > 0) {
        SplittingType expected;
        if (defect(m.dim, 2) > 0) expected.b[0] = defect(m.dim, 2);
        expected.b[1] = m.dim.x;
        if (bad != types.size() || !(types[0] == expected))
            throw std::logic_error("uniformity_report: certified representation has unexpected splitting");
        set_splitting(rep, expected);
        rep.add({"uniform", Status::certified, "Prop2.3.3+Prop1.5.5", static_cast<int>(lines.size()), ""});
        return rep;
    }
    if (bad != types.size()) {
        rep.add({"uniform", Status::refuted, "splitting-disagreement", static_cast<int>(lines.size()),
                 pair_witness(lines[0], types[0].str(), lines[bad], types[bad].str())});
        return rep;
    }
    set_splitting(rep, types[0]);
    rep.add({"uniform", Status::sampled_evidence, "Thm4.3.5-line", static_cast<int>(lines.size()), ""});
    return rep;
}

CertificateReport homogeneity_report(const KroneckerRep& m, std::uint64_t seed) {
    CertificateReport rep;
    const EndAnalysis ea = end_analysis(m, seed);
    const int r = m.r;
    const long full = static_cast<long>(r) * r + 1;
    rep.numbers["end_dim"] = ea.end_dim;
    const long k_est = std::max<long>(0, r * m.dim.x - m.dim.y);
    const int upper = stabilizer_dim_bound(m);
    bool nonzero = false;
    for (const auto& a : m.maps) nonzero = nonzero || !is_zero_matrix(a);
    bool small = nonzero && upper == 2;
    int stab = upper;
    if (!small && m.dim.y * k_est * (r * r + m.dim.x * m.dim.x) <= 400000) {
        stab = stabilizer_dim_exact(m);
        small = true;
    }
    rep.numbers[small ? "stabilizer_dim" : "stabilizer_dim_upper"] = stab;
    if (!ea.is_brick) {
        rep.add({"homogeneous", Status::info, "Prop2.2.3", 0, "not a brick: stabilizer dimension only"});
    } else if (stab < full) {
        rep.add({"non-homogeneous", Status::certified, "Prop2.2.3", 0,
                 "stabilizer dim " + std::string(small ? "" : "<= ") + std::to_string(stab) + " < r^2+1 (char 0)"});
    } else if (small && stab == full) {
        rep.add({"homogeneous", Status::certified, "Prop2.2.3", 0, "stabilizer dim = r^2+1 (char 0)"});
    } else {
        rep.add({"homogeneous", Status::info, "Prop2.2.3", 0, "stabilizer bound inconclusive"});
    }

    // rank of psi over subspaces must be constant on homogeneous representations
    Rng rng(seed);
    for (int d = 1; d < r; ++d) {
        std::vector<SubspaceMap> probes;
        if (d == 1) {
            for (int i = 0; i < r; ++i) probes.push_back(SubspaceMap::coordinate(r, {i}));
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j)
                    for (int s : {1, -1}) {
                        MatQ a = zeros<Rational>(r, 1);
                        a(i, 0) = 1;
                        a(j, 0) = s;
                        probes.emplace_back(a);
                    }
        } else if (d == 2) {
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) probes.push_back(SubspaceMap::coordinate(r, {i, j}));
        }
        for (auto& v : subspace_sampler(r, d, 5, rng))
            if (std::find(probes.begin(), probes.end(), v) == probes.end()) probes.push_back(std::move(v));
        const int base = rank_at_subspace(m, probes[0]).rank;
        for (size_t i = 1; i < probes.size(); ++i) {
            const int rk = rank_at_subspace(m, probes[i]).rank;
            if (rk != base) {
                rep.add({"homogeneous", Status::refuted, "rank-variation", static_cast<int>(probes.size()),
                         "rank at [" + probes[0].str() + "] = " + std::to_string(base) + ", rank at [" +
                             probes[i].str() + "] = " + std::to_string(rk)});
                return rep;
            }
        }
    }
    return rep;
}

CertificateReport almost_uniform_report(const KroneckerRep& m, const std::vector<SubspaceMap>& candidates,
                                        const std::vector<SubspaceMap>& probes) {
    CertificateReport rep;
    std::vector<SubspaceMap> positive;
    for (const auto& v : candidates)
        if (jumping_test(m, v).in_rank_variety) positive.push_back(v);
    int checked = static_cast<int>(candidates.size());
    for (const auto& v : probes) {
        if (std::find(candidates.begin(), candidates.end(), v) != candidates.end()) continue;
        ++checked;
        if (jumping_test(m, v).in_rank_variety) {
            rep.add({"jumping set equals candidates", Status::refuted, "Cor4.4.3", checked,
                     "extra jumping subspace [" + v.str() + "]"});
            return rep;
        }
    }
    rep.jumping = positive;
    if (positive.size() != candidates.size()) {
        for (const auto& v : candidates)
            if (std::find(positive.begin(), positive.end(), v) == positive.end()) {
                rep.add({"jumping set equals candidates", Status::refuted, "Cor4.4.3", checked,
                         "candidate [" + v.str() + "] is not jumping"});
                break;
            }
    } else {
        rep.add({"jumping set equals candidates", Status::sampled_evidence, "Cor4.4.3", checked, ""});
    }
    if (!positive.empty())
        rep.add({"almost-uniform", Status::sampled_evidence, "Prop6.5.2", checked,
                 std::to_string(positive.size()) + " jumping subspaces, none among other probes"});
    return rep;
}

SteinerInvariants steiner_invariants(const KroneckerRep& m, std::uint64_t seed, int samples) {
    SteinerInvariants out;
    out.rank = m.dim.y - m.dim.x;
    out.c1 = m.dim.x;
    const EndAnalysis ea = end_analysis(m, seed);
    if (m.r > 1 && rep_proj_certificate(m, 1, ea)) {
        out.in_rep_proj_1 = Status::certified;
        out.rule = "Prop2.3.3";
        return out;
    }
    Rng rng(seed);
    std::vector<SubspaceMap> probes;
    for (int i = 0; i < m.r; ++i) probes.push_back(SubspaceMap::coordinate(m.r, {i}));
    if (m.r > 1)
        for (auto& v : subspace_sampler(m.r, 1, std::min(samples, 1000), rng))
            probes.push_back(std::move(v));
    out.rule = "Prop1.2.1-rank";
    for (const auto& v : probes)
        if (!rank_at_subspace(m, v).relatively_projective) {
            out.in_rep_proj_1 = Status::refuted;
            out.witness = "[" + v.str() + "]";
            return out;
        }
    out.in_rep_proj_1 = Status::sampled_evidence;
    return out;
}

}  // namespace kronrep
