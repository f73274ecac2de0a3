#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kronrep/checks.hpp"
#include "kronrep/io.hpp"

using namespace kronrep;

namespace {

struct Common {
    std::uint64_t seed = 1;
    std::string out;
};

LineStrategy parse_strategy(const std::string& s) {
    if (s == "random") return LineStrategy::random;
    if (s == "coordinate") return LineStrategy::coordinate;
    return LineStrategy::mixed;
}

DimVector parse_pair(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("expected 'x,y', got '" + s + "'");
    try {
        return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ParseError("expected 'x,y', got '" + s + "'");
    }
}

template <std::uint32_t P>
Fp<P> to_fp(const Rational& q) {
    const long p = P;
    const long num = mpz_class(q.num() % p).get_si(), den = mpz_class(q.den() % p).get_si();
    if (den == 0) throw ParseError("entry " + q.str() + " has a denominator divisible by " + std::to_string(P));
    return Fp<P>(num) / Fp<P>(den);
}

template <std::uint32_t P>
Rep<Fp<P>> reduce_rep(const KroneckerRep& m) {
    Rep<Fp<P>> out = Rep<Fp<P>>::zero(m.r, m.dim);
    for (int i = 0; i < m.r; ++i)
        for (long a = 0; a < m.dim.y; ++a)
            for (long b = 0; b < m.dim.x; ++b) out.map(i)(a, b) = to_fp<P>(m.map(i)(a, b));
    return out;
}

template <std::uint32_t P>
Json fp_matrix_json(const Mat<Fp<P>>& m) {
    Json rows = Json::array();
    for (long i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back(std::to_string(m(i, j).value()));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <std::uint32_t P>
Json oracle_run(const std::optional<KroneckerRep>& given, DimVector e, int batch, DimVector dim, int r,
                std::uint64_t seed) {
    Json res;
    res["p"] = P;
    res["e"] = {e.x, e.y};
    if (given) {
        const auto w = subrep_bruteforce<P>(reduce_rep<P>(*given), e);
        res["exists"] = w.exists;
        if (w.exists) res["witness"] = {{"u1", fp_matrix_json<P>(w.u1)}, {"u2", fp_matrix_json<P>(w.u2)}};
        res["euler"] = euler_form(e, given->dim - e, given->r);
        return res;
    }
    Rng rng(seed);
    int with = 0;
    for (int t = 0; t < batch; ++t) {
        Rep<Fp<P>> m = Rep<Fp<P>>::zero(r, dim);
        for (auto& a : m.maps)
            for (long i = 0; i < a.rows(); ++i)
                for (long j = 0; j < a.cols(); ++j) a(i, j) = Fp<P>(random_int(rng, 0, P - 1));
        with += subrep_bruteforce<P>(m, e).exists;
    }
    const long eu = euler_form(e, dim - e, r);
    res["dim"] = {dim.x, dim.y};
    res["batch"] = batch;
    res["with_subrep"] = with;
    res["without_subrep"] = batch - with;
    res["euler"] = eu;
    // subrep-free samples predict a negative form; over F_p this is reported, not asserted
    res["consistent"] = with == batch || eu < 0;
    return res;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kronrep: representations of Kronecker quivers"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sc) {
        sc->add_option("--seed", common.seed, "random seed");
        sc->add_option("--out", common.out, "output path (default: stdout)");
    };

    std::string rep_path, sub_lit, line_lit, strategy = "mixed", planes_path;
    std::vector<std::string> subs;
    int lines = 20, bound = 10, sample_bound = 5, probes = 0, d = 2, r = 3, n = 1, m_ = 2, budget = 32, trials = 50, p = 2, batch = 0;
    long s = 8, c = 10;
    std::string e_lit = "1,2", dim_lit = "2,3";

    auto* inspect = app.add_subcommand("inspect", "dimension data, endomorphisms, Steiner invariants");
    inspect->add_option("--rep", rep_path)->required();
    add_common(inspect);

    auto* restrict_cmd = app.add_subcommand("restrict", "restrict to a subspace of the arrow space");
    restrict_cmd->add_option("--rep", rep_path)->required();
    restrict_cmd->add_option("--sub", sub_lit, "columns separated by ';', entries by ','")->required();
    add_common(restrict_cmd);

    auto* split = app.add_subcommand("split", "splitting type over K_2, optionally at a line");
    split->add_option("--rep", rep_path)->required();
    split->add_option("--line", line_lit, "2-dimensional subspace literal");
    add_common(split);

    auto* decompose = app.add_subcommand("decompose", "generic splitting type from sampled lines");
    decompose->add_option("--rep", rep_path)->required();
    decompose->add_option("--lines", lines);
    decompose->add_option("--strategy", strategy)->check(CLI::IsMember({"random", "coordinate", "mixed"}));
    decompose->add_option("--bound", bound);
    add_common(decompose);

    auto* jump = app.add_subcommand("jump", "jumping-subspace tests");
    jump->add_option("--rep", rep_path)->required();
    jump->add_option("--sub", subs, "subspace literal (repeatable)");
    jump->add_option("--probes", probes, "additional random subspaces");
    jump->add_option("--d", d);
    add_common(jump);

    auto* certify = app.add_subcommand("certify", "uniformity, homogeneity and Steiner certificates");
    certify->add_option("--rep", rep_path)->required();
    certify->add_option("--lines", lines);
    certify->add_option("--strategy", strategy)->check(CLI::IsMember({"random", "coordinate", "mixed"}));
    add_common(certify);

    auto* construct = app.add_subcommand("construct", "explicit constructions");
    construct->require_subcommand(1);
    auto* ex = construct->add_subcommand("ex", "brick with prescribed jumping planes");
    ex->add_option("--r", r);
    ex->add_option("--planes", planes_path)->required();
    ex->add_option("--probes", probes);
    add_common(ex);
    auto* sampler = construct->add_subcommand("sampler", "uniform non-homogeneous brick by random search");
    sampler->add_option("--r", r);
    sampler->add_option("--n", n);
    sampler->add_option("--s", s);
    sampler->add_option("--c", c);
    sampler->add_option("--lines", lines);
    sampler->add_option("--bound", sample_bound);
    sampler->add_option("--budget", budget);
    add_common(sampler);
    auto* chen = construct->add_subcommand("chen", "non-homogeneous brick over K_3");
    chen->add_option("--m", m_);
    chen->add_option("--n", n);
    add_common(chen);
    auto* union_cmd = construct->add_subcommand("support-union", "extension with support {0,1,n,n+1}");
    union_cmd->add_option("--r", r);
    union_cmd->add_option("--n", n);
    union_cmd->add_option("--s", s);
    union_cmd->add_option("--c", c);
    union_cmd->add_option("--lines", lines);
    union_cmd->add_option("--bound", sample_bound);
    union_cmd->add_option("--budget", budget);
    add_common(union_cmd);

    auto* adjoint = app.add_subcommand("adjoint-check", "adjunction between shifts, inflation and restriction");
    adjoint->add_option("--d", d);
    adjoint->add_option("--r", r);
    adjoint->add_option("--trials", trials);
    add_common(adjoint);

    auto* oracle = app.add_subcommand("oracle", "exhaustive subrepresentation search over F_2 or F_3");
    oracle->add_option("--rep", rep_path);
    oracle->add_option("--p", p)->check(CLI::IsMember({2, 3}));
    oracle->add_option("--e", e_lit, "dimension vector 'x,y'");
    oracle->add_option("--batch", batch, "random representations instead of --rep");
    oracle->add_option("--dim", dim_lit);
    oracle->add_option("--r", r);
    add_common(oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    Json report;
    Json inv;
    std::vector<std::string> args(argv + 1, argv + argc);
    inv["args"] = args;
    inv["seed"] = common.seed;
    report["invocation"] = inv;
    int code = 0;

    try {
        std::optional<KroneckerRep> rep;
        if (!rep_path.empty()) {
            rep = rep_from_json(read_json_file(rep_path));
            report["input"] = to_json(*rep);
        }
        Json result;
        if (inspect->parsed()) {
            const KroneckerRep& mm = *rep;
            result["dim"] = {mm.dim.x, mm.dim.y};
            result["tits_form"] = tits_form(mm.dim, mm.r);
            result["schur_root_candidate"] = is_schur_root_candidate(mm.dim, mm.r);
            result["regular_vector"] = is_regular_vector(mm.dim, mm.r);
            result["radical_dim2"] = radical_dim2(mm);
            const EndAnalysis ea = end_analysis(mm, common.seed);
            result["end"] = {{"end_dim", ea.end_dim},
                             {"rad_dim", ea.rad_dim},
                             {"is_brick", ea.is_brick},
                             {"geometric_indec", to_string(ea.geometric_indec)}};
            const SteinerInvariants st = steiner_invariants(mm, common.seed);
            result["steiner"] = {{"rank", st.rank},
                                 {"c1", st.c1},
                                 {"in_rep_proj_1", to_string(st.in_rep_proj_1)},
                                 {"rule", st.rule},
                                 {"witness", st.witness}};
        } else if (restrict_cmd->parsed()) {
            const SubspaceMap v(parse_subspace_literal(sub_lit));
            result["subspace"] = to_json(v);
            result["restriction"] = to_json(restrict(*rep, v));
        } else if (split->parsed()) {
            if (!line_lit.empty()) {
                const SubspaceMap v(parse_subspace_literal(line_lit));
                result["line"] = to_json(v);
                result["splitting"] = to_json(splitting_at_line(*rep, v));
            } else {
                if (rep->r != 2) throw ParseError("split: a K_r representation with r != 2 needs --line");
                result["splitting"] = to_json(split_k2(*rep));
            }
        } else if (decompose->parsed()) {
            const auto ls = line_sampler(rep->r, lines, common.seed, parse_strategy(strategy), bound);
            const GenericDecomposition g = generic_decomposition(*rep, ls);
            result["lines"] = static_cast<int>(ls.size());
            result["generic"] = to_json(g.gen);
            result["strict_majority"] = g.strict_majority;
            result["classes"] = Json::array();
            for (const auto& [t, k] : g.classes) result["classes"].push_back({{"type", to_json(t)}, {"count", k}});
            result["dissenters"] = Json::array();
            for (const auto& [v, t] : g.dissenters)
                result["dissenters"].push_back({{"line", to_json(v)}, {"type", to_json(t)}});
        } else if (jump->parsed()) {
            std::vector<SubspaceMap> vs;
            for (const auto& lit : subs) vs.emplace_back(parse_subspace_literal(lit));
            Rng rng(common.seed);
            if (probes > 0)
                for (auto& v : subspace_sampler(rep->r, d, probes, rng)) vs.push_back(std::move(v));
            result["tests"] = Json::array();
            for (const auto& v : vs) {
                const JumpingTest t = jumping_test(*rep, v);
                result["tests"].push_back({{"subspace", to_json(v)},
                                           {"jumping", t.in_rank_variety},
                                           {"hom_witness_dim", t.hom_witness_dim}});
            }
        } else if (certify->parsed()) {
            const auto ls = line_sampler(rep->r, lines, common.seed, parse_strategy(strategy));
            CertificateReport cr = uniformity_report(*rep, ls, common.seed);
            cr.merge(homogeneity_report(*rep, common.seed));
            const SteinerInvariants st = steiner_invariants(*rep, common.seed);
            cr.add({"in rep_proj(K_r,1)", st.in_rep_proj_1, st.rule, 0, st.witness});
            cr.numbers["steiner_rank"] = st.rank;
            cr.numbers["steiner_c1"] = st.c1;
            result = to_json(cr);
            if (cr.any_refuted()) code = 2;
        } else if (construct->parsed()) {
            ConstructionResult cres;
            if (ex->parsed()) {
                const auto planes = planes_from_json(read_json_file(planes_path));
                report["input"] = Json::array();
                for (const auto& v : planes) report["input"].push_back(to_json(v));
                cres = prescribed_jumping(r, planes, common.seed, probes > 0 ? probes : 20);
            } else if (sampler->parsed()) {
                const auto ls = line_sampler(r, lines, common.seed, LineStrategy::mixed);
                cres = uniform_candidate_sampler(r, n, s, c, common.seed, ls, {sample_bound, budget});
            } else if (chen->parsed()) {
                cres = chen_brick(m_, n);
            } else {
                const auto ls = line_sampler(r, lines, common.seed, LineStrategy::mixed);
                const ConstructionResult base =
                    uniform_candidate_sampler(r, n, s, c, common.seed, ls, {sample_bound, budget});
                cres = support_union_extension(base, r, common.seed, ls);
                result["sampler"] = to_json(base);
            }
            result["construction"] = to_json(cres);
            if (!cres.intended_verified()) code = 2;
        } else if (adjoint->parsed()) {
            const AdjointCheck ac = adjoint_check(d, r, common.seed, trials);
            result["trials"] = ac.trials;
            result["dims_equal"] = ac.dims_equal;
            result["round_trips"] = ac.round_trips;
            result["naturality_squares"] = ac.natural;
            result["details"] = Json::array();
            for (const auto& t : ac.details)
                result["details"].push_back({{"x_dim", {t.x_dim.x, t.x_dim.y}},
                                             {"m_dim", {t.m_dim.x, t.m_dim.y}},
                                             {"hom_left", t.hom_left},
                                             {"hom_right", t.hom_right},
                                             {"round_trip", t.round_trip},
                                             {"natural", t.natural}});
            if (!ac.all_pass()) code = 2;
        } else if (oracle->parsed()) {
            const DimVector e = parse_pair(e_lit);
            if (!rep && batch <= 0) throw ParseError("oracle: give --rep or --batch");
            result = p == 2 ? oracle_run<2>(rep, e, batch, parse_pair(dim_lit), r, common.seed)
                            : oracle_run<3>(rep, e, batch, parse_pair(dim_lit), r, common.seed);
        }
        report["result"] = result;
    } catch (const ParseError& e) {
        std::cerr << "kronrep: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "kronrep: " << e.what() << "\n";
        return 1;
    } catch (const BudgetExhausted& e) {
        std::cerr << "kronrep: " << e.what() << "\n";
        return 1;
    }

    const std::string text = report.dump(2) + "\n";
    if (common.out.empty()) std::cout << text;
    else write_text_file(common.out, text);
    return code;
}
