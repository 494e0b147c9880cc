#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "scopt/ao.hpp"
#include "scopt/counting.hpp"
#include "scopt/cpo.hpp"
#include "scopt/grade.hpp"
#include "scopt/io.hpp"
#include "scopt/metrics.hpp"
#include "scopt/tc.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using scopt::CodeParameters;
using scopt::CouplingPattern;

struct ParamFlags {
    int gamma = 3;
    int kappa = 7;
    int memory = 2;
    std::vector<int> pattern;  // empty = full memory
    int z = 2;
    int replicas = 1;
};

void add_param_flags(CLI::App* app, ParamFlags& f, bool with_code) {
    app->add_option("--gamma", f.gamma, "base matrix rows");
    app->add_option("--kappa", f.kappa, "base matrix columns");
    app->add_option("--memory", f.memory, "memory m");
    app->add_option("--pattern", f.pattern,
                    "coupling pattern a_0,...,a_mt (default 0,1,...,m)")
        ->delimiter(',');
    if (with_code) {
        app->add_option("--z", f.z, "circulant size");
        app->add_option("--replicas,-L", f.replicas, "replica count L");
    }
}

CodeParameters make_params(const ParamFlags& f) {
    CodeParameters p;
    p.gamma = f.gamma;
    p.kappa = f.kappa;
    p.memory = f.memory;
    p.pattern = f.pattern.empty() ? CouplingPattern::full(f.memory)
                                  : CouplingPattern{f.pattern};
    p.circulant_size = f.z;
    p.replicas = f.replicas;
    return p;
}

void print_count_table(const scopt::ProtographCounts& pc, const scopt::TannerCounts& tc) {
    std::printf("%-34s %14s %14s\n", "", "cycles-6", "cycles-8");
    std::printf("%-34s %14lld %14lld\n", "protograph candidates (tracked)",
                static_cast<long long>(pc.count6), static_cast<long long>(pc.count8));
    std::printf("%-34s %14lld %14lld\n", "tanner survivors (per base cand.)",
                static_cast<long long>(tc.survivors6), static_cast<long long>(tc.survivors8));
    std::printf("%-34s %14lld %14lld\n", "tanner cycles, per-period conv.",
                static_cast<long long>(tc.period6), static_cast<long long>(tc.period8));
    std::printf("%-34s %14lld %14lld\n", "tanner cycles, full-graph conv.",
                static_cast<long long>(tc.full6), static_cast<long long>(tc.full8));
}

int run(int argc, char** argv) {
    CLI::App app{"construction toolkit for quasi-cyclic spatially-coupled LDPC codes"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: all cores)");

    // ---- grade
    auto* grade_cmd = app.add_subcommand("grade", "optimize the edge distribution");
    ParamFlags gf;
    scopt::GradeConfig gcfg;
    add_param_flags(grade_cmd, gf, false);
    grade_cmd->add_option("--w", gcfg.cycle6_weight, "cycle-6 candidate weight");
    grade_cmd->add_option("--epsilon", gcfg.epsilon, "convergence accuracy");
    grade_cmd->add_option("--alpha", gcfg.alpha, "step size");
    grade_cmd->add_option("--max-iters", gcfg.max_iters, "iteration cap");
    bool grade_json = false;
    grade_cmd->add_flag("--json", grade_json, "emit JSON");

    // ---- construct
    auto* con_cmd = app.add_subcommand("construct", "build a code and write a result bundle");
    ParamFlags cf;
    add_param_flags(con_cmd, cf, true);
    std::string mode = "gd";
    con_cmd->add_option("--mode", mode, "gd | unf | tc")
        ->check(CLI::IsMember({"gd", "unf", "tc"}));
    int pseudo_memory = -1;
    con_cmd->add_option("--pseudo-memory", pseudo_memory,
                        "tc mode: number of nonzero components minus one");
    std::optional<std::uint64_t> seed_flag;
    con_cmd->add_option("--seed", seed_flag, "RNG seed (generated and printed if omitted)");
    int restarts = 1;
    con_cmd->add_option("--restarts", restarts, "independent runs, best kept")
        ->check(CLI::PositiveNumber);
    std::string out_dir = "scopt-out";
    con_cmd->add_option("--out", out_dir, "output bundle directory");
    scopt::GradeConfig con_gcfg;
    auto* wopt = con_cmd->add_option("--w", con_gcfg.cycle6_weight, "cycle-6 weight");
    auto* eopt = con_cmd->add_option("--epsilon", con_gcfg.epsilon, "distribution accuracy");
    auto* aopt = con_cmd->add_option("--alpha", con_gcfg.alpha, "distribution step size");
    scopt::AoConfig acfg;
    con_cmd->add_option("--d1", acfg.d1, "partition sweep L1 budget");
    con_cmd->add_option("--d2", acfg.d2, "partition sweep Linf budget");

    // ---- count
    auto* count_cmd = app.add_subcommand("count", "count cycles of an existing code");
    ParamFlags kf;
    add_param_flags(count_cmd, kf, true);
    std::string partition_file, lifting_file;
    count_cmd->add_option("--partition", partition_file, "partition CSV")->required();
    count_cmd->add_option("--lifting", lifting_file, "lifting CSV")->required();
    double count_w = 100.0;
    count_cmd->add_option("--w", count_w, "cycle-6 weight in the reported objective");
    std::string count_json_out;
    count_cmd->add_option("--json-out", count_json_out, "also write stats JSON here");

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    if (grade_cmd->parsed()) {
        CodeParameters params = make_params(gf);
        params.circulant_size = 2;  // not used by the distribution step
        params.replicas = 1;
        scopt::validate(params);
        const auto res = scopt::optimize_distribution(params.gamma, params.kappa, params.pattern,
                                                      gcfg);
        const double p6 = scopt::cycle6_probability(params.pattern, res.dist);
        const double n8 = scopt::expected_cycle8_count(params.gamma, params.kappa, params.pattern,
                                                       res.dist);
        double lo = res.dist.p[0], hi = res.dist.p[0];
        for (double v : res.dist.p) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (grade_json) {
            nlohmann::json j{{"pattern", params.pattern.a},
                             {"distribution", res.dist.p},
                             {"objective", res.trace.back()},
                             {"iterations", res.trace.size() - 1},
                             {"converged", res.converged},
                             {"cycle6_probability", p6},
                             {"expected_cycle8_count", n8}};
            std::cout << j.dump(2) << '\n';
        } else {
            std::printf("pattern      :");
            for (int a : params.pattern.a) std::printf(" %d", a);
            std::printf("\ndistribution :");
            for (double v : res.dist.p) std::printf(" %.6f", v);
            std::printf("\nobjective    : %.10g (after %zu accepted steps%s)\n",
                        res.trace.back(), res.trace.size() - 1,
                        res.converged ? "" : ", NOT converged");
            std::printf("cycle6 prob  : %.6f\nexpected #8  : %.2f\n", p6, n8);
            std::printf("skew         : min %.6f  max %.6f  spread %.6f\n", lo, hi, hi - lo);
        }
        return 0;
    }

    if (con_cmd->parsed()) {
        CodeParameters params = make_params(cf);
        if (mode == "tc") {
            if (pseudo_memory < 1) {
                throw scopt::ValidationError("tc mode requires --pseudo-memory >= 1");
            }
            if (cf.pattern.empty()) {
                params.pattern = scopt::search_coupling_pattern(params.memory, pseudo_memory,
                                                                params.gamma, params.kappa,
                                                                con_gcfg);
                std::printf("pattern search:");
                for (int a : params.pattern.a) std::printf(" %d", a);
                std::printf("\n");
            }
        }
        scopt::validate(params);
        if (mode == "unf" && (wopt->count() || eopt->count() || aopt->count())) {
            std::fprintf(stderr,
                         "warning: --w/--epsilon/--alpha control the distribution step; "
                         "unf mode uses the uniform distribution and ignores them\n");
        }
        std::uint64_t seed = seed_flag ? *seed_flag : std::random_device{}();
        std::printf("seed: %llu\n", static_cast<unsigned long long>(seed));

        std::optional<scopt::ConstructionResult> best;
        scopt::CpoConfig ccfg;
        ccfg.cycle6_weight = con_gcfg.cycle6_weight;
        acfg.cycle6_weight = con_gcfg.cycle6_weight;
        for (int r = 0; r < restarts; ++r) {
            acfg.seed = seed + static_cast<std::uint64_t>(r);
            scopt::ConstructionResult res;
            if (mode == "gd") {
                res = scopt::construct_gd_code(params, con_gcfg, acfg, ccfg);
            } else if (mode == "unf") {
                res = scopt::construct_unf_code(params, acfg, ccfg);
            } else {
                res = scopt::construct_tc_code(params, con_gcfg, acfg, ccfg);
            }
            if (!best || res.stats.weighted_objective < best->stats.weighted_objective) {
                best = std::move(res);
            }
        }

        nlohmann::json prov{{"version", kVersion},
                            {"mode", mode},
                            {"seed", best->seed},
                            {"base_seed", seed},
                            {"restarts", restarts},
                            {"w", con_gcfg.cycle6_weight},
                            {"epsilon", con_gcfg.epsilon},
                            {"alpha", con_gcfg.alpha},
                            {"d1", acfg.d1},
                            {"d2", acfg.d2},
                            {"params", nlohmann::json::parse(scopt::params_to_json(best->params))}};
        scopt::write_bundle(out_dir, *best, prov.dump(2));
        std::printf("bundle written to %s\n", out_dir.c_str());
        std::printf("protograph candidates: %lld / %lld   tanner cycles (full): %lld / %lld\n",
                    static_cast<long long>(best->stats.protograph_candidates6),
                    static_cast<long long>(best->stats.protograph_candidates8),
                    static_cast<long long>(best->stats.tanner_cycles6),
                    static_cast<long long>(best->stats.tanner_cycles8));
        return 0;
    }

    // count
    CodeParameters params = make_params(kf);
    scopt::validate(params);
    const auto partition = scopt::read_int_csv(partition_file);
    const auto lifting = scopt::read_int_csv(lifting_file);
    scopt::validate_partition(params, partition);
    scopt::validate_lifting(params, lifting);
    const auto pc = scopt::count_protograph_candidates(partition);
    const auto tc = scopt::count_tanner_cycles(params, partition, lifting);
    print_count_table(pc, tc);
    scopt::CycleStats stats;
    stats.protograph_candidates6 = pc.count6;
    stats.protograph_candidates8 = pc.count8;
    stats.tanner_cycles6 = tc.full6;
    stats.tanner_cycles8 = tc.full8;
    stats.tanner_period6 = tc.period6;
    stats.tanner_period8 = tc.period8;
    stats.weighted_objective = count_w * static_cast<double>(tc.full6) +
                               static_cast<double>(tc.full8);
    if (!count_json_out.empty()) {
        std::ofstream out(count_json_out);
        out << scopt::stats_to_json(stats) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const scopt::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 2;
    }
}
