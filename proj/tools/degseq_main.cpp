// Command-line front end: construct extremal graphs, check class membership,
// run the theorem verification sweeps, query the enumeration oracles.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "degseq/report.hpp"

namespace {

void add_common(CLI::App* cmd, degseq::RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--tau", cfg.tau, "Strictness tolerance for float comparisons");
    cmd->add_option("--threads", cfg.threads,
                    "Worker threads (EXTREMAL_DEGSEQ_THREADS overrides)");
    cmd->add_option("--seed", cfg.seed, "Random seed recorded with the run");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremal-degseq: extremal degree-sum verification at desk scale"};
    app.require_subcommand(1);

    degseq::RunConfig cfg;
    std::string kind, bits, theorem, mode = "max", n_range = "4..9", m_range, q_range = "4..10";
    int n = 0;
    long m = 0;

    auto* construct = app.add_subcommand("construct", "Build qs/qk/threshold graphs");
    construct->add_option("kind", kind, "qs | qk | threshold")->required();
    construct->add_option("arg1", n_range, "n (qs/qk) or creation sequence (threshold)")->required();
    construct->add_option("arg2", m_range, "m (qs/qk)");
    construct->footer("CSV schema: kind,n,m,degrees,conjugate (degrees space-separated)");
    add_common(construct, cfg);

    auto* check = app.add_subcommand("check-class", "Class membership report for a function");
    check->add_option("spec", cfg.function_text, "Function in the mini-DSL, e.g. pow:2")->required();
    check->add_option("--K", cfg.K, "Verify conditions up to K");
    check->footer("CSV schema: function,class,member,checked_up_to,first_failure_condition,first_failure_k");
    add_common(check, cfg);

    auto* verify = app.add_subcommand("verify", "Verification sweeps: t5, t11, lemma-iso, t8");
    verify->add_option("theorem", theorem, "t5 | t11 | lemma-iso | t8")->required();
    verify->add_option("--f,--g", cfg.function_text, "Objective function (mini-DSL)");
    verify->add_option("--n", n_range, "Vertex range, e.g. 4..9");
    verify->add_option("--m", m_range, "Edge range (default: theorem scope)");
    verify->add_option("--q", q_range, "Clique range for t8, e.g. 4..10");
    verify->add_option("--K", cfg.K, "Class check bound");
    verify->footer(
        "One row per (n,m) cell. CSV schema: theorem,function,n,m,verdict,optimum,"
        "optimal_sequences,note (sequences '|'-joined). Exit: 0 all pass, 1 any fail, "
        "2 usage error, 3 inconclusive near-tie.");
    add_common(verify, cfg);

    auto* extremal = app.add_subcommand("extremal", "Optimal degree sequences for one cell");
    extremal->add_option("--f,--g", cfg.function_text, "Objective function (mini-DSL)")->required();
    extremal->add_option("--n", n, "Vertex count")->required();
    extremal->add_option("--m", m, "Edge count")->required();
    extremal->add_option("--mode", mode, "max | min")->check(CLI::IsMember({"max", "min"}));
    extremal->add_option("--oracle", cfg.oracle, "threshold | graphical")
        ->check(CLI::IsMember({"threshold", "graphical"}));
    extremal->footer(
        "CSV schema: function,n,m,mode,oracle,optimum,unique,optimal_sequences,near_ties");
    add_common(extremal, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : degseq::kExitUsage;
    }

    try {
        if (construct->parsed()) {
            cfg.command = "construct";
            if (kind == "threshold") {
                bits = n_range;
                return degseq::cmd_construct(kind, 0, 0, bits, cfg, std::cout);
            }
            int cn = static_cast<int>(std::stol(n_range));
            long cm = std::stol(m_range);
            return degseq::cmd_construct(kind, cn, cm, "", cfg, std::cout);
        }
        if (check->parsed()) {
            cfg.command = "check-class";
            return degseq::cmd_check_class(cfg, std::cout);
        }
        if (verify->parsed()) {
            cfg.command = "verify";
            auto [nlo, nhi] = degseq::parse_range(n_range);
            cfg.n_lo = nlo;
            cfg.n_hi = nhi;
            if (!m_range.empty()) {
                auto [mlo, mhi] = degseq::parse_range(m_range);
                cfg.m_lo = mlo;
                cfg.m_hi = mhi;
            }
            auto [qlo, qhi] = degseq::parse_range(q_range);
            cfg.q_lo = qlo;
            cfg.q_hi = qhi;
            if (theorem != "t8" && cfg.function_text.empty())
                throw std::domain_error("verify " + theorem + " needs --f/--g");
            return degseq::cmd_verify(theorem, cfg, std::cout);
        }
        if (extremal->parsed()) {
            cfg.command = "extremal";
            cfg.n_lo = n;
            cfg.m_lo = m;
            return degseq::cmd_extremal(mode, cfg, std::cout);
        }
    } catch (const degseq::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return degseq::kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return degseq::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return degseq::kExitFail;
    }
    return degseq::kExitUsage;
}
