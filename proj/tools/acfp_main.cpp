// Command-line front end: verify code properties, run averaging attacks and
// traces, concatenate codes, search for large codes at small parameters, and
// drive the embedding simulator. Reports are JSON on stdout or --out.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "acfp/cli.hpp"

namespace {

using namespace acfp;
using namespace acfp::cli;

void deliver(CommandResult r, const std::optional<std::string>& out,
             const std::optional<std::string>& code_out) {
    if (!r.raw_output.empty()) {
        if (code_out)
            atomic_write(*code_out, r.raw_output);
        else
            r.report["code_text"] = r.raw_output;  // keep the code in the report
    }
    const std::string text = r.report.dump(2) + "\n";
    if (out)
        atomic_write(*out, text);
    else
        std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anti-collusion fingerprinting codes: attacks, tracing, verification"};
    app.require_subcommand(1);
    app.fallthrough();  // app-level --out may follow the subcommand

    std::optional<std::string> out_path, code_out_path;
    app.add_option("--out", out_path, "write the JSON report here instead of stdout");

    VerifyConfig verify_cfg;
    auto* verify = app.add_subcommand("verify", "brute-force property verdicts for a code");
    verify->add_option("--code", verify_cfg.code_path, "code file")->required();
    verify->add_option("--t", verify_cfg.t, "colluder bound t")->required();
    long long list_cap = 0;
    verify->add_option("--list-cap", list_cap, "list size for scld (default M)");
    verify->add_option("--props", verify_cfg.properties,
                       "subset of fpc,sc,scld,ssc,smippc,udc (default all)")
        ->delimiter(',');
    verify->add_option("--subset-budget", verify_cfg.check.subset_budget, "max subset evaluations");

    AttackConfig attack_cfg;
    std::string colluders_arg, multiset_arg;
    auto* attack = app.add_subcommand("attack", "exact averaging attack -> generated word");
    attack->add_option("--code", attack_cfg.code_path, "code file")->required();
    attack->add_option("--colluders", colluders_arg, "comma-separated 1-based indices");
    attack->add_option("--multiset", multiset_arg, "index:mult pairs, e.g. 1:2,3:1");

    TraceConfig trace_cfg;
    std::string inner_arg;
    int n1_arg = 0;
    long long msize_arg = 0;
    auto* trace = app.add_subcommand("trace", "recover colluders from a generated word");
    trace->add_option("--code", trace_cfg.code_path, "code file (outer code when --two-stage)")
        ->required();
    trace->add_option("--word", trace_cfg.word_path, "generated word JSON file")->required();
    trace->add_option("--t-cap", trace_cfg.t_cap, "assumed colluder bound")->required();
    trace->add_flag("--two-stage", trace_cfg.two_stage, "trace a concatenated code");
    trace->add_option("--inner", inner_arg, "inner code file (required with --two-stage)");
    trace->add_option("--n1", n1_arg, "outer length (consistency check)");
    trace->add_option("--size", msize_arg, "known multiset size (multiset variant)");

    ConcatConfig concat_cfg;
    auto* concat = app.add_subcommand("concat", "concatenate outer and inner code files");
    concat->add_option("--outer", concat_cfg.outer_path, "outer code file")->required();
    concat->add_option("--inner", concat_cfg.inner_path, "inner code file")->required();
    concat->add_option("--code-out", code_out_path, "write the concatenated code here");

    SearchConfig search_cfg;
    auto* search = app.add_subcommand("search", "find large codes with a property");
    search->add_option("--n", search_cfg.n, "length")->required();
    search->add_option("--q", search_cfg.q, "alphabet size")->required();
    search->add_option("--t", search_cfg.t, "colluder bound")->required();
    search->add_option("--property", search_cfg.property, "fpc|sc|ssc|smippc|udc")->required();
    search->add_option("--mode", search_cfg.mode, "greedy (default) or exhaustive");
    search->add_option("--seed", search_cfg.seed, "PRNG seed")->required();
    search->add_option("--trials", search_cfg.trials, "greedy restarts");
    search->add_option("--node-budget", search_cfg.node_budget, "exhaustive DFS node budget");
    search->add_option("--code-out", code_out_path, "write the best code here");

    SimulateConfig sim_cfg;
    auto* simulate = app.add_subcommand("simulate", "embed, average, extract, snap to exact word");
    simulate->add_option("--code", sim_cfg.code_path, "binary code file")->required();
    simulate->add_option("--colluders", sim_cfg.colluders, "comma-separated indices")->required();
    simulate->add_option("--alpha", sim_cfg.alpha, "watermark scale")->required();
    simulate->add_option("--dim", sim_cfg.dim, "host-signal length")->required();
    simulate->add_option("--seed", sim_cfg.seed, "PRNG seed")->required();
    simulate->add_option("--noise-sigma", sim_cfg.noise_sigma, "additive Gaussian noise (default 0)");
    simulate->add_option("--t-max", sim_cfg.t_max, "max denominator for snapping");
    simulate->add_option("--tol", sim_cfg.tol, "snap tolerance");
    std::string signal_out;
    simulate->add_option("--signal-out", signal_out, "write the pirated signal here");

    BenchConfig bench_cfg;
    auto* bench = app.add_subcommand("bench", "soft-trace wall-time trend over growing M");
    bench->add_option("--seed", bench_cfg.seed, "PRNG seed")->required();
    bench->add_option("--sizes", bench_cfg.sizes, "code sizes")->delimiter(',');
    bench->add_option("--n", bench_cfg.n, "code length");
    bench->add_option("--t", bench_cfg.t, "colluder bound");
    bench->add_option("--attacks", bench_cfg.attacks, "attacks per size");
    bench->add_option("--reps", bench_cfg.reps, "timing repetitions per attack");

    CLI11_PARSE(app, argc, argv);

    try {
        CommandResult result;
        if (*verify) {
            if (list_cap > 0) verify_cfg.list_cap = list_cap;
            result = cmd_verify(verify_cfg);
        } else if (*attack) {
            if (!colluders_arg.empty()) attack_cfg.colluders = colluders_arg;
            if (!multiset_arg.empty()) attack_cfg.multiset = multiset_arg;
            result = cmd_attack(attack_cfg);
        } else if (*trace) {
            if (!inner_arg.empty()) trace_cfg.inner_path = inner_arg;
            if (n1_arg > 0) trace_cfg.n1 = n1_arg;
            if (msize_arg > 0) trace_cfg.multiset_size = msize_arg;
            result = cmd_trace(trace_cfg);
        } else if (*concat) {
            result = cmd_concat(concat_cfg);
        } else if (*search) {
            result = cmd_search(search_cfg);
        } else if (*simulate) {
            if (!signal_out.empty()) sim_cfg.signal_out = signal_out;
            result = cmd_simulate(sim_cfg);
        } else if (*bench) {
            result = cmd_bench(bench_cfg);
        }
        deliver(result, out_path, code_out_path);
        return result.exit_code;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudgetExceeded;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
