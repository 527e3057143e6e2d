#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "acfp/attack.hpp"
#include "acfp/bench.hpp"
#include "acfp/concat.hpp"
#include "acfp/json_io.hpp"
#include "acfp/search.hpp"
#include "acfp/specsim.hpp"
#include "acfp/trace.hpp"
#include "acfp/version.hpp"

namespace acfp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailed = 1;
inline constexpr int kExitConditionsViolated = 2;
inline constexpr int kExitInputError = 3;
inline constexpr int kExitBudgetExceeded = 4;

struct CommandResult {
    json report;
    int exit_code = kExitOk;
    std::string raw_output;  // non-JSON payload (code text); empty for JSON commands
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Writes via a temp file + rename so readers never observe a partial file.
inline void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ParseError("cannot open " + tmp + " for writing");
        out << content;
        if (!out) throw ParseError("short write to " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

inline Code load_code(const std::string& path) {
    try {
        return parse_code(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline GeneratedWord load_word(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return word_from_json(j);
}

inline IndexSet parse_index_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError("bad index list entry: \"" + tok + "\"");
        }
    }
    try {
        return IndexSet(std::move(out));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

/// "1:2,3:1" -> {index 1 twice, index 3 once}
inline CodewordMultiset parse_multiset(const std::string& s) {
    CodewordMultiset out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        const auto colon = tok.find(':');
        try {
            const int idx = std::stoi(tok.substr(0, colon));
            const long long mult = colon == std::string::npos ? 1 : std::stoll(tok.substr(colon + 1));
            out.add(idx, mult);
        } catch (const std::exception&) {
            throw ParseError("bad multiset entry: \"" + tok + "\"");
        }
    }
    return out;
}

inline json report_envelope(const std::string& command) {
    return json{{"version", kVersion}, {"command", command}};
}

// ---------------------------------------------------------------------------

struct VerifyConfig {
    std::string code_path;
    int t = 2;
    std::optional<long long> list_cap;          // defaults to M
    std::vector<std::string> properties;        // empty = all six
    CheckOptions check;
};

inline CommandResult cmd_verify(const VerifyConfig& cfg) {
    const Code code = load_code(cfg.code_path);
    const long long cap = cfg.list_cap.value_or(code.M());
    std::vector<std::string> props = cfg.properties;
    if (props.empty()) props = {"fpc", "sc", "scld", "ssc", "smippc", "udc"};

    json report = report_envelope("verify");
    report["code"] = {{"n", code.n()}, {"M", code.M()}, {"q", code.q()}};
    report["t"] = cfg.t;
    report["list_cap"] = cap;
    report["budget"] = {{"subset_budget", cfg.check.subset_budget},
                        {"parent_candidate_cap", cfg.check.parent_candidate_cap}};
    report["rate"] = code_rate(code);

    bool all_hold = true;
    json verdicts = json::object();
    for (const auto& p : props) {
        PropertyVerdict v;
        if (p == "fpc")
            v = is_frameproof(code, cfg.t, cfg.check);
        else if (p == "sc")
            v = is_separable(code, cfg.t, cfg.check);
        else if (p == "scld")
            v = is_scld(code, cfg.t, cap, cfg.check);
        else if (p == "ssc")
            v = is_strongly_separable(code, cfg.t, cfg.check);
        else if (p == "smippc")
            v = is_smippc(code, cfg.t, cfg.check);
        else if (p == "udc")
            v = has_udc(code, cfg.t, cfg.check);
        else
            throw ParseError("unknown property \"" + p + "\"");
        verdicts[p] = verdict_to_json(v);
        all_hold = all_hold && v.holds;
    }
    report["verdicts"] = verdicts;
    report["all_hold"] = all_hold;
    return {report, all_hold ? kExitOk : kExitPropertyFailed, {}};
}

struct AttackConfig {
    std::string code_path;
    std::optional<std::string> colluders;  // "1,2,3"
    std::optional<std::string> multiset;   // "1:2,3:1"
};

inline CommandResult cmd_attack(const AttackConfig& cfg) {
    const Code code = load_code(cfg.code_path);
    if (cfg.colluders.has_value() == cfg.multiset.has_value())
        throw ParseError("attack: give exactly one of --colluders, --multiset");
    json report = report_envelope("attack");
    GeneratedWord x = [&] {
        try {
            if (cfg.colluders) {
                const IndexSet set = parse_index_list(*cfg.colluders);
                report["colluders"] = index_set_to_json(set);
                return averaging_attack(code, set);
            }
            const CodewordMultiset ms = parse_multiset(*cfg.multiset);
            report["colluders"] = multiset_to_json(ms);
            return multiset_averaging_attack(code, ms);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }();
    report["word"] = word_to_json(x);
    return {report, kExitOk, {}};
}

struct TraceConfig {
    std::string code_path;  // the code traced against (outer code when two-stage)
    std::string word_path;
    long long t_cap = 2;
    bool two_stage = false;
    std::optional<std::string> inner_path;  // required when two_stage
    std::optional<int> n1;                  // consistency check only; outer.n is authoritative
    std::optional<long long> multiset_size; // run the multiset variant with this known size
};

inline CommandResult cmd_trace(const TraceConfig& cfg) {
    const Code code = load_code(cfg.code_path);
    const GeneratedWord x = load_word(cfg.word_path);
    json report = report_envelope("trace");
    report["t_cap"] = cfg.t_cap;

    TraceOutcome outcome;
    try {
        if (cfg.two_stage) {
            if (!cfg.inner_path) throw ParseError("trace: --two-stage requires --inner");
            const Code inner = load_code(*cfg.inner_path);
            if (cfg.n1 && *cfg.n1 != code.n())
                throw ParseError("trace: --n1 does not match the outer code length");
            report["mode"] = "two_stage";
            outcome = two_stage_trace(code, inner, x, cfg.t_cap);
        } else if (cfg.multiset_size) {
            report["mode"] = "multiset";
            outcome = multiset_soft_trace(code, x, *cfg.multiset_size);
        } else {
            report["mode"] = "soft";
            outcome = soft_trace(code, x, cfg.t_cap);
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    report["outcome"] = outcome_to_json(outcome);
    return {report, outcome.success() ? kExitOk : kExitConditionsViolated, {}};
}

struct ConcatConfig {
    std::string outer_path;
    std::string inner_path;
};

inline CommandResult cmd_concat(const ConcatConfig& cfg) {
    const Code outer = load_code(cfg.outer_path);
    const Code inner = load_code(cfg.inner_path);
    Code combined = [&] {
        try {
            return concatenate(outer, inner);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }();
    json report = report_envelope("concat");
    report["code"] = {{"n", combined.n()}, {"M", combined.M()}, {"q", combined.q()}};
    CommandResult r{report, kExitOk, serialize_code(combined)};
    return r;
}

struct SearchConfig {
    int n = 2;
    int q = 2;
    int t = 2;
    std::string property = "udc";
    std::string mode = "greedy";  // greedy | exhaustive
    std::uint64_t seed = 1;
    int trials = 20;
    std::uint64_t node_budget = 2'000'000;
    CheckOptions check;
};

inline CommandResult cmd_search(const SearchConfig& cfg) {
    const auto prop = property_from_name(cfg.property);
    if (!prop) throw ParseError("search: unknown property \"" + cfg.property + "\"");
    SearchOptions opt;
    opt.n = cfg.n;
    opt.q = cfg.q;
    opt.t = cfg.t;
    opt.property = *prop;
    opt.seed = cfg.seed;
    opt.trials = cfg.trials;
    opt.node_budget = cfg.node_budget;
    opt.check = cfg.check;

    SearchResult res;
    try {
        res = cfg.mode == "exhaustive" ? exhaustive_search(opt)
              : cfg.mode == "greedy"   ? greedy_search(opt)
                                       : throw ParseError("search: mode must be greedy or exhaustive");
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    if (!res.best) throw std::runtime_error("search: no code found");

    json report = report_envelope("search");
    report["n"] = cfg.n;
    report["q"] = cfg.q;
    report["t"] = cfg.t;
    report["property"] = cfg.property;
    report["mode"] = cfg.mode;
    report["seed"] = cfg.seed;
    report["trials"] = cfg.trials;
    report["node_budget"] = cfg.node_budget;
    report["nodes"] = res.nodes;
    report["M"] = res.best->M();
    report["rate"] = code_rate(*res.best);
    report["optimal"] = res.optimal;  // only an exhaustive run that completed may claim this
    return {report, kExitOk, serialize_code(*res.best)};
}

struct SimulateConfig {
    std::string code_path;
    std::string colluders;  // "1,2,3"
    double alpha = 0.1;
    int dim = 64;
    std::uint64_t seed = 1;
    double noise_sigma = 0.0;
    long long t_max = 0;  // 0 = use |colluders|
    double tol = 1e-6;
    std::optional<std::string> signal_out;  // write the pirated signal here
};

inline CommandResult cmd_simulate(const SimulateConfig& cfg) {
    const Code code = load_code(cfg.code_path);
    if (!code.binary()) throw ParseError("simulate: code must be binary");
    const IndexSet colluders = parse_index_list(cfg.colluders);
    if (colluders.empty() || colluders.indices().back() > code.M())
        throw ParseError("simulate: bad colluder set");

    const auto basis = make_basis(code.n(), cfg.dim, cfg.seed);
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> host_dist(-1.0, 1.0);
    std::vector<double> host(static_cast<std::size_t>(cfg.dim));
    for (auto& v : host) v = host_dist(rng);

    std::vector<std::vector<double>> marked;
    for (int j : colluders) marked.push_back(embed(host, basis, code.column(j), cfg.alpha));
    std::vector<double> pirated = collude_average(marked);
    if (cfg.noise_sigma > 0) {
        std::normal_distribution<double> noise(0.0, cfg.noise_sigma);
        for (auto& v : pirated) v += noise(rng);
    }
    if (cfg.signal_out) write_signal(*cfg.signal_out, pirated);

    const std::vector<double> extracted = extract(pirated, host, basis, cfg.alpha);
    const GeneratedWord exact = averaging_attack(code, colluders);
    double max_err = 0.0;
    for (int i = 1; i <= code.n(); ++i)
        max_err = std::max(max_err,
                           std::abs(extracted[static_cast<std::size_t>(i - 1)] -
                                    exact.entry(i).as_double()));

    const long long t_max = cfg.t_max > 0 ? cfg.t_max : static_cast<long long>(colluders.size());
    json report = report_envelope("simulate");
    report["alpha"] = cfg.alpha;
    report["dim"] = cfg.dim;
    report["seed"] = cfg.seed;
    report["noise_sigma"] = cfg.noise_sigma;
    report["colluders"] = index_set_to_json(colluders);
    report["extracted"] = extracted;
    report["max_extraction_error"] = max_err;
    try {
        const GeneratedWord snapped = rationalize(extracted, t_max, cfg.tol);
        report["word"] = word_to_json(snapped);
        report["matches_exact_attack"] = (snapped == exact);
    } catch (const std::domain_error& e) {
        report["word"] = nullptr;
        report["matches_exact_attack"] = false;
        report["snap_error"] = e.what();
    }
    return {report, report["matches_exact_attack"].get<bool>() ? kExitOk : kExitConditionsViolated, {}};
}

struct BenchConfig {
    std::vector<int> sizes = {64, 128, 256, 512};
    int n = 48;  // long enough that random codes reliably pin contributors at M=512
    int t = 2;
    int attacks = 64;
    int reps = 9;
    std::uint64_t seed = 1;
};

inline CommandResult cmd_bench(const BenchConfig& cfg) {
    const BenchReport b = bench_soft_trace(cfg.sizes, cfg.n, cfg.t, cfg.attacks, cfg.reps, cfg.seed);
    json report = report_envelope("bench");
    report["n"] = b.n;
    report["t"] = b.t;
    report["attacks"] = b.attacks;
    report["reps"] = b.reps;
    report["seed"] = b.seed;
    json points = json::array();
    for (const auto& p : b.points) points.push_back({{"M", p.M}, {"median_us", p.median_us}});
    report["points"] = points;
    report["max_doubling_factor"] = b.max_doubling_factor;
    return {report, kExitOk, {}};
}

}  // namespace acfp::cli
