#pragma once

#include <optional>
#include <string>

#include "acfp/codegen.hpp"
#include "acfp/props.hpp"

namespace acfp {

/// Properties a code search can target.
enum class CodeProperty { frameproof, separable, strongly_separable, smippc, udc };

inline const char* property_name(CodeProperty p) {
    switch (p) {
        case CodeProperty::frameproof: return "fpc";
        case CodeProperty::separable: return "sc";
        case CodeProperty::strongly_separable: return "ssc";
        case CodeProperty::smippc: return "smippc";
        case CodeProperty::udc: return "udc";
    }
    return "?";
}

inline std::optional<CodeProperty> property_from_name(const std::string& s) {
    if (s == "fpc") return CodeProperty::frameproof;
    if (s == "sc") return CodeProperty::separable;
    if (s == "ssc") return CodeProperty::strongly_separable;
    if (s == "smippc") return CodeProperty::smippc;
    if (s == "udc") return CodeProperty::udc;
    return std::nullopt;
}

inline PropertyVerdict check_property(const Code& code, CodeProperty p, int t,
                                      const CheckOptions& opts = {}) {
    switch (p) {
        case CodeProperty::frameproof: return is_frameproof(code, t, opts);
        case CodeProperty::separable: return is_separable(code, t, opts);
        case CodeProperty::strongly_separable: return is_strongly_separable(code, t, opts);
        case CodeProperty::smippc: return is_smippc(code, t, opts);
        case CodeProperty::udc: return has_udc(code, t, opts);
    }
    throw std::invalid_argument("check_property: unknown property");
}

struct SearchOptions {
    int n = 2;
    int q = 2;
    int t = 2;
    CodeProperty property = CodeProperty::udc;
    std::uint64_t seed = 1;
    int trials = 20;                       // greedy restarts
    std::uint64_t node_budget = 2'000'000; // exhaustive DFS nodes
    CheckOptions check;
};

struct SearchResult {
    std::optional<Code> best;  // empty only if even M=1 was out of reach (never, in practice)
    bool exhaustive = false;   // exhaustive mode was run
    bool optimal = false;      // exhaustive run completed within budget
    std::uint64_t nodes = 0;   // DFS nodes or greedy candidate checks
};

/// Greedy column addition with property re-check, restarted over seeded
/// shuffles of the candidate pool; keeps the largest code found.
inline SearchResult greedy_search(const SearchOptions& opt) {
    const auto pool = all_columns(opt.n, opt.q);
    std::mt19937_64 rng(opt.seed);
    SearchResult result;
    for (int trial = 0; trial < opt.trials; ++trial) {
        auto order = pool;
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<std::vector<std::uint8_t>> kept;
        for (const auto& col : order) {
            kept.push_back(col);
            ++result.nodes;
            if (!check_property(code_from_columns(opt.n, opt.q, kept), opt.property, opt.t, opt.check).holds)
                kept.pop_back();
        }
        if (!result.best || static_cast<int>(kept.size()) > result.best->M())
            result.best = code_from_columns(opt.n, opt.q, kept);
    }
    return result;
}

/// Exhaustive maximum-size search by DFS over the column pool in
/// lexicographic order. All target properties are closed under taking
/// subcodes, so a prefix that already fails can be pruned. Only permitted at
/// desk scale (n*q <= 12); a run that exhausts the node budget reports its
/// best code flagged non-optimal.
inline SearchResult exhaustive_search(const SearchOptions& opt) {
    if (opt.n * opt.q > 12)
        throw std::invalid_argument("exhaustive_search: only supported for n*q <= 12");
    const auto pool = all_columns(opt.n, opt.q);
    SearchResult result;
    result.exhaustive = true;
    std::vector<std::vector<std::uint8_t>> cur;
    bool budget_hit = false;

    auto dfs = [&](auto&& self, std::size_t next) -> void {
        if (budget_hit) return;
        if (!result.best || cur.size() > static_cast<std::size_t>(result.best->M()))
            if (!cur.empty()) result.best = code_from_columns(opt.n, opt.q, cur);
        // Not enough columns left to beat the best: prune.
        std::size_t have = result.best ? static_cast<std::size_t>(result.best->M()) : 0;
        if (cur.size() + (pool.size() - next) <= have) return;
        for (std::size_t j = next; j < pool.size(); ++j) {
            if (++result.nodes > opt.node_budget) {
                budget_hit = true;
                return;
            }
            cur.push_back(pool[j]);
            if (check_property(code_from_columns(opt.n, opt.q, cur), opt.property, opt.t, opt.check).holds)
                self(self, j + 1);
            cur.pop_back();
            if (budget_hit) return;
        }
    };
    dfs(dfs, 0);
    result.optimal = !budget_hit;
    return result;
}

}  // namespace acfp
