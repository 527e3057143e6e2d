#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "acfp/code.hpp"
#include "acfp/descend.hpp"

namespace acfp {

/// Enumeration guards shared by all brute-force checkers. Exceeding a budget
/// raises BudgetExceeded; a checker never silently reports "holds".
struct CheckOptions {
    std::uint64_t subset_budget = 10'000'000;       // total subset evaluations per call
    std::uint64_t parent_candidate_cap = 1ULL << 24;  // candidates per parent-set enumeration
};

/// Outcome of a brute-force property check. When the property fails, the
/// witness (one subset, or a pair for separability) re-checks against the
/// definition.
struct PropertyVerdict {
    bool holds = true;
    std::vector<IndexSet> witness;  // empty iff holds
    std::uint64_t checked_subsets = 0;
};

/// Empirical code rate log_q(M) / n.
inline double code_rate(const Code& code) {
    return std::log(static_cast<double>(code.M())) / std::log(static_cast<double>(code.q())) /
           static_cast<double>(code.n());
}

namespace detail {

/// Visits all non-empty subsets of {1..M} with size <= t in colexicographic
/// order (ascending characteristic bitmask). The callback receives members in
/// ascending order and returns false to stop early.
template <class F>
class ColexSubsets {
public:
    ColexSubsets(int M, int t, F& f) : f_(f) { done_ = !visit(M, t); }
    bool completed() const { return !done_; }

private:
    bool visit(int upper, int room) {
        for (int m = 1; m <= upper; ++m) {
            acc_desc_.push_back(m);
            emit_.assign(acc_desc_.rbegin(), acc_desc_.rend());
            if (!f_(emit_)) return false;
            if (room > 1 && !visit(m - 1, room - 1)) return false;
            acc_desc_.pop_back();
        }
        return true;
    }

    F& f_;
    std::vector<int> acc_desc_, emit_;
    bool done_ = false;
};

template <class F>
void for_each_subset_colex(int M, int t, F&& f) {
    ColexSubsets<F> run(M, t, f);
}

/// Per-call bitmask index: codeword masks per (position, symbol), plus
/// per-codeword descendant-code fingerprints.
struct PropsContext {
    explicit PropsContext(const Code& c) : code(c), words((c.M() + 63) / 64) {
        sym_mask.assign(static_cast<std::size_t>(c.n()),
                        std::vector<std::vector<std::uint64_t>>(
                            static_cast<std::size_t>(c.q()),
                            std::vector<std::uint64_t>(static_cast<std::size_t>(words), 0)));
        for (int i = 1; i <= c.n(); ++i)
            for (int j = 1; j <= c.M(); ++j) {
                auto& m = sym_mask[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(c.symbol(i, j))];
                m[static_cast<std::size_t>((j - 1) / 64)] |= 1ULL << ((j - 1) % 64);
            }
        col_key.reserve(static_cast<std::size_t>(c.M()));
        for (int j = 1; j <= c.M(); ++j) col_key.push_back(desc_key(c, j));
        all_mask.assign(static_cast<std::size_t>(words), 0);
        for (int j = 0; j < c.M(); ++j) all_mask[static_cast<std::size_t>(j / 64)] |= 1ULL << (j % 64);
    }

    /// Descendant code of S as per-position symbol masks.
    void desc_of(const std::vector<int>& S, std::vector<std::uint64_t>& out) const {
        out.assign(static_cast<std::size_t>(code.n()), 0);
        for (int i = 1; i <= code.n(); ++i)
            for (int j : S) out[static_cast<std::size_t>(i - 1)] |= 1ULL << code.symbol(i, j);
    }

    /// Codeword mask of all suspects of the given descendant code.
    void suspect_mask(const std::vector<std::uint64_t>& desc, std::vector<std::uint64_t>& out) const {
        out = all_mask;
        std::vector<std::uint64_t> row(static_cast<std::size_t>(words));
        for (int i = 1; i <= code.n(); ++i) {
            std::fill(row.begin(), row.end(), 0);
            std::uint64_t d = desc[static_cast<std::size_t>(i - 1)];
            while (d != 0) {
                const int s = __builtin_ctzll(d);
                d &= d - 1;
                const auto& m = sym_mask[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(s)];
                for (int w = 0; w < words; ++w) row[static_cast<std::size_t>(w)] |= m[static_cast<std::size_t>(w)];
            }
            for (int w = 0; w < words; ++w) out[static_cast<std::size_t>(w)] &= row[static_cast<std::size_t>(w)];
        }
    }

    static int popcount(const std::vector<std::uint64_t>& m) {
        int c = 0;
        for (auto w : m) c += __builtin_popcountll(w);
        return c;
    }

    /// Count of set bits in (a & b), stopping early past `limit`.
    int popcount_and(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                     int limit) const {
        int c = 0;
        for (int w = 0; w < words; ++w) {
            c += __builtin_popcountll(a[static_cast<std::size_t>(w)] & b[static_cast<std::size_t>(w)]);
            if (c > limit) return c;
        }
        return c;
    }

    std::vector<int> mask_to_indices(const std::vector<std::uint64_t>& m) const {
        std::vector<int> out;
        for (int w = 0; w < words; ++w) {
            std::uint64_t x = m[static_cast<std::size_t>(w)];
            while (x != 0) {
                out.push_back(w * 64 + __builtin_ctzll(x) + 1);
                x &= x - 1;
            }
        }
        return out;
    }

    const Code& code;
    int words;
    std::vector<std::vector<std::vector<std::uint64_t>>> sym_mask;
    std::vector<std::vector<std::uint64_t>> col_key;
    std::vector<std::uint64_t> all_mask;
};

struct Budget {
    std::uint64_t left;
    const char* who;
    void spend(std::uint64_t amount = 1) {
        if (amount > left)
            throw BudgetExceeded(std::string(who) + ": subset-evaluation budget exceeded");
        left -= amount;
    }
};

/// Intersection of all parent sets of S, computed by explicit enumeration of
/// the subsets of the suspect set (every parent set lies inside it).
/// `early_empty` stops as soon as the intersection can no longer meet
/// `must_keep` (pass the subset mask for a strong-separability check, or any
/// single always-present bit pattern for emptiness checks).
struct ParentScan {
    std::vector<std::uint64_t> intersection;  // over codeword indices
    std::uint64_t enumerated = 0;
};

inline ParentScan scan_parent_sets(const PropsContext& ctx, const std::vector<int>& S,
                                   const std::vector<std::uint64_t>& smask,
                                   const std::vector<std::uint64_t>& must_keep, Budget& budget,
                                   std::uint64_t candidate_cap) {
    const std::vector<int> X = ctx.mask_to_indices(smask);
    const std::size_t m = X.size();
    if (m >= 63 || (1ULL << m) > candidate_cap)
        throw BudgetExceeded("parent-set enumeration: suspect-set size " + std::to_string(m) +
                             " exceeds candidate cap");

    std::vector<std::uint64_t> target;
    ctx.desc_of(S, target);
    // Flatten per-position masks into one fingerprint comparable with col_key.
    const std::size_t kw = ctx.col_key.empty() ? 1 : ctx.col_key[0].size();
    std::vector<std::uint64_t> target_key(kw, 0);
    for (int i = 1; i <= ctx.code.n(); ++i) {
        std::uint64_t d = target[static_cast<std::size_t>(i - 1)];
        while (d != 0) {
            const int s = __builtin_ctzll(d);
            d &= d - 1;
            const std::size_t bit = static_cast<std::size_t>(i - 1) * ctx.code.q() + s;
            target_key[bit / 64] |= 1ULL << (bit % 64);
        }
    }

    ParentScan result;
    result.intersection = smask;  // parent sets all live inside the suspect set

    // DFS over include/exclude per suspect, OR-ing fingerprints incrementally.
    std::vector<std::uint64_t> member_mask(result.intersection.size(), 0);
    std::vector<std::uint64_t> key(kw, 0);
    bool alive = true;

    auto apply = [&](const std::vector<std::uint64_t>& members) {
        for (std::size_t w = 0; w < result.intersection.size(); ++w)
            result.intersection[w] &= members[w];
        for (std::size_t w = 0; w < result.intersection.size(); ++w)
            if ((result.intersection[w] & must_keep[w]) != must_keep[w]) {
                alive = false;
                return;
            }
    };

    auto dfs = [&](auto&& self, std::size_t k) -> void {
        if (!alive) return;
        if (k == m) {
            bool empty = true;
            for (auto w : member_mask)
                if (w != 0) empty = false;
            if (!empty) {
                budget.spend();
                ++result.enumerated;
                if (key == target_key) apply(member_mask);
            }
            return;
        }
        self(self, k + 1);  // exclude X[k]
        const int j = X[k];
        const std::size_t w = static_cast<std::size_t>((j - 1) / 64);
        member_mask[w] |= 1ULL << ((j - 1) % 64);
        std::vector<std::uint64_t> saved = key;
        const auto& ck = ctx.col_key[static_cast<std::size_t>(j - 1)];
        for (std::size_t kw2 = 0; kw2 < key.size(); ++kw2) key[kw2] |= ck[kw2];
        self(self, k + 1);  // include X[k]
        key = std::move(saved);
        member_mask[w] &= ~(1ULL << ((j - 1) % 64));
    };
    dfs(dfs, 0);
    return result;
}

inline std::vector<std::uint64_t> subset_mask(const PropsContext& ctx, const std::vector<int>& S) {
    std::vector<std::uint64_t> m(static_cast<std::size_t>(ctx.words), 0);
    for (int j : S) m[static_cast<std::size_t>((j - 1) / 64)] |= 1ULL << ((j - 1) % 64);
    return m;
}

inline IndexSet to_index_set(const std::vector<int>& S) { return IndexSet(S); }

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& k) const {
        std::size_t h = 1469598103934665603ULL;
        for (auto w : k) {
            h ^= static_cast<std::size_t>(w);
            h *= 1099511628211ULL;
        }
        return h;
    }
};

inline int clamp_t(const Code& code, int t, const char* who) {
    if (t < 1) throw std::invalid_argument(std::string(who) + ": t must be >= 1");
    return std::min(t, code.M());
}

}  // namespace detail

/// t-frameproof: the suspects of every colluder set of size <= t are exactly
/// that set: nobody outside it can be framed.
inline PropertyVerdict is_frameproof(const Code& code, int t, const CheckOptions& opts = {}) {
    const int tc = detail::clamp_t(code, t, "is_frameproof");
    detail::PropsContext ctx(code);
    detail::Budget budget{opts.subset_budget, "is_frameproof"};
    PropertyVerdict v;
    std::vector<std::uint64_t> desc, smask;
    detail::for_each_subset_colex(code.M(), tc, [&](const std::vector<int>& S) {
        budget.spend();
        ++v.checked_subsets;
        ctx.desc_of(S, desc);
        ctx.suspect_mask(desc, smask);
        if (smask != detail::subset_mask(ctx, S)) {
            v.holds = false;
            v.witness = {detail::to_index_set(S)};
            return false;
        }
        return true;
    });
    return v;
}

/// t-separable: distinct colluder sets of size <= t leave distinct
/// descendant codes. Descendant codes are hashed canonically, so the scan is
/// linear in the number of subsets.
inline PropertyVerdict is_separable(const Code& code, int t, const CheckOptions& opts = {}) {
    const int tc = detail::clamp_t(code, t, "is_separable");
    detail::PropsContext ctx(code);
    detail::Budget budget{opts.subset_budget, "is_separable"};
    PropertyVerdict v;
    std::unordered_map<std::vector<std::uint64_t>, std::vector<int>, detail::KeyHash> seen;
    std::vector<std::uint64_t> key;
    detail::for_each_subset_colex(code.M(), tc, [&](const std::vector<int>& S) {
        budget.spend();
        ++v.checked_subsets;
        key.assign(ctx.col_key[0].size(), 0);
        for (int j : S)
            for (std::size_t w = 0; w < key.size(); ++w)
                key[w] |= ctx.col_key[static_cast<std::size_t>(j - 1)][w];
        auto [it, fresh] = seen.emplace(key, S);
        if (!fresh) {
            v.holds = false;
            v.witness = {detail::to_index_set(it->second), detail::to_index_set(S)};
            return false;
        }
        return true;
    });
    return v;
}

/// t-secure code with list decoding: separable, and no colluder set of size
/// <= t has more than list_cap suspects.
inline PropertyVerdict is_scld(const Code& code, int t, long long list_cap,
                               const CheckOptions& opts = {}) {
    const int tc = detail::clamp_t(code, t, "is_scld");
    if (list_cap < 1) throw std::invalid_argument("is_scld: list_cap must be >= 1");
    detail::PropsContext ctx(code);
    detail::Budget budget{opts.subset_budget, "is_scld"};
    PropertyVerdict v;
    std::unordered_map<std::vector<std::uint64_t>, std::vector<int>, detail::KeyHash> seen;
    std::vector<std::uint64_t> desc, smask, key;
    detail::for_each_subset_colex(code.M(), tc, [&](const std::vector<int>& S) {
        budget.spend();
        ++v.checked_subsets;
        ctx.desc_of(S, desc);
        ctx.suspect_mask(desc, smask);
        if (detail::PropsContext::popcount(smask) > list_cap) {
            v.holds = false;
            v.witness = {detail::to_index_set(S)};
            return false;
        }
        key.assign(ctx.col_key[0].size(), 0);
        for (int j : S)
            for (std::size_t w = 0; w < key.size(); ++w)
                key[w] |= ctx.col_key[static_cast<std::size_t>(j - 1)][w];
        auto [it, fresh] = seen.emplace(key, S);
        if (!fresh) {
            v.holds = false;
            v.witness = {detail::to_index_set(it->second), detail::to_index_set(S)};
            return false;
        }
        return true;
    });
    return v;
}

/// Strongly t-separable: for every colluder set of size <= t, the
/// intersection of all parent sets (subsets with the same descendant code)
/// is exactly the colluder set.
inline PropertyVerdict is_strongly_separable(const Code& code, int t,
                                             const CheckOptions& opts = {}) {
    const int tc = detail::clamp_t(code, t, "is_strongly_separable");
    detail::PropsContext ctx(code);
    detail::Budget budget{opts.subset_budget, "is_strongly_separable"};
    PropertyVerdict v;
    std::vector<std::uint64_t> desc, smask;
    detail::for_each_subset_colex(code.M(), tc, [&](const std::vector<int>& S) {
        budget.spend();
        ++v.checked_subsets;
        ctx.desc_of(S, desc);
        ctx.suspect_mask(desc, smask);
        const auto smaskv = detail::subset_mask(ctx, S);
        const auto scan =
            detail::scan_parent_sets(ctx, S, smask, smaskv, budget, opts.parent_candidate_cap);
        if (scan.intersection != smaskv) {
            v.holds = false;
            v.witness = {detail::to_index_set(S)};
            return false;
        }
        return true;
    });
    return v;
}

/// t-SMIPPC: for every colluder set of size <= t, the intersection of all
/// parent sets is non-empty, i.e. someone is provably guilty.
inline PropertyVerdict is_smippc(const Code& code, int t, const CheckOptions& opts = {}) {
    const int tc = detail::clamp_t(code, t, "is_smippc");
    detail::PropsContext ctx(code);
    detail::Budget budget{opts.subset_budget, "is_smippc"};
    PropertyVerdict v;
    std::vector<std::uint64_t> desc, smask;
    const std::vector<std::uint64_t> keep_nothing(static_cast<std::size_t>(ctx.words), 0);
    detail::for_each_subset_colex(code.M(), tc, [&](const std::vector<int>& S) {
        budget.spend();
        ++v.checked_subsets;
        ctx.desc_of(S, desc);
        ctx.suspect_mask(desc, smask);
        const auto scan = detail::scan_parent_sets(ctx, S, smask, keep_nothing, budget,
                                                   opts.parent_candidate_cap);
        if (detail::PropsContext::popcount(scan.intersection) == 0) {
            v.holds = false;
            v.witness = {detail::to_index_set(S)};
            return false;
        }
        return true;
    });
    return v;
}

/// t-uniqueness descendant code: every colluder set of size <= t contains a
/// codeword holding a symbol no other suspect shares at some position.
inline PropertyVerdict has_udc(const Code& code, int t, const CheckOptions& opts = {}) {
    const int tc = detail::clamp_t(code, t, "has_udc");
    detail::PropsContext ctx(code);
    detail::Budget budget{opts.subset_budget, "has_udc"};
    PropertyVerdict v;
    std::vector<std::uint64_t> desc, smask;
    detail::for_each_subset_colex(code.M(), tc, [&](const std::vector<int>& S) {
        budget.spend();
        ++v.checked_subsets;
        ctx.desc_of(S, desc);
        ctx.suspect_mask(desc, smask);
        bool pinned = false;
        for (int c : S) {
            for (int i = 1; i <= code.n() && !pinned; ++i) {
                const auto& m =
                    ctx.sym_mask[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(code.symbol(i, c))];
                if (ctx.popcount_and(m, smask, 1) == 1) pinned = true;  // that one bit is c itself
            }
            if (pinned) break;
        }
        if (!pinned) {
            v.holds = false;
            v.witness = {detail::to_index_set(S)};
            return false;
        }
        return true;
    });
    return v;
}

}  // namespace acfp
