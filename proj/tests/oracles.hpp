#pragma once

// Independent brute-force oracles for the property checkers and tracing
// helpers. Deliberately written against the raw definitions with plain
// set/map containers, no bitmasks, no hashing, no shared code with the
// library's optimized paths. Only usable at desk scale.

#include <map>
#include <set>
#include <vector>

#include "acfp/code.hpp"

namespace oracle {

using acfp::Code;

using Desc = std::vector<std::set<int>>;

inline Desc desc(const Code& code, const std::vector<int>& subset) {
    Desc d(static_cast<std::size_t>(code.n()));
    for (int i = 1; i <= code.n(); ++i)
        for (int j : subset) d[static_cast<std::size_t>(i - 1)].insert(code.symbol(i, j));
    return d;
}

inline std::vector<int> suspects(const Code& code, const Desc& d) {
    std::vector<int> out;
    for (int j = 1; j <= code.M(); ++j) {
        bool ok = true;
        for (int i = 1; i <= code.n() && ok; ++i)
            ok = d[static_cast<std::size_t>(i - 1)].count(code.symbol(i, j)) > 0;
        if (ok) out.push_back(j);
    }
    return out;
}

/// All non-empty subsets of {1..M} with size <= t, in no particular order.
inline std::vector<std::vector<int>> subsets_upto(int M, int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == t) return;
        for (int j = next; j <= M; ++j) {
            cur.push_back(j);
            self(self, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// All multisets over {1..M} of exactly the given size.
inline std::vector<std::map<int, long long>> multisets_of(int M, int size) {
    std::vector<std::map<int, long long>> out;
    std::map<int, long long> cur;
    auto rec = [&](auto&& self, int next, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (next > M) return;
        for (long long take = 0; take <= left; ++take) {
            if (take > 0) cur[next] = take;
            self(self, next + 1, left - static_cast<int>(take));
            cur.erase(next);
        }
    };
    rec(rec, 1, size);
    return out;
}

inline std::vector<std::vector<int>> parent_sets(const Code& code, const std::vector<int>& subset) {
    const Desc target = desc(code, subset);
    const std::vector<int> X = suspects(code, target);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == X.size()) {
            if (!cur.empty() && desc(code, cur) == target) out.push_back(cur);
            return;
        }
        self(self, k + 1);
        cur.push_back(X[k]);
        self(self, k + 1);
        cur.pop_back();
    };
    rec(rec, 0);
    for (auto& s : out) std::sort(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::set<int> intersect_parents(const Code& code, const std::vector<int>& subset) {
    const auto parents = parent_sets(code, subset);
    std::set<int> acc(parents.front().begin(), parents.front().end());
    for (const auto& p : parents) {
        std::set<int> keep;
        for (int j : p)
            if (acc.count(j)) keep.insert(j);
        acc = keep;
    }
    return acc;
}

/// Codewords of the subset holding a symbol nobody else among the suspects
/// shares at some position.
inline std::vector<int> uniquely_pinned(const Code& code, const std::vector<int>& subset) {
    const Desc d = desc(code, subset);
    const std::vector<int> X = suspects(code, d);
    std::vector<int> out;
    for (int c : subset) {
        bool pinned = false;
        for (int i = 1; i <= code.n() && !pinned; ++i) {
            int count = 0;
            for (int x : X)
                if (code.symbol(i, x) == code.symbol(i, c)) ++count;
            pinned = (count == 1);
        }
        if (pinned) out.push_back(c);
    }
    return out;
}

inline bool is_frameproof(const Code& code, int t) {
    for (const auto& S : subsets_upto(code.M(), std::min(t, code.M())))
        if (suspects(code, desc(code, S)) != S) return false;
    return true;
}

inline bool is_separable(const Code& code, int t) {
    const auto all = subsets_upto(code.M(), std::min(t, code.M()));
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b)
            if (desc(code, all[a]) == desc(code, all[b])) return false;
    return true;
}

inline bool is_scld(const Code& code, int t, long long list_cap) {
    if (!oracle::is_separable(code, t)) return false;
    for (const auto& S : subsets_upto(code.M(), std::min(t, code.M())))
        if (static_cast<long long>(suspects(code, desc(code, S)).size()) > list_cap) return false;
    return true;
}

inline bool is_strongly_separable(const Code& code, int t) {
    for (const auto& S : subsets_upto(code.M(), std::min(t, code.M())))
        if (intersect_parents(code, S) != std::set<int>(S.begin(), S.end())) return false;
    return true;
}

inline bool is_smippc(const Code& code, int t) {
    for (const auto& S : subsets_upto(code.M(), std::min(t, code.M())))
        if (intersect_parents(code, S).empty()) return false;
    return true;
}

inline bool has_udc(const Code& code, int t) {
    for (const auto& S : subsets_upto(code.M(), std::min(t, code.M())))
        if (uniquely_pinned(code, S).empty()) return false;
    return true;
}

}  // namespace oracle
