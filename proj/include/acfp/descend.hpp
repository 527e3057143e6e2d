#pragma once

#include <cstdint>
#include <vector>

#include "acfp/attack.hpp"
#include "acfp/code.hpp"

namespace acfp {

/// Descendant code of a subset: position i holds exactly the symbols that
/// appear among the subset's codewords at i.
inline PositionSets descendant(const Code& code, const IndexSet& subset) {
    detail::check_indices(code, subset, "descendant");
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(code.n()), 0);
    for (int i = 1; i <= code.n(); ++i)
        for (int j : subset) masks[static_cast<std::size_t>(i - 1)] |= 1ULL << code.symbol(i, j);
    return PositionSets(code.q(), std::move(masks));
}

/// Reads the descendant code straight off a binary-attack word:
/// {0} where x(i)=0, {1} where x(i)=1, {0,1} in between.
inline PositionSets desc_from_word(const GeneratedWord& x) {
    std::vector<std::uint64_t> masks;
    masks.reserve(static_cast<std::size_t>(x.n()));
    for (const auto& e : x.entries()) {
        if (e.is_zero())
            masks.push_back(0b01);
        else if (e.is_one())
            masks.push_back(0b10);
        else
            masks.push_back(0b11);
    }
    return PositionSets(2, std::move(masks));
}

/// Indices of the codewords consistent with R at every position: the users
/// who could have been framed by a colluder set with descendant code R.
inline IndexSet suspects(const Code& code, const PositionSets& R) {
    if (R.n() != code.n()) throw std::invalid_argument("suspects: dimension mismatch");
    if (R.q() > code.q()) throw std::invalid_argument("suspects: alphabet mismatch");
    std::vector<int> out;
    for (int j = 1; j <= code.M(); ++j) {
        bool ok = true;
        for (int i = 1; i <= code.n() && ok; ++i) ok = R.contains(i, code.symbol(i, j));
        if (ok) out.push_back(j);
    }
    return IndexSet(std::move(out));
}

inline constexpr std::uint64_t kDefaultParentCap = 1ULL << 24;

namespace detail {

/// Descendant code fingerprint: bit (i*q + s) set iff symbol s occurs at
/// position i. Small vector, one word in typical use.
inline std::vector<std::uint64_t> desc_key(const Code& code, int j) {
    const int q = code.q();
    const std::size_t words = (static_cast<std::size_t>(code.n()) * q + 63) / 64;
    std::vector<std::uint64_t> key(words, 0);
    for (int i = 1; i <= code.n(); ++i) {
        const std::size_t bit = static_cast<std::size_t>(i - 1) * q + code.symbol(i, j);
        key[bit / 64] |= 1ULL << (bit % 64);
    }
    return key;
}

inline void key_or(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t w = 0; w < a.size(); ++w) a[w] |= b[w];
}

}  // namespace detail

/// All subsets S of the code with descendant(S) == descendant(subset).
/// Enumeration runs over subsets of the suspect set only (every qualifying S
/// necessarily lies inside it), guarded by a cap on candidate count.
/// Results are sorted lexicographically.
inline std::vector<IndexSet> parent_sets(const Code& code, const IndexSet& subset,
                                         std::uint64_t candidate_cap = kDefaultParentCap) {
    detail::check_indices(code, subset, "parent_sets");
    const IndexSet X = suspects(code, descendant(code, subset));
    const std::size_t m = X.size();
    if (m >= 63 || (1ULL << m) > candidate_cap)
        throw BudgetExceeded("parent_sets: suspect-set size " + std::to_string(m) +
                             " exceeds enumeration cap");

    std::vector<std::vector<std::uint64_t>> keys;
    keys.reserve(m);
    for (int j : X) keys.push_back(detail::desc_key(code, j));

    std::vector<std::uint64_t> target(keys.empty() ? 0 : keys[0].size(), 0);
    for (int j : subset) detail::key_or(target, detail::desc_key(code, j));

    std::vector<IndexSet> out;
    const std::uint64_t top = 1ULL << m;
    for (std::uint64_t mask = 1; mask < top; ++mask) {
        std::vector<std::uint64_t> acc(target.size(), 0);
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
            detail::key_or(acc, keys[static_cast<std::size_t>(__builtin_ctzll(rest))]);
        if (acc != target) continue;
        std::vector<int> members;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
            members.push_back(X.indices()[static_cast<std::size_t>(__builtin_ctzll(rest))]);
        out.emplace_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace acfp
