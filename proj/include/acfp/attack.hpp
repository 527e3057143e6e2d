#pragma once

#include <stdexcept>
#include <vector>

#include "acfp/code.hpp"

namespace acfp {

namespace detail {

inline void check_indices(const Code& code, const IndexSet& s, const char* who) {
    if (s.empty()) throw std::invalid_argument(std::string(who) + ": empty colluder set");
    if (s.indices().back() > code.M())
        throw std::invalid_argument(std::string(who) + ": codeword index exceeds M");
}

inline GeneratedWord word_from_big(std::vector<BigRational> values) {
    std::vector<Rational> entries;
    entries.reserve(values.size());
    for (auto& v : values) entries.push_back(Rational::from_big(v));
    return GeneratedWord(std::move(entries));
}

}  // namespace detail

/// Exact averaging attack: entry i is (sum of c_j(i) over colluders) / |colluders|,
/// reduced, with zero entries canonicalized to 0/1.
inline GeneratedWord averaging_attack(const Code& code, const IndexSet& colluders) {
    detail::check_indices(code, colluders, "averaging_attack");
    const Int t = static_cast<long long>(colluders.size());
    std::vector<BigRational> values;
    values.reserve(static_cast<std::size_t>(code.n()));
    for (int i = 1; i <= code.n(); ++i) {
        Int sum = 0;
        for (int j : colluders) sum += code.symbol(i, j);
        values.emplace_back(sum, t);
    }
    return detail::word_from_big(std::move(values));
}

/// Averaging attack over a multiset of codewords: entry i is
/// (sum of r_j * d_j(i)) / (sum of r_j).
inline GeneratedWord multiset_averaging_attack(const Code& code, const CodewordMultiset& colluders) {
    if (colluders.empty()) throw std::invalid_argument("multiset_averaging_attack: empty multiset");
    if (colluders.counts().rbegin()->first > code.M())
        throw std::invalid_argument("multiset_averaging_attack: codeword index exceeds M");
    const Int t = colluders.size();
    std::vector<BigRational> values;
    values.reserve(static_cast<std::size_t>(code.n()));
    for (int i = 1; i <= code.n(); ++i) {
        Int sum = 0;
        for (const auto& [j, r] : colluders.counts()) sum += Int(r) * code.symbol(i, j);
        values.emplace_back(sum, t);
    }
    return detail::word_from_big(std::move(values));
}

/// Generated word of the not-yet-traced colluders, re-derived from the
/// immutable ORIGINAL attack word and the full traced set:
///   residual = (t0*x - sum of c_j over traced) / (t0 - |traced|).
/// Never feed a previously-updated word back in: the update is only the
/// generated word of the remaining colluders when taken against the original.
/// Entries that land outside [0,1] signal inconsistent inputs (the traced
/// set is not a subset of the true colluders) and raise std::domain_error.
inline GeneratedWord residual_word(const GeneratedWord& original, long long t0,
                                   const IndexSet& traced, const Code& code) {
    if (original.n() != code.n())
        throw std::invalid_argument("residual_word: word length does not match code");
    if (static_cast<long long>(traced.size()) >= t0)
        throw std::invalid_argument("residual_word: traced set must be smaller than t0");
    if (!traced.empty() && traced.indices().back() > code.M())
        throw std::invalid_argument("residual_word: codeword index exceeds M");
    const Int remaining = t0 - static_cast<long long>(traced.size());
    std::vector<BigRational> values;
    values.reserve(static_cast<std::size_t>(code.n()));
    for (int i = 1; i <= code.n(); ++i) {
        BigRational v = BigRational(t0) * original.entry(i).big();
        for (int j : traced) v -= code.symbol(i, j);
        v /= BigRational(remaining);
        if (v < 0 || v > 1) throw std::domain_error("residual_word: entry outside [0,1]");
        values.push_back(std::move(v));
    }
    return detail::word_from_big(std::move(values));
}

/// residual_word generalized to multisets: each traced index is subtracted
/// as many times as its multiplicity.
inline GeneratedWord multiset_residual_word(const GeneratedWord& original, long long t0,
                                            const CodewordMultiset& traced, const Code& code) {
    if (original.n() != code.n())
        throw std::invalid_argument("multiset_residual_word: word length does not match code");
    if (traced.size() >= t0)
        throw std::invalid_argument("multiset_residual_word: traced multiset must be smaller than t0");
    if (!traced.empty() && traced.counts().rbegin()->first > code.M())
        throw std::invalid_argument("multiset_residual_word: codeword index exceeds M");
    const Int remaining = t0 - traced.size();
    std::vector<BigRational> values;
    values.reserve(static_cast<std::size_t>(code.n()));
    for (int i = 1; i <= code.n(); ++i) {
        BigRational v = BigRational(t0) * original.entry(i).big();
        for (const auto& [j, r] : traced.counts()) v -= Int(r) * code.symbol(i, j);
        v /= BigRational(remaining);
        if (v < 0 || v > 1) throw std::domain_error("multiset_residual_word: entry outside [0,1]");
        values.push_back(std::move(v));
    }
    return detail::word_from_big(std::move(values));
}

}  // namespace acfp
