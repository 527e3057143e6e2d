#pragma once

#include <optional>
#include <vector>

#include "acfp/attack.hpp"
#include "acfp/code.hpp"
#include "acfp/descend.hpp"

namespace acfp {

/// Result of a tracing run: either the recovered colluders, or a structured
/// failure ("the code does not satisfy the conditions of the algorithm").
struct TraceOutcome {
    enum class Status { success, conditions_violated };

    Status status = Status::conditions_violated;
    std::optional<IndexSet> colluders;        // set variant, present iff success
    std::optional<CodewordMultiset> multiset; // multiset variant, present iff success
    int iterations = 0;

    bool success() const { return status == Status::success; }

    static TraceOutcome failed(int iterations) {
        TraceOutcome o;
        o.status = Status::conditions_violated;
        o.iterations = iterations;
        return o;
    }
    static TraceOutcome succeeded(IndexSet set, int iterations) {
        TraceOutcome o;
        o.status = Status::success;
        o.colluders = std::move(set);
        o.iterations = iterations;
        return o;
    }
    static TraceOutcome succeeded(CodewordMultiset ms, int iterations) {
        TraceOutcome o;
        o.status = Status::success;
        o.multiset = std::move(ms);
        o.iterations = iterations;
        return o;
    }
};

/// Identifies contributors pinned by uniqueness: an index h is returned when
/// some position i has c_h(i) occurring exactly once among the suspects of R.
/// Such a symbol can only have been contributed by c_h itself, so on
/// R = desc(C0) every returned index belongs to C0.
/// An empty result is a valid return; callers treat it as condition failure.
inline IndexSet find_inter(const Code& code, const PositionSets& R) {
    const IndexSet X = suspects(code, R);
    IndexSet U;
    for (int i = 1; i <= code.n(); ++i) {
        std::vector<int> occurrences(static_cast<std::size_t>(code.q()), 0);
        for (int j : X) ++occurrences[static_cast<std::size_t>(code.symbol(i, j))];
        for (int j : X)
            if (occurrences[static_cast<std::size_t>(code.symbol(i, j))] == 1) U.insert(j);
    }
    return U;
}

/// Colluder count for binary attacks on codes whose descendant codes pin a
/// unique contributor: the largest reduced denominator in the word.
inline Int colluder_count_max(const GeneratedWord& x) {
    Int best = 1;
    for (const auto& e : x.entries())
        if (e.den() > best) best = e.den();
    return best;
}

/// Colluder count for attacks on concatenated codes: the least common
/// multiple of all reduced denominators.
inline Int colluder_count_lcm(const GeneratedWord& x) {
    Int l = 1;
    for (const auto& e : x.entries()) l = boost::multiprecision::lcm(l, e.den());
    return l;
}

/// Per-iteration record for callers that want to inspect a soft trace.
struct SoftTraceIteration {
    GeneratedWord residual;  // word the iteration worked on (first one is x itself)
    PositionSets desc;
    IndexSet suspects;
    IndexSet found;
};

struct SoftTraceLog {
    std::vector<SoftTraceIteration> iterations;
};

/// Soft tracing over a binary code. Determines the colluder count from the
/// word's denominators, then repeatedly: re-derive the residual word of the
/// untraced colluders from the original word, read off its descendant code,
/// and harvest the uniquely-pinned contributors. Succeeds when exactly t0
/// indices have accumulated.
inline TraceOutcome soft_trace(const Code& code, const GeneratedWord& x, long long t_cap,
                               SoftTraceLog* log = nullptr) {
    if (!code.binary()) throw std::invalid_argument("soft_trace: code must be binary");
    if (x.n() != code.n()) throw std::invalid_argument("soft_trace: word length does not match code");
    if (t_cap < 1) throw std::invalid_argument("soft_trace: t_cap must be >= 1");

    const Int t0_big = colluder_count_max(x);
    if (t0_big > t_cap) return TraceOutcome::failed(0);
    const long long t0 = t0_big.convert_to<long long>();

    IndexSet traced;
    int iterations = 0;
    while (static_cast<long long>(traced.size()) < t0) {
        ++iterations;
        std::optional<GeneratedWord> residual;
        try {
            residual = residual_word(x, t0, traced, code);
        } catch (const std::domain_error&) {
            return TraceOutcome::failed(iterations);  // residual left [0,1]: not a valid attack
        }

        const PositionSets R = desc_from_word(*residual);
        const IndexSet found = find_inter(code, R);
        if (log) log->iterations.push_back({*residual, R, suspects(code, R), found});
        if (found.empty()) return TraceOutcome::failed(iterations);
        const IndexSet next = traced.set_union(found);
        if (next.size() == traced.size()) return TraceOutcome::failed(iterations);  // no progress
        traced = next;
    }
    if (static_cast<long long>(traced.size()) != t0) return TraceOutcome::failed(iterations);
    return TraceOutcome::succeeded(traced, iterations);
}

/// Soft tracing for a multiset of codewords whose size is known to the
/// caller. Each pass identifies support codewords pinned by uniqueness and
/// subtracts one copy of each; repeated passes recover multiplicities.
inline TraceOutcome multiset_soft_trace(const Code& code, const GeneratedWord& x, long long size) {
    if (!code.binary()) throw std::invalid_argument("multiset_soft_trace: code must be binary");
    if (x.n() != code.n())
        throw std::invalid_argument("multiset_soft_trace: word length does not match code");
    if (size < 1) throw std::invalid_argument("multiset_soft_trace: size must be >= 1");

    CodewordMultiset traced;
    int iterations = 0;
    while (traced.size() < size) {
        ++iterations;
        std::optional<GeneratedWord> residual;
        try {
            residual = multiset_residual_word(x, size, traced, code);
        } catch (const std::domain_error&) {
            return TraceOutcome::failed(iterations);
        }

        const IndexSet found = find_inter(code, desc_from_word(*residual));
        if (found.empty()) return TraceOutcome::failed(iterations);
        if (traced.size() + static_cast<long long>(found.size()) > size)
            return TraceOutcome::failed(iterations);  // overshoot: conditions cannot hold
        for (int j : found) traced.add(j, 1);
    }
    return TraceOutcome::succeeded(traced, iterations);
}

/// Two-stage soft tracing over a concatenated code (outer q-ary, inner
/// binary, one inner codeword per outer symbol). The outer colluder count is
/// the lcm of the word's denominators. Each pass: re-derive the residual
/// word, trace every inner window as a multiset of the residual size,
/// reassemble the recovered symbols into outer position sets, and harvest
/// outer codewords pinned by uniqueness.
inline TraceOutcome two_stage_trace(const Code& outer, const Code& inner, const GeneratedWord& x,
                                    long long t_cap) {
    if (!inner.binary()) throw std::invalid_argument("two_stage_trace: inner code must be binary");
    if (inner.M() != outer.q())
        throw std::invalid_argument("two_stage_trace: inner code size must equal outer alphabet");
    if (t_cap < 1) throw std::invalid_argument("two_stage_trace: t_cap must be >= 1");
    const int n1 = outer.n();
    const int n2 = inner.n();
    if (x.n() != n1 * n2)
        throw std::invalid_argument("two_stage_trace: word length must be n1*n2");

    const Int t0_big = colluder_count_lcm(x);
    if (t0_big > t_cap) return TraceOutcome::failed(0);
    const long long t0 = t0_big.convert_to<long long>();

    IndexSet traced;
    int iterations = 0;
    while (static_cast<long long>(traced.size()) < t0) {
        ++iterations;
        const long long remaining = t0 - static_cast<long long>(traced.size());

        // Residual against the concatenated code, re-derived from the original x.
        std::vector<BigRational> resid(static_cast<std::size_t>(x.n()));
        for (int pos = 1; pos <= x.n(); ++pos) {
            BigRational v = BigRational(t0) * x.entry(pos).big();
            const int i = (pos - 1) / n2 + 1;  // outer position
            const int r = (pos - 1) % n2 + 1;  // inner position
            for (int j : traced) v -= inner.symbol(r, outer.symbol(i, j) + 1);
            v /= remaining;
            if (v < 0 || v > 1) return TraceOutcome::failed(iterations);
            resid[static_cast<std::size_t>(pos - 1)] = std::move(v);
        }

        // Inner stage: each window is the generated word of a multiset of
        // size `remaining` over the inner code.
        std::vector<std::uint64_t> outer_masks(static_cast<std::size_t>(n1), 0);
        for (int i = 1; i <= n1; ++i) {
            std::vector<Rational> window;
            window.reserve(static_cast<std::size_t>(n2));
            for (int r = 1; r <= n2; ++r)
                window.push_back(Rational::from_big(resid[static_cast<std::size_t>((i - 1) * n2 + r - 1)]));
            const TraceOutcome inner_outcome =
                multiset_soft_trace(inner, GeneratedWord(std::move(window)), remaining);
            if (!inner_outcome.success() || inner_outcome.multiset->size() != remaining)
                return TraceOutcome::failed(iterations);
            // Recovered inner index j stands for outer symbol j-1; multiplicities
            // are irrelevant to the descendant code.
            for (const auto& [j, mult] : inner_outcome.multiset->counts())
                outer_masks[static_cast<std::size_t>(i - 1)] |= 1ULL << (j - 1);
        }

        const IndexSet found = find_inter(outer, PositionSets(outer.q(), std::move(outer_masks)));
        if (found.empty()) return TraceOutcome::failed(iterations);
        const IndexSet next = traced.set_union(found);
        if (next.size() == traced.size()) return TraceOutcome::failed(iterations);
        traced = next;
    }
    if (static_cast<long long>(traced.size()) != t0) return TraceOutcome::failed(iterations);
    return TraceOutcome::succeeded(traced, iterations);
}

}  // namespace acfp
