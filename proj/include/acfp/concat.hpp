#pragma once

#include <vector>

#include "acfp/code.hpp"

namespace acfp {

/// Concatenation of a q-ary outer code with a binary inner code that has one
/// codeword per outer symbol: column j is the vertical stacking of the inner
/// codewords selected by the outer symbols (symbol k picks inner codeword
/// k+1). Produces an (n1*n2, M, 2) code.
inline Code concatenate(const Code& outer, const Code& inner) {
    if (!inner.binary()) throw std::invalid_argument("concatenate: inner code must be binary");
    if (inner.M() != outer.q())
        throw std::invalid_argument("concatenate: inner code must have exactly one codeword per outer symbol");
    const int n = outer.n() * inner.n();
    std::vector<std::uint8_t> rows(static_cast<std::size_t>(n) * outer.M());
    for (int i = 1; i <= outer.n(); ++i)
        for (int r = 1; r <= inner.n(); ++r) {
            const int pos = (i - 1) * inner.n() + r;  // 1-based row of the result
            for (int j = 1; j <= outer.M(); ++j)
                rows[static_cast<std::size_t>(pos - 1) * outer.M() + (j - 1)] =
                    static_cast<std::uint8_t>(inner.symbol(r, outer.symbol(i, j) + 1));
        }
    try {
        return Code(n, outer.M(), 2, std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("concatenate: ") + e.what());
    }
}

/// The i-th contiguous block of a length-(n1*n2) word, 1 <= i <= n1.
inline GeneratedWord window(const GeneratedWord& x, int n1, int i) {
    if (n1 < 1 || x.n() % n1 != 0)
        throw std::invalid_argument("window: word length must be divisible by n1");
    if (i < 1 || i > n1) throw std::out_of_range("window: block index out of range");
    const int n2 = x.n() / n1;
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(n2));
    for (int r = 1; r <= n2; ++r) entries.push_back(x.entry((i - 1) * n2 + r));
    return GeneratedWord(std::move(entries));
}

}  // namespace acfp
