#pragma once

#include <random>
#include <vector>

#include "acfp/code.hpp"
#include "acfp/props.hpp"

namespace acfp {

/// All q^n candidate columns in lexicographic order (first position most
/// significant). Guarded: refuses pools beyond 2^20 columns.
inline std::vector<std::vector<std::uint8_t>> all_columns(int n, int q) {
    if (n < 1 || q < 2) throw std::invalid_argument("all_columns: need n >= 1, q >= 2");
    double pool = 1.0;
    for (int i = 0; i < n; ++i) pool *= q;
    if (pool > static_cast<double>(1 << 20))
        throw std::invalid_argument("all_columns: column pool too large");
    std::vector<std::vector<std::uint8_t>> cols;
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(n), 0);
    while (true) {
        cols.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == q - 1) cur[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return cols;
}

inline Code code_from_columns(int n, int q, const std::vector<std::vector<std::uint8_t>>& cols) {
    std::vector<std::uint8_t> rows(static_cast<std::size_t>(n) * cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < n; ++i)
            rows[static_cast<std::size_t>(i) * cols.size() + j] = cols[j][static_cast<std::size_t>(i)];
    return Code(n, static_cast<int>(cols.size()), q, std::move(rows));
}

/// Uniform random (n, M, q) code with distinct columns, deterministic per rng
/// state. Throws if M exceeds the number of distinct columns.
inline Code random_code(int n, int M, int q, std::mt19937_64& rng) {
    double pool = 1.0;
    for (int i = 0; i < n && pool <= 1e9; ++i) pool *= q;
    if (static_cast<double>(M) > pool) throw std::invalid_argument("random_code: M exceeds q^n");
    std::uniform_int_distribution<int> sym(0, q - 1);
    std::vector<std::vector<std::uint8_t>> cols;
    while (static_cast<int>(cols.size()) < M) {
        std::vector<std::uint8_t> col(static_cast<std::size_t>(n));
        for (auto& s : col) s = static_cast<std::uint8_t>(sym(rng));
        if (std::find(cols.begin(), cols.end(), col) == cols.end()) cols.push_back(std::move(col));
    }
    return code_from_columns(n, q, cols);
}

/// Rejection-samples random codes until one passes has_udc(t).
inline Code random_udc_code(int n, int M, int q, int t, std::mt19937_64& rng, int max_tries = 10000,
                            const CheckOptions& opts = {}) {
    for (int k = 0; k < max_tries; ++k) {
        Code c = random_code(n, M, q, rng);
        if (has_udc(c, t, opts).holds) return c;
    }
    throw std::runtime_error("random_udc_code: no code passed has_udc within the try budget");
}

/// The q unit columns of length q: the simplest inner code, which turns any
/// q-ary code into a binary one while preserving its uniqueness structure.
inline Code identity_inner_code(int q) {
    std::vector<std::uint8_t> rows(static_cast<std::size_t>(q) * q, 0);
    for (int k = 0; k < q; ++k) rows[static_cast<std::size_t>(k) * q + k] = 1;
    return Code(q, q, 2, std::move(rows));
}

}  // namespace acfp
