#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "acfp/code.hpp"
#include "acfp/errors.hpp"

namespace acfp {

/// Spread-spectrum embedding parameters: host-signal length, watermark
/// scale, and the seed the noise-like basis is generated from.
struct EmbeddingParams {
    int dim = 64;
    double alpha = 0.1;
    std::uint64_t seed = 1;
};

/// n orthonormal noise-like signals of length dim, deterministic per seed.
/// Seeded Gaussian vectors, orthogonalized by two passes of modified
/// Gram-Schmidt (one pass leaves cross products near 1e-8 for large n).
inline std::vector<std::vector<double>> make_basis(int n, int dim, std::uint64_t seed) {
    if (n < 1 || dim < 1) throw std::invalid_argument("make_basis: n and dim must be >= 1");
    if (n > dim) throw std::invalid_argument("make_basis: need n <= dim");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<double>> basis(static_cast<std::size_t>(n),
                                           std::vector<double>(static_cast<std::size_t>(dim)));
    for (auto& u : basis)
        for (auto& v : u) v = gauss(rng);
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            for (std::size_t p = 0; p < k; ++p) {
                double dot = 0.0;
                for (int d = 0; d < dim; ++d)
                    dot += basis[k][static_cast<std::size_t>(d)] * basis[p][static_cast<std::size_t>(d)];
                for (int d = 0; d < dim; ++d)
                    basis[k][static_cast<std::size_t>(d)] -= dot * basis[p][static_cast<std::size_t>(d)];
            }
            double norm = 0.0;
            for (double v : basis[k]) norm += v * v;
            norm = std::sqrt(norm);
            if (norm < 1e-12) throw std::runtime_error("make_basis: degenerate draw");
            for (double& v : basis[k]) v /= norm;
        }
    }
    return basis;
}

/// Watermarked signal y = h + alpha * sum of c(i) * u_i over positions with
/// a 1 in the codeword.
inline std::vector<double> embed(const std::vector<double>& host,
                                 const std::vector<std::vector<double>>& basis,
                                 const std::vector<std::uint8_t>& codeword, double alpha) {
    if (basis.size() != codeword.size())
        throw std::invalid_argument("embed: codeword length does not match basis");
    for (auto s : codeword)
        if (s > 1) throw std::invalid_argument("embed: codeword must be binary");
    std::vector<double> y = host;
    for (std::size_t i = 0; i < codeword.size(); ++i) {
        if (codeword[i] == 0) continue;
        if (basis[i].size() != host.size()) throw std::invalid_argument("embed: dimension mismatch");
        for (std::size_t d = 0; d < y.size(); ++d) y[d] += alpha * basis[i][d];
    }
    return y;
}

/// Entrywise mean of the colluders' signals.
inline std::vector<double> collude_average(const std::vector<std::vector<double>>& signals) {
    if (signals.empty()) throw std::invalid_argument("collude_average: no signals");
    std::vector<double> y(signals.front().size(), 0.0);
    for (const auto& s : signals) {
        if (s.size() != y.size()) throw std::invalid_argument("collude_average: dimension mismatch");
        for (std::size_t d = 0; d < y.size(); ++d) y[d] += s[d];
    }
    for (double& v : y) v /= static_cast<double>(signals.size());
    return y;
}

/// Correlation detector: x(i) = <(y - h)/alpha, u_i>.
inline std::vector<double> extract(const std::vector<double>& y, const std::vector<double>& host,
                                   const std::vector<std::vector<double>>& basis, double alpha) {
    if (alpha <= 0) throw std::invalid_argument("extract: alpha must be positive");
    if (y.size() != host.size()) throw std::invalid_argument("extract: dimension mismatch");
    std::vector<double> x;
    x.reserve(basis.size());
    for (const auto& u : basis) {
        if (u.size() != host.size()) throw std::invalid_argument("extract: dimension mismatch");
        double dot = 0.0;
        for (std::size_t d = 0; d < u.size(); ++d) dot += (y[d] - host[d]) / alpha * u[d];
        x.push_back(dot);
    }
    return x;
}

/// Snaps each float to the unique rational a/t with t <= t_max within tol.
/// Refuses to guess: no candidate, or two distinct candidates, is an error.
/// Distinct rationals with denominators <= t differ by at least 1/t^2, so a
/// tolerance below 1/(2*t_max^2) cannot be ambiguous.
inline GeneratedWord rationalize(const std::vector<double>& xs, long long t_max, double tol) {
    if (t_max < 1) throw std::invalid_argument("rationalize: t_max must be >= 1");
    if (tol <= 0) throw std::invalid_argument("rationalize: tol must be positive");
    std::vector<Rational> entries;
    entries.reserve(xs.size());
    for (double v : xs) {
        bool found = false;
        Rational best;
        for (long long t = 1; t <= t_max; ++t) {
            const long long a = std::llround(v * static_cast<double>(t));
            if (a < 0 || a > t) continue;  // entries live in [0,1]
            if (std::abs(v - static_cast<double>(a) / static_cast<double>(t)) > tol) continue;
            Rational cand(a, t);
            if (found && cand != best)
                throw std::domain_error("rationalize: ambiguous snap (tolerance too large)");
            best = cand;
            found = true;
        }
        if (!found) throw std::domain_error("rationalize: no rational within tolerance");
        entries.push_back(best);
    }
    return GeneratedWord(std::move(entries));
}

/// Signals on disk: an 8-byte little-endian length header, then that many
/// little-endian 64-bit floats.
inline void write_signal(const std::string& path, const std::vector<double>& signal) {
    static_assert(sizeof(double) == 8);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("write_signal: cannot open " + path);
    const std::uint64_t len = signal.size();
    out.write(reinterpret_cast<const char*>(&len), 8);
    out.write(reinterpret_cast<const char*>(signal.data()),
              static_cast<std::streamsize>(signal.size() * sizeof(double)));
    if (!out) throw ParseError("write_signal: short write to " + path);
}

inline std::vector<double> read_signal(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("read_signal: cannot open " + path);
    std::uint64_t len = 0;
    in.read(reinterpret_cast<char*>(&len), 8);
    if (!in || len > (1ULL << 32)) throw ParseError("read_signal: bad header in " + path);
    std::vector<double> signal(len);
    in.read(reinterpret_cast<char*>(signal.data()), static_cast<std::streamsize>(len * sizeof(double)));
    if (!in) throw ParseError("read_signal: truncated data in " + path);
    return signal;
}

}  // namespace acfp
