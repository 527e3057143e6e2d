#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "acfp/errors.hpp"
#include "acfp/rational.hpp"

namespace acfp {

/// Sorted duplicate-free set of 1-based codeword indices.
class IndexSet {
public:
    IndexSet() = default;

    explicit IndexSet(std::vector<int> indices) {
        std::sort(indices.begin(), indices.end());
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (indices[i] < 1) throw std::invalid_argument("IndexSet: indices are 1-based");
            if (i > 0 && indices[i] == indices[i - 1])
                throw std::invalid_argument("IndexSet: duplicate index " + std::to_string(indices[i]));
        }
        v_ = std::move(indices);
    }

    IndexSet(std::initializer_list<int> indices) : IndexSet(std::vector<int>(indices)) {}

    bool empty() const { return v_.empty(); }
    std::size_t size() const { return v_.size(); }
    bool contains(int j) const { return std::binary_search(v_.begin(), v_.end(), j); }

    void insert(int j) {
        if (j < 1) throw std::invalid_argument("IndexSet: indices are 1-based");
        auto it = std::lower_bound(v_.begin(), v_.end(), j);
        if (it == v_.end() || *it != j) v_.insert(it, j);
    }

    IndexSet set_union(const IndexSet& other) const {
        std::vector<int> out;
        std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out));
        IndexSet r;
        r.v_ = std::move(out);
        return r;
    }

    IndexSet set_difference(const IndexSet& other) const {
        std::vector<int> out;
        std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out));
        IndexSet r;
        r.v_ = std::move(out);
        return r;
    }

    bool subset_of(const IndexSet& other) const {
        return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
    }

    const std::vector<int>& indices() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.v_ == b.v_; }
    friend bool operator!=(const IndexSet& a, const IndexSet& b) { return a.v_ != b.v_; }
    friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.v_ < b.v_; }

private:
    std::vector<int> v_;
};

/// Multiset of 1-based codeword indices with positive multiplicities.
class CodewordMultiset {
public:
    CodewordMultiset() = default;

    void add(int index, long long mult = 1) {
        if (index < 1) throw std::invalid_argument("CodewordMultiset: indices are 1-based");
        if (mult < 1) throw std::invalid_argument("CodewordMultiset: multiplicity must be >= 1");
        counts_[index] += mult;
        size_ += mult;
    }

    bool empty() const { return counts_.empty(); }
    long long size() const { return size_; }
    long long mult_of(int index) const {
        auto it = counts_.find(index);
        return it == counts_.end() ? 0 : it->second;
    }

    /// Distinct indices present, ascending.
    IndexSet support() const {
        std::vector<int> s;
        s.reserve(counts_.size());
        for (const auto& [j, _] : counts_) s.push_back(j);
        return IndexSet(std::move(s));
    }

    const std::map<int, long long>& counts() const { return counts_; }

    friend bool operator==(const CodewordMultiset& a, const CodewordMultiset& b) {
        return a.counts_ == b.counts_;
    }
    friend bool operator!=(const CodewordMultiset& a, const CodewordMultiset& b) {
        return !(a == b);
    }

private:
    std::map<int, long long> counts_;
    long long size_ = 0;
};

/// Per-position non-empty symbol subsets of {0..q-1}, stored as bitmasks.
/// This is the explicit representation of a descendant code.
class PositionSets {
public:
    static constexpr int kMaxAlphabet = 64;

    PositionSets(int q, std::vector<std::uint64_t> masks) : q_(q), masks_(std::move(masks)) {
        if (q < 2 || q > kMaxAlphabet) throw std::invalid_argument("PositionSets: alphabet size out of range");
        const std::uint64_t limit = (q == 64) ? ~0ULL : ((1ULL << q) - 1);
        for (auto m : masks_) {
            if (m == 0) throw std::invalid_argument("PositionSets: empty position set");
            if ((m & ~limit) != 0) throw std::invalid_argument("PositionSets: symbol outside alphabet");
        }
    }

    int n() const { return static_cast<int>(masks_.size()); }
    int q() const { return q_; }

    /// Membership of symbol s in the set at 1-based position i.
    bool contains(int i, int s) const { return (mask(i) >> s) & 1ULL; }
    std::uint64_t mask(int i) const { return masks_.at(static_cast<std::size_t>(i - 1)); }
    int count(int i) const { return __builtin_popcountll(mask(i)); }

    /// Symbols at 1-based position i, ascending.
    std::vector<int> symbols(int i) const {
        std::vector<int> out;
        for (int s = 0; s < q_; ++s)
            if (contains(i, s)) out.push_back(s);
        return out;
    }

    friend bool operator==(const PositionSets& a, const PositionSets& b) {
        return a.q_ == b.q_ && a.masks_ == b.masks_;
    }
    friend bool operator!=(const PositionSets& a, const PositionSets& b) { return !(a == b); }

private:
    int q_;
    std::vector<std::uint64_t> masks_;
};

/// Length-n vector of exact rationals in [0,1] produced by an averaging attack.
class GeneratedWord {
public:
    explicit GeneratedWord(std::vector<Rational> entries) : entries_(std::move(entries)) {
        static const Rational one(1, 1);
        for (const auto& e : entries_)
            if (e > one) throw std::domain_error("GeneratedWord: entry outside [0,1]");
    }

    int n() const { return static_cast<int>(entries_.size()); }
    /// Entry at 1-based position i.
    const Rational& entry(int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<Rational>& entries() const { return entries_; }

    friend bool operator==(const GeneratedWord& a, const GeneratedWord& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const GeneratedWord& a, const GeneratedWord& b) { return !(a == b); }

private:
    std::vector<Rational> entries_;
};

/// An (n, M, q) code: n positions, M codewords over alphabet {0..q-1}, stored
/// as the incidence matrix (row i = position i across all codewords).
/// Codewords are addressed by 1-based column index; columns are pairwise
/// distinct. Immutable after construction.
class Code {
public:
    Code(int n, int M, int q, std::vector<std::uint8_t> row_major)
        : n_(n), M_(M), q_(q), symbols_(std::move(row_major)) {
        if (n < 1) throw std::invalid_argument("Code: n must be >= 1");
        if (M < 1) throw std::invalid_argument("Code: M must be >= 1");
        if (q < 2 || q > PositionSets::kMaxAlphabet)
            throw std::invalid_argument("Code: alphabet size must be in [2," +
                                        std::to_string(PositionSets::kMaxAlphabet) + "]");
        if (symbols_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(M))
            throw std::invalid_argument("Code: symbol array does not match n x M");
        for (auto s : symbols_)
            if (s >= q) throw std::invalid_argument("Code: symbol >= q");
        check_distinct_columns();
    }

    int n() const { return n_; }
    int M() const { return M_; }
    int q() const { return q_; }

    /// Symbol c_j(i): 1-based position i, 1-based codeword j.
    int symbol(int i, int j) const {
        if (i < 1 || i > n_) throw std::out_of_range("Code: position out of range");
        if (j < 1 || j > M_) throw std::out_of_range("Code: codeword index out of range");
        return symbols_[static_cast<std::size_t>(i - 1) * M_ + (j - 1)];
    }

    /// Codeword c_j as a symbol vector (top to bottom).
    std::vector<std::uint8_t> column(int j) const {
        std::vector<std::uint8_t> col(static_cast<std::size_t>(n_));
        for (int i = 1; i <= n_; ++i) col[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(symbol(i, j));
        return col;
    }

    bool binary() const { return q_ == 2; }

    friend bool operator==(const Code& a, const Code& b) {
        return a.n_ == b.n_ && a.M_ == b.M_ && a.q_ == b.q_ && a.symbols_ == b.symbols_;
    }
    friend bool operator!=(const Code& a, const Code& b) { return !(a == b); }

private:
    void check_distinct_columns() const {
        std::vector<std::vector<std::uint8_t>> cols;
        cols.reserve(static_cast<std::size_t>(M_));
        for (int j = 1; j <= M_; ++j) cols.push_back(column(j));
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) != cols.end())
            throw std::invalid_argument("Code: duplicate columns (codewords must be distinct)");
    }

    int n_, M_, q_;
    std::vector<std::uint8_t> symbols_;
};

/// Parses the external code text format: a header line "n M q", then n lines
/// of M space-separated symbols. Lines starting with '#' are ignored.
inline Code parse_code(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;      // blank
        if (line[first] == '#') continue;              // comment
        rows.push_back(line);
    }
    if (rows.empty()) throw ParseError("code text: missing header line");

    long long n = 0, M = 0, q = 0;
    {
        std::istringstream hs(rows[0]);
        std::string extra;
        if (!(hs >> n >> M >> q)) throw ParseError("code text: malformed header (expected \"n M q\")");
        if (hs >> extra) throw ParseError("code text: trailing tokens after header");
        if (n < 1 || M < 1 || q < 2) throw ParseError("code text: header values out of range");
        if (q > PositionSets::kMaxAlphabet) throw ParseError("code text: alphabet size too large");
    }
    if (static_cast<long long>(rows.size()) != n + 1)
        throw ParseError("code text: expected " + std::to_string(n) + " symbol rows, found " +
                         std::to_string(rows.size() - 1));

    std::vector<std::uint8_t> symbols;
    symbols.reserve(static_cast<std::size_t>(n * M));
    for (long long i = 1; i <= n; ++i) {
        std::istringstream rs(rows[static_cast<std::size_t>(i)]);
        long long v = 0;
        long long got = 0;
        while (rs >> v) {
            if (v < 0 || v >= q)
                throw ParseError("code text: symbol " + std::to_string(v) + " out of range at row " +
                                 std::to_string(i));
            symbols.push_back(static_cast<std::uint8_t>(v));
            ++got;
        }
        if (!rs.eof()) throw ParseError("code text: non-numeric token at row " + std::to_string(i));
        if (got != M)
            throw ParseError("code text: ragged row " + std::to_string(i) + " (expected " +
                             std::to_string(M) + " symbols, found " + std::to_string(got) + ")");
    }

    try {
        return Code(static_cast<int>(n), static_cast<int>(M), static_cast<int>(q), std::move(symbols));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("code text: ") + e.what());
    }
}

/// Canonical text form; parse_code(serialize_code(c)) == c.
inline std::string serialize_code(const Code& code) {
    std::ostringstream out;
    out << code.n() << ' ' << code.M() << ' ' << code.q() << '\n';
    for (int i = 1; i <= code.n(); ++i) {
        for (int j = 1; j <= code.M(); ++j) {
            if (j > 1) out << ' ';
            out << code.symbol(i, j);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace acfp
