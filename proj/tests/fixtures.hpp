#pragma once

// Shared code fixtures for the test suites: the worked (4,5,2) example, the
// ternary/binary pair whose concatenation is spelled out in full, and small
// helpers for building words.

#include <string>

#include "acfp/code.hpp"

namespace fixtures {

// (4,5,2): five users, c5 all-zero; the running tracing example.
inline const std::string kExampleCodeText =
    "4 5 2\n"
    "0 0 0 1 0\n"
    "1 1 0 0 0\n"
    "1 0 1 0 0\n"
    "0 0 1 1 0\n";

// (2,6,3) outer code.
inline const std::string kOuterCodeText =
    "2 6 3\n"
    "0 0 1 1 2 2\n"
    "0 1 1 2 2 0\n";

// (2,3,2) inner code: one codeword per outer symbol.
inline const std::string kInnerCodeText =
    "2 3 2\n"
    "0 1 0\n"
    "0 0 1\n";

// Their concatenation, written out column by column.
inline const std::string kConcatCodeText =
    "4 6 2\n"
    "0 0 1 1 0 0\n"
    "0 0 0 0 1 1\n"
    "0 1 1 0 0 0\n"
    "0 0 0 1 1 0\n";

inline acfp::Code example_code() { return acfp::parse_code(kExampleCodeText); }
inline acfp::Code outer_code() { return acfp::parse_code(kOuterCodeText); }
inline acfp::Code inner_code() { return acfp::parse_code(kInnerCodeText); }
inline acfp::Code concat_code() { return acfp::parse_code(kConcatCodeText); }

inline acfp::GeneratedWord word(std::initializer_list<std::pair<long long, long long>> fracs) {
    std::vector<acfp::Rational> entries;
    for (const auto& [a, t] : fracs) entries.emplace_back(a, t);
    return acfp::GeneratedWord(std::move(entries));
}

}  // namespace fixtures
