#pragma once

#include <json.hpp>

#include "acfp/code.hpp"
#include "acfp/props.hpp"
#include "acfp/trace.hpp"

namespace acfp {

using json = nlohmann::json;

namespace detail {

inline std::uint64_t to_u64(const Int& v, const char* who) {
    if (v < 0 || v > Int(~0ULL)) throw std::domain_error(std::string(who) + ": value out of range");
    return v.convert_to<std::uint64_t>();
}

}  // namespace detail

/// {"entries":[{"num":0,"den":1},...]}
inline json word_to_json(const GeneratedWord& x) {
    json entries = json::array();
    for (const auto& e : x.entries())
        entries.push_back({{"num", detail::to_u64(e.num(), "word_to_json")},
                           {"den", detail::to_u64(e.den(), "word_to_json")}});
    return json{{"entries", entries}};
}

inline GeneratedWord word_from_json(const json& j) {
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        throw ParseError("generated word: expected {\"entries\":[...]}");
    std::vector<Rational> entries;
    for (const auto& e : j["entries"]) {
        if (!e.is_object() || !e.contains("num") || !e.contains("den"))
            throw ParseError("generated word: each entry needs \"num\" and \"den\"");
        const auto num = e["num"], den = e["den"];
        if (!num.is_number_integer() || !den.is_number_integer())
            throw ParseError("generated word: num/den must be integers");
        if (num.get<long long>() < 0 || den.get<long long>() <= 0)
            throw ParseError("generated word: need num >= 0 and den >= 1");
        entries.emplace_back(num.get<long long>(), den.get<long long>());
    }
    try {
        return GeneratedWord(std::move(entries));
    } catch (const std::domain_error& e) {
        throw ParseError(std::string("generated word: ") + e.what());
    }
}

inline json index_set_to_json(const IndexSet& s) { return json(s.indices()); }

inline json multiset_to_json(const CodewordMultiset& m) {
    json out = json::array();
    for (const auto& [j, r] : m.counts()) out.push_back({{"index", j}, {"mult", r}});
    return out;
}

/// {"status":"success"|"conditions_violated","colluders":[...],"iterations":k};
/// the multiset variant reports colluders as [{"index":j,"mult":r},...].
inline json outcome_to_json(const TraceOutcome& o) {
    json j{{"status", o.success() ? "success" : "conditions_violated"},
           {"iterations", o.iterations}};
    if (o.colluders) j["colluders"] = index_set_to_json(*o.colluders);
    if (o.multiset) j["colluders"] = multiset_to_json(*o.multiset);
    return j;
}

inline json verdict_to_json(const PropertyVerdict& v) {
    json j{{"holds", v.holds}, {"checked_subsets", v.checked_subsets}};
    if (!v.witness.empty()) {
        json w = json::array();
        for (const auto& s : v.witness) w.push_back(index_set_to_json(s));
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

}  // namespace acfp
