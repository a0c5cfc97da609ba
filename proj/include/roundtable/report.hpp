#pragma once

// Serialization shared by the CLI and the tests: fixed-order CSV columns and a
// JSON mirror with the same field names. Exact values print as "p/q", floats
// print with 12 significant digits, and output is byte-stable -- the only
// nondeterministic line is the optional meta header, which callers disable for
// golden comparisons.

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "roundtable/enumerate.hpp"
#include "roundtable/greedy.hpp"
#include "roundtable/montecarlo.hpp"
#include "roundtable/rational.hpp"

namespace roundtable {

inline std::string format_float12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string s = buf;
    if (s.find_first_not_of("-0123456789") == std::string::npos) s += ".0";
    return s;
}

struct SweepRow {
    int n = 0;
    std::string quantity;             // f, g, greedy_expected, greedy_per_person, greedy_perfect
    std::optional<Rational> exact;    // empty -> "NA" (sampled methods)
    double value = 0;
    std::string method;               // closed_form, enumeration, recursion, montecarlo
    std::int64_t samples = 0;         // 0 for exact methods
    std::optional<std::uint64_t> seed;
};

inline constexpr const char* kSweepCsvHeader = "n,quantity,exact,float,method,samples,seed";

inline std::string exact_or_na(const std::optional<Rational>& v) {
    return v ? to_fraction_string(*v) : std::string("NA");
}

inline std::string to_csv(const SweepRow& r) {
    std::string s = std::to_string(r.n) + ',' + r.quantity + ',' + exact_or_na(r.exact) + ',' +
                    format_float12(r.value) + ',' + r.method + ',' + std::to_string(r.samples) +
                    ',';
    if (r.seed) s += std::to_string(*r.seed);
    return s;
}

inline nlohmann::json to_json(const SweepRow& r) {
    nlohmann::json j{{"n", r.n},
                     {"quantity", r.quantity},
                     {"exact", exact_or_na(r.exact)},
                     {"float", r.value},
                     {"method", r.method},
                     {"samples", r.samples}};
    if (r.seed)
        j["seed"] = *r.seed;
    else
        j["seed"] = nullptr;
    return j;
}

inline constexpr const char* kSampleCsvHeader =
    "n,quantity,estimate,standard_error,exact,samples,seed,rng";

inline std::string to_csv(const SampleStats& st) {
    return std::to_string(st.n) + ',' + st.quantity + ',' + format_float12(st.estimate) + ',' +
           format_float12(st.standard_error) + ',' + exact_or_na(st.exact_reference) + ',' +
           std::to_string(st.samples) + ',' + std::to_string(st.seed) + ',' + st.rng_identifier;
}

inline nlohmann::json to_json(const SampleStats& st) {
    return nlohmann::json{{"n", st.n},
                          {"quantity", st.quantity},
                          {"estimate", st.estimate},
                          {"standard_error", st.standard_error},
                          {"exact", exact_or_na(st.exact_reference)},
                          {"samples", st.samples},
                          {"seed", st.seed},
                          {"rng", st.rng_identifier}};
}

// The greedy simulation reports through the same shapes, one row per statistic.
inline std::vector<SampleStats> as_sample_rows(const GreedySimStats& g) {
    SampleStats per;
    per.n = g.n;
    per.quantity = "greedy_per_person";
    per.samples = g.samples;
    per.estimate = g.per_person_unmatched;
    per.standard_error = g.per_person_se;
    per.exact_reference = std::nullopt;
    per.seed = g.seed;
    per.rng_identifier = g.rng_identifier;

    SampleStats perfect = per;
    perfect.quantity = "greedy_perfect";
    perfect.estimate = g.perfect_fraction;
    perfect.standard_error = g.perfect_se;
    return {per, perfect};
}

inline nlohmann::json to_json(const EnumReport& r) {
    return nlohmann::json{
        {"n", r.n},
        {"total_strings", r.total_strings},
        {"unmatched_probability", to_fraction_string(r.unmatched_probability)},
        {"unmatched_probability_float", to_double(r.unmatched_probability)},
        {"perfect_probability", to_fraction_string(r.perfect_probability)},
        {"perfect_probability_float", to_double(r.perfect_probability)},
        {"counts",
         {{"scanned", r.counts.scanned},
          {"regular_unique", r.counts.regular_unique},
          {"irregular_even", r.counts.irregular_even},
          {"irregular_odd", r.counts.irregular_odd},
          {"regular_unmatched_seat0", r.counts.regular_unmatched_seat0},
          {"even_spaced", r.counts.even_spaced},
          {"perfect", r.counts.perfect}}}};
}

}  // namespace roundtable
