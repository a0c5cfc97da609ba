#pragma once

// Exhaustive sweeps over all 2^n preference strings. These are the ground
// truth the closed forms are tested against, so the inner loop deliberately
// walks every string and asks the structural predicates directly -- no
// symmetry shortcuts. Speed comes from splitting the code range into shards;
// shard tallies are plain integer sums, so any shard layout reduces to
// bit-identical results.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "roundtable/parallel.hpp"
#include "roundtable/rational.hpp"
#include "roundtable/stability.hpp"

namespace roundtable {

inline constexpr int kDefaultEnumCap = 24;
inline constexpr int kDefaultCensusCap = 14;

struct EnumTally {
    std::uint64_t scanned = 0;
    std::uint64_t regular_unique = 0;    // regular strings (each has one stable matching)
    std::uint64_t irregular_even = 0;    // all-L / all-R at even n
    std::uint64_t irregular_odd = 0;     // all-L / all-R at odd n
    std::uint64_t regular_unmatched_seat0 = 0;
    std::uint64_t even_spaced = 0;       // regular strings whose stable matching is perfect
    std::uint64_t perfect = 0;           // strings whose stable outcome seats everyone

    EnumTally& operator+=(const EnumTally& o) {
        scanned += o.scanned;
        regular_unique += o.regular_unique;
        irregular_even += o.irregular_even;
        irregular_odd += o.irregular_odd;
        regular_unmatched_seat0 += o.regular_unmatched_seat0;
        even_spaced += o.even_spaced;
        perfect += o.perfect;
        return *this;
    }
    friend EnumTally operator+(EnumTally a, const EnumTally& b) { return a += b; }
    friend bool operator==(const EnumTally&, const EnumTally&) = default;
};

// Tally of the half-open code range [lo, hi) of n-seat preference strings.
inline EnumTally enumerate_range(int n, std::uint64_t lo, std::uint64_t hi) {
    if (n < 1 || n > 62) throw std::invalid_argument("enumerate_range needs 1 <= n <= 62");
    const std::uint64_t total = std::uint64_t{1} << n;
    if (lo > hi || hi > total) throw std::invalid_argument("enumerate_range: bad code range");
    EnumTally t;
    for (std::uint64_t code = lo; code < hi; ++code) {
        const Preferences p(n, code);
        ++t.scanned;
        if (is_regular(p)) {
            ++t.regular_unique;
            if (is_unmatched(p, 0)) ++t.regular_unmatched_seat0;
            if (everyone_matched(p)) {
                ++t.even_spaced;
                ++t.perfect;
            }
        } else if (n % 2 == 0) {
            ++t.irregular_even;
            ++t.perfect;  // both stable matchings of an even irregular string are perfect
        } else {
            ++t.irregular_odd;
        }
    }
    return t;
}

struct EnumReport {
    int n = 0;
    std::uint64_t total_strings = 0;
    Rational unmatched_probability;  // for a fixed seat, averaged over strings
    Rational perfect_probability;
    EnumTally counts;
};

namespace detail {
inline void require_enum_cap(const char* what, int n, int cap) {
    if (n < 1) throw std::invalid_argument(std::string(what) + " needs n >= 1");
    if (n > cap) throw std::length_error(std::string(what) + ": n exceeds the enumeration cap");
}
}  // namespace detail

// Full sweep of all 2^n strings, sharded across threads (shards == 1 forces a
// single in-line pass). A seat of an odd irregular string is the lonely one in
// 1 of n rotations; that exact 1/n weight joins the integer tallies here.
inline EnumReport enumerate_report(int n, int cap = kDefaultEnumCap, int shards = 0) {
    detail::require_enum_cap("enumerate_report", n, cap);
    const std::uint64_t total = std::uint64_t{1} << n;
    const int jobs = resolve_thread_count(shards);
    std::vector<EnumTally> parts(static_cast<std::size_t>(jobs));
    run_indexed_jobs(jobs, jobs, [&](std::int64_t j) {
        const std::uint64_t lo = total / jobs * j + std::min<std::uint64_t>(j, total % jobs);
        const std::uint64_t hi = total / jobs * (j + 1) + std::min<std::uint64_t>(j + 1, total % jobs);
        parts[static_cast<std::size_t>(j)] = enumerate_range(n, lo, hi);
    });
    EnumTally t;
    for (const EnumTally& part : parts) t += part;

    EnumReport r;
    r.n = n;
    r.total_strings = total;
    r.counts = t;
    const Rational weighted = Rational(static_cast<unsigned long>(t.regular_unmatched_seat0)) +
                              make_rational(static_cast<long>(t.irregular_odd), n);
    r.unmatched_probability = weighted / pow2(n);
    r.perfect_probability = Rational(static_cast<unsigned long>(t.perfect)) / pow2(n);
    return r;
}

inline Rational enumerate_unmatched_probability(int n, int cap = kDefaultEnumCap, int shards = 0) {
    return enumerate_report(n, cap, shards).unmatched_probability;
}

inline Rational enumerate_all_matched_probability(int n, int cap = kDefaultEnumCap,
                                                  int shards = 0) {
    return enumerate_report(n, cap, shards).perfect_probability;
}

// Number of n-seat strings whose stable outcome seats everyone; even n only
// (for odd n the count is 0 by parity).
inline long long count_perfect_strings(int n, int cap = kDefaultEnumCap) {
    detail::require_enum_cap("count_perfect_strings", n, cap);
    if (n % 2 != 0) throw std::invalid_argument("count_perfect_strings needs even n");
    return static_cast<long long>(enumerate_report(n, cap).counts.perfect);
}

// Histogram: number of stable matchings -> how many strings have that many,
// by brute force over every (string, matching) pair.
inline std::map<int, long long> stable_count_census(int n, int cap = kDefaultCensusCap) {
    detail::require_enum_cap("stable_count_census", n, cap);
    const std::vector<Matching> matchings = enumerate_matchings(n, cap);
    std::map<int, long long> hist;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t code = 0; code < total; ++code) {
        const Preferences p(n, code);
        int stable = 0;
        for (const Matching& m : matchings)
            if (is_stable_def(p, m)) ++stable;
        ++hist[stable];
    }
    return hist;
}

}  // namespace roundtable
