#pragma once

// Monte Carlo estimates of the stable-outcome quantities, for validating the
// closed forms beyond the exhaustive-enumeration cap. One uniform preference
// string costs exactly one 64-bit draw; the only extra draw is the 1-in-n
// lottery deciding whether the fixed seat is the lonely one of an odd
// irregular string, resolved from the same stream.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "roundtable/closed_form.hpp"
#include "roundtable/parallel.hpp"
#include "roundtable/rng.hpp"
#include "roundtable/stability.hpp"

namespace roundtable {

struct SampleStats {
    int n = 0;
    std::string quantity;  // "f" (seat unmatched) or "g" (everyone matched)
    std::int64_t samples = 0;
    double estimate = 0;
    double standard_error = 0;  // sqrt(p(1-p)/samples) at p = estimate
    std::optional<Rational> exact_reference;
    std::uint64_t seed = 0;
    std::string rng_identifier;
};

namespace detail {

template <class Indicator>
std::int64_t run_sample_batch(int n, std::uint64_t seed, std::int64_t count, Indicator&& hit) {
    std::mt19937_64 gen(seed);
    const std::uint64_t mask = seat_mask(n);
    std::int64_t hits = 0;
    for (std::int64_t s = 0; s < count; ++s) {
        const Preferences p(n, gen() & mask);
        if (hit(p, gen)) ++hits;
    }
    return hits;
}

template <class Indicator>
SampleStats sample_indicator(int n, std::uint64_t seed, std::int64_t samples, int threads,
                             std::uint64_t salt, Indicator&& hit) {
    if (n < 1 || n > kMaxSeats)
        throw std::invalid_argument("sampling needs 1 <= n <= 64");
    if (samples < 1) throw std::invalid_argument("sampling needs samples >= 1");
    const std::int64_t batches = (samples + kSamplesPerBatch - 1) / kSamplesPerBatch;
    std::vector<std::int64_t> parts(static_cast<std::size_t>(batches), 0);
    run_indexed_jobs(threads, batches, [&](std::int64_t b) {
        const std::int64_t lo = b * kSamplesPerBatch;
        const std::int64_t cnt = std::min(kSamplesPerBatch, samples - lo);
        parts[static_cast<std::size_t>(b)] =
            run_sample_batch(n, batch_seed(seed, salt, static_cast<std::uint64_t>(b)), cnt, hit);
    });
    std::int64_t hits = 0;
    for (std::int64_t h : parts) hits += h;

    SampleStats st;
    st.n = n;
    st.samples = samples;
    st.seed = seed;
    st.rng_identifier = kRngIdentifier;
    st.estimate = static_cast<double>(hits) / static_cast<double>(samples);
    st.standard_error =
        std::sqrt(st.estimate * (1.0 - st.estimate) / static_cast<double>(samples));
    return st;
}

}  // namespace detail

// Estimate of the probability that seat 0 is unmatched in the stable outcome.
// Regular string: the even/even scan-distance test. Irregular string: never
// unmatched at even n; at odd n exactly one rotation-symmetric seat is alone,
// so seat 0 is it with probability 1/n.
inline SampleStats sample_unmatched_probability(int n, std::uint64_t seed, std::int64_t samples,
                                                int threads = 0) {
    SampleStats st = detail::sample_indicator(
        n, seed, samples, threads, kSaltUnmatched,
        [](const Preferences& p, std::mt19937_64& gen) {
            if (is_regular(p)) return is_unmatched(p, 0);
            if (p.n % 2 == 0) return false;
            return uniform_below(gen, static_cast<std::uint64_t>(p.n)) == 0;
        });
    st.quantity = "f";
    st.exact_reference = unmatched_probability(n);
    return st;
}

// Estimate of the probability that the stable outcome seats everyone.
inline SampleStats sample_all_matched_probability(int n, std::uint64_t seed, std::int64_t samples,
                                                  int threads = 0) {
    SampleStats st = detail::sample_indicator(
        n, seed, samples, threads, kSaltAllMatched,
        [](const Preferences& p, std::mt19937_64&) {
            if (is_regular(p)) return everyone_matched(p);
            return p.n % 2 == 0;
        });
    st.quantity = "g";
    st.exact_reference = all_matched_probability(n);
    return st;
}

}  // namespace roundtable
