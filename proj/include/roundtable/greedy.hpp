#pragma once

// Randomized greedy conversations: while any two adjacent seats are both
// free, pick such an edge uniformly at random and let that pair talk. Exact
// expectations come from recurrences over the path (cutting the cycle at the
// first chosen edge), simulation provides the statistical cross-check.
//
// Path recurrences on m seats (u = expected seats left alone, q = probability
// nobody is left alone):
//   u(0) = 0, u(1) = 1, u(m) = (2/(m-1)) * sum_{j=0}^{m-2} u(j)   for m >= 2
//   q(0) = 1, q(1) = 0, q(m) = (1/(m-1)) * sum_{i=1}^{m-1} q(i-1) q(m-1-i)
// and a cycle of n seats behaves like a path of n-2 once its first edge talks.
//
// The u table is built in integer form: with A(m) = u(m) (m-1)! and B(k) =
// (sum_{j<=k} u(j)) k!, the recurrence becomes A(m) = 2 B(m-2), B(k) =
// k (B(k-1) + A(k)), bases A(0)=0, A(1)=1, B(0)=0, B(1)=1. That keeps the
// whole table free of rational canonicalization, which is what makes exact
// evaluation at m = 5000 take milliseconds instead of seconds; the rational
// u(m) = A(m)/(m-1)! is materialized per query.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "roundtable/parallel.hpp"
#include "roundtable/rational.hpp"
#include "roundtable/rng.hpp"

namespace roundtable {

class GreedyTable {
public:
    explicit GreedyTable(int max_path_seats, int max_perfect_seats = 0)
        : max_path_(max_path_seats < 1 ? 1 : max_path_seats),
          max_perfect_(max_perfect_seats < 1 ? 1 : max_perfect_seats) {
        scaled_unmatched_.resize(static_cast<std::size_t>(max_path_) + 1);
        std::vector<mpz_class> prefix(static_cast<std::size_t>(max_path_) + 1);
        scaled_unmatched_[0] = 0;
        scaled_unmatched_[1] = 1;
        prefix[0] = 0;
        prefix[1] = 1;
        for (int m = 2; m <= max_path_; ++m) {
            scaled_unmatched_[m] = 2 * prefix[m - 2];
            prefix[m] = m * (prefix[m - 1] + scaled_unmatched_[m]);
        }

        perfect_.resize(static_cast<std::size_t>(max_perfect_) + 1);
        perfect_[0] = 1;
        perfect_[1] = 0;
        for (int m = 2; m <= max_perfect_; ++m) {
            Rational acc = 0;
            for (int i = 1; i <= m - 1; ++i) acc += perfect_[i - 1] * perfect_[m - 1 - i];
            perfect_[m] = acc / (m - 1);
        }
    }

    int max_path_seats() const { return max_path_; }
    int max_perfect_seats() const { return max_perfect_; }

    // Expected number of seats left alone on a path of m seats.
    Rational path_expected_unmatched(int m) const {
        if (m < 0 || m > max_path_) throw std::out_of_range("path seats outside table range");
        if (m == 0) return Rational(0);
        return make_rational(scaled_unmatched_[static_cast<std::size_t>(m)],
                             factorial(static_cast<unsigned long>(m - 1)));
    }

    // Probability a path of m seats ends with nobody alone.
    const Rational& path_perfect_probability(int m) const {
        if (m < 0 || m > max_perfect_) throw std::out_of_range("path seats outside table range");
        return perfect_[static_cast<std::size_t>(m)];
    }

    Rational cycle_expected_unmatched(int n) const {
        if (n < 3) throw std::invalid_argument("cycle_expected_unmatched needs n >= 3");
        return path_expected_unmatched(n - 2);
    }

    // Odd cycles cannot seat everyone; they are rejected unless the caller
    // explicitly asks for the parity-forced exact 0.
    Rational cycle_perfect_probability(int n, bool allow_odd = false) const {
        if (n < 3) throw std::invalid_argument("cycle_perfect_probability needs n >= 3");
        if (n % 2 != 0) {
            if (!allow_odd)
                throw std::invalid_argument("cycle_perfect_probability: odd n has probability 0");
            return Rational(0);
        }
        return path_perfect_probability(n - 2);
    }

private:
    int max_path_;
    int max_perfect_;
    std::vector<mpz_class> scaled_unmatched_;  // A(m) = u(m) * (m-1)!
    std::vector<Rational> perfect_;
};

inline Rational path_expected_unmatched(int m) {
    if (m < 0) throw std::invalid_argument("path_expected_unmatched needs m >= 0");
    return GreedyTable(m).path_expected_unmatched(m);
}

inline Rational cycle_expected_unmatched(int n) {
    if (n < 3) throw std::invalid_argument("cycle_expected_unmatched needs n >= 3");
    return GreedyTable(n - 2).cycle_expected_unmatched(n);
}

inline Rational cycle_perfect_probability(int n, bool allow_odd = false) {
    if (n < 3) throw std::invalid_argument("cycle_perfect_probability needs n >= 3");
    return GreedyTable(1, n - 2).cycle_perfect_probability(n, allow_odd);
}

// --- simulation --------------------------------------------------------------

struct GreedySimStats {
    int n = 0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    std::string rng_identifier;
    double mean_unmatched = 0;        // average seats left alone per round
    double per_person_unmatched = 0;  // mean_unmatched / n
    double per_person_se = 0;
    double perfect_fraction = 0;      // rounds where nobody was left alone
    double perfect_se = 0;
};

namespace detail {

struct GreedySimTally {
    std::int64_t samples = 0;
    std::int64_t unmatched_sum = 0;
    std::int64_t unmatched_sq_sum = 0;
    std::int64_t perfect = 0;

    GreedySimTally& operator+=(const GreedySimTally& o) {
        samples += o.samples;
        unmatched_sum += o.unmatched_sum;
        unmatched_sq_sum += o.unmatched_sq_sum;
        perfect += o.perfect;
        return *this;
    }
};

inline GreedySimTally run_greedy_batch(int n, std::uint64_t seed, std::int64_t count) {
    std::mt19937_64 gen(seed);
    GreedySimTally t;
    std::vector<int> avail(static_cast<std::size_t>(n));  // edge i joins seats i, i+1
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (std::int64_t s = 0; s < count; ++s) {
        for (int e = 0; e < n; ++e) {
            avail[static_cast<std::size_t>(e)] = e;
            pos[static_cast<std::size_t>(e)] = e;
        }
        int live = n;
        int pairs = 0;
        const auto remove_edge = [&](int e) {
            const int at = pos[static_cast<std::size_t>(e)];
            if (at < 0) return;
            const int last = avail[static_cast<std::size_t>(live - 1)];
            avail[static_cast<std::size_t>(at)] = last;
            pos[static_cast<std::size_t>(last)] = at;
            pos[static_cast<std::size_t>(e)] = -1;
            --live;
        };
        while (live > 0) {
            const int e = avail[uniform_below(gen, static_cast<std::uint64_t>(live))];
            ++pairs;
            remove_edge(e);
            remove_edge(e == 0 ? n - 1 : e - 1);
            remove_edge(e == n - 1 ? 0 : e + 1);
        }
        const std::int64_t alone = n - 2 * pairs;
        ++t.samples;
        t.unmatched_sum += alone;
        t.unmatched_sq_sum += alone * alone;
        if (alone == 0) ++t.perfect;
    }
    return t;
}

}  // namespace detail

inline GreedySimStats simulate_greedy_cycle(int n, std::uint64_t seed, std::int64_t samples,
                                            int threads = 0) {
    if (n < 3) throw std::invalid_argument("simulate_greedy_cycle needs n >= 3");
    if (samples < 1) throw std::invalid_argument("simulate_greedy_cycle needs samples >= 1");

    const std::int64_t batches = (samples + kSamplesPerBatch - 1) / kSamplesPerBatch;
    std::vector<detail::GreedySimTally> parts(static_cast<std::size_t>(batches));
    run_indexed_jobs(threads, batches, [&](std::int64_t b) {
        const std::int64_t lo = b * kSamplesPerBatch;
        const std::int64_t cnt = std::min(kSamplesPerBatch, samples - lo);
        parts[static_cast<std::size_t>(b)] = detail::run_greedy_batch(
            n, batch_seed(seed, kSaltGreedy, static_cast<std::uint64_t>(b)), cnt);
    });
    detail::GreedySimTally t;
    for (const auto& part : parts) t += part;

    GreedySimStats st;
    st.n = n;
    st.samples = samples;
    st.seed = seed;
    st.rng_identifier = kRngIdentifier;
    const double s = static_cast<double>(samples);
    st.mean_unmatched = static_cast<double>(t.unmatched_sum) / s;
    st.per_person_unmatched = st.mean_unmatched / n;
    if (samples > 1) {
        const double mean_frac = st.per_person_unmatched;
        const double mean_sq = static_cast<double>(t.unmatched_sq_sum) / s / (double(n) * n);
        const double var = (mean_sq - mean_frac * mean_frac) * (s / (s - 1));
        st.per_person_se = var > 0 ? std::sqrt(var / s) : 0.0;
    }
    st.perfect_fraction = static_cast<double>(t.perfect) / s;
    st.perfect_se = std::sqrt(st.perfect_fraction * (1.0 - st.perfect_fraction) / s);
    return st;
}

}  // namespace roundtable
