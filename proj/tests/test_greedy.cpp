#include <catch2/catch_amalgamated.hpp>

#include "roundtable/closed_form.hpp"
#include "roundtable/greedy.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

using namespace roundtable;

namespace {

// Independent oracle: enumerate the greedy process itself. State is the set of
// already-matched seats; every still-available edge is chosen with equal
// probability and the expectations are averaged exactly.
struct ProcessDist {
    Rational expected_unmatched;
    Rational perfect;
};

ProcessDist greedy_process_oracle(int n, const std::vector<std::pair<int, int>>& edges) {
    std::map<std::uint32_t, ProcessDist> memo;
    std::function<ProcessDist(std::uint32_t)> rec = [&](std::uint32_t matched) -> ProcessDist {
        if (auto it = memo.find(matched); it != memo.end()) return it->second;
        std::vector<std::uint32_t> moves;
        for (const auto& [a, b] : edges) {
            const std::uint32_t both = (1u << a) | (1u << b);
            if ((matched & both) == 0) moves.push_back(matched | both);
        }
        ProcessDist d;
        if (moves.empty()) {
            const int alone = n - std::popcount(matched);
            d.expected_unmatched = alone;
            d.perfect = alone == 0 ? 1 : 0;
        } else {
            d.expected_unmatched = 0;
            d.perfect = 0;
            for (const std::uint32_t next : moves) {
                const ProcessDist sub = rec(next);
                d.expected_unmatched += sub.expected_unmatched;
                d.perfect += sub.perfect;
            }
            d.expected_unmatched /= static_cast<int>(moves.size());
            d.perfect /= static_cast<int>(moves.size());
        }
        memo.emplace(matched, d);
        return d;
    };
    return rec(0);
}

std::vector<std::pair<int, int>> path_edges(int m) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < m; ++i) e.emplace_back(i, i + 1);
    return e;
}

std::vector<std::pair<int, int>> cycle_edges(int n) {
    auto e = path_edges(n);
    if (n >= 3) e.emplace_back(n - 1, 0);
    return e;
}

Rational Q(long num, long den = 1) { return make_rational(num, den); }

}  // namespace

TEST_CASE("path table matches the exhaustive process oracle", "[greedy][oracle]") {
    const GreedyTable table(11, 11);
    for (int m = 0; m <= 11; ++m) {
        const ProcessDist d = greedy_process_oracle(m, path_edges(m));
        CHECK(table.path_expected_unmatched(m) == d.expected_unmatched);
        CHECK(table.path_perfect_probability(m) == d.perfect);
    }
}

TEST_CASE("cycle values match the exhaustive process oracle", "[greedy][oracle]") {
    const GreedyTable table(10, 10);
    for (int n = 3; n <= 12; ++n) {
        const ProcessDist d = greedy_process_oracle(n, cycle_edges(n));
        CHECK(table.cycle_expected_unmatched(n) == d.expected_unmatched);
        CHECK(table.cycle_perfect_probability(n, true) == d.perfect);
    }
}

TEST_CASE("known path expectations", "[greedy]") {
    CHECK(path_expected_unmatched(0) == Q(0));
    CHECK(path_expected_unmatched(1) == Q(1));
    CHECK(path_expected_unmatched(2) == Q(0));
    CHECK(path_expected_unmatched(3) == Q(1));
    CHECK(path_expected_unmatched(4) == Q(2, 3));
    CHECK(path_expected_unmatched(5) == Q(1));
    CHECK(path_expected_unmatched(6) == Q(16, 15));
    CHECK(path_expected_unmatched(7) == Q(11, 9));
    CHECK(path_expected_unmatched(8) == Q(142, 105));
}

TEST_CASE("known cycle values", "[greedy]") {
    CHECK(cycle_expected_unmatched(6) == Q(2, 3));
    CHECK(cycle_expected_unmatched(4) == Q(0));
    CHECK(cycle_expected_unmatched(3) == Q(1));
    CHECK(cycle_expected_unmatched(25) == greedy_unmatched_expectation(25));
    CHECK(cycle_perfect_probability(6) == Q(2, 3));
    CHECK(cycle_perfect_probability(4) == Q(1));
    CHECK(cycle_perfect_probability(8) == Q(7, 15));
}

TEST_CASE("table invariants and bounds", "[greedy]") {
    const GreedyTable table(40, 40);
    for (int m = 0; m <= 40; ++m) {
        const Rational u = table.path_expected_unmatched(m);
        CHECK(u >= 0);
        CHECK(u <= m);
        const Rational pp = table.path_perfect_probability(m);
        CHECK(pp >= 0);
        CHECK(pp <= 1);
        if (m % 2 == 1) CHECK(pp == 0);
    }
    CHECK(table.path_perfect_probability(0) == 1);
    CHECK(table.path_perfect_probability(1) == 0);
    CHECK(table.path_perfect_probability(2) == 1);
}

TEST_CASE("domain errors", "[greedy]") {
    CHECK_THROWS_AS(cycle_expected_unmatched(2), std::invalid_argument);
    CHECK_THROWS_AS(cycle_perfect_probability(5), std::invalid_argument);
    CHECK(cycle_perfect_probability(5, true) == Q(0));
    CHECK_THROWS_AS(path_expected_unmatched(-1), std::invalid_argument);
    const GreedyTable small(4, 4);
    CHECK_THROWS_AS(small.path_expected_unmatched(5), std::out_of_range);
    CHECK_THROWS_AS(small.path_perfect_probability(5), std::out_of_range);
}

TEST_CASE("per-seat expectation approaches e^-2 from the exact table", "[greedy][limit]") {
    const GreedyTable table(5000);
    const double target = limits().greedy_unmatched;
    double prev = 1.0;
    for (int m : {10, 100, 1000, 5000}) {
        const double frac = to_double(table.path_expected_unmatched(m)) / m;
        const double gap = std::abs(frac - target);
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("simulation is deterministic and thread-count independent", "[greedy][sim]") {
    const GreedySimStats a = simulate_greedy_cycle(6, 99, 70000, 1);
    const GreedySimStats b = simulate_greedy_cycle(6, 99, 70000, 8);
    CHECK(a.per_person_unmatched == b.per_person_unmatched);
    CHECK(a.perfect_fraction == b.perfect_fraction);
    CHECK(a.per_person_se == b.per_person_se);
    CHECK(a.mean_unmatched == b.mean_unmatched);
    CHECK(a.rng_identifier == kRngIdentifier);
    const GreedySimStats c = simulate_greedy_cycle(6, 100, 70000, 1);
    CHECK(a.perfect_fraction != c.perfect_fraction);  // the seed matters
}

TEST_CASE("simulation hits the exact values", "[greedy][sim]") {
    // 4-cycle: the second conversation always completes the matching
    const GreedySimStats four = simulate_greedy_cycle(4, 5, 20000);
    CHECK(four.per_person_unmatched == 0.0);
    CHECK(four.perfect_fraction == 1.0);

    // 3-cycle: exactly one seat is left out every single round
    const GreedySimStats three = simulate_greedy_cycle(3, 7, 100000);
    CHECK(three.mean_unmatched == 1.0);
    CHECK(three.per_person_unmatched == Catch::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(three.per_person_se == 0.0);

    // odd cycles can never seat everyone
    const GreedySimStats five = simulate_greedy_cycle(5, 11, 2000);
    CHECK(five.perfect_fraction == 0.0);

    const GreedySimStats six = simulate_greedy_cycle(6, 1, 200000);
    CHECK(std::abs(six.perfect_fraction - 2.0 / 3.0) < 4 * six.perfect_se);
    CHECK(std::abs(six.per_person_unmatched - 1.0 / 9.0) < 4 * six.per_person_se);

    CHECK_THROWS_AS(simulate_greedy_cycle(2, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(simulate_greedy_cycle(6, 1, 0), std::invalid_argument);
}

TEST_CASE("simulated frequencies track the exact recursion", "[greedy][sim][statistical]") {
    const GreedyTable table(10);
    for (int n : {3, 5, 6, 8, 12}) {
        const GreedySimStats st = simulate_greedy_cycle(n, 2026, 1000000);
        const double exact = to_double(table.cycle_expected_unmatched(n)) / n;
        const double slack = st.per_person_se > 0 ? 4 * st.per_person_se : 1e-12;
        CHECK(std::abs(st.per_person_unmatched - exact) < slack);
    }
}
