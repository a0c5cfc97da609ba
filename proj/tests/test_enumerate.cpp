#include <catch2/catch_amalgamated.hpp>

#include "roundtable/closed_form.hpp"
#include "roundtable/enumerate.hpp"

#include <map>
#include <random>
#include <stdexcept>

using namespace roundtable;

TEST_CASE("enumeration reproduces the exact spot values", "[enumerate]") {
    CHECK(enumerate_unmatched_probability(12) == make_rational(7, 64));
    CHECK(enumerate_unmatched_probability(2) == 0);
    CHECK(enumerate_unmatched_probability(11) == make_rational(161, 1408));
    CHECK(enumerate_all_matched_probability(8) == make_rational(5, 8));
    CHECK(enumerate_all_matched_probability(5) == 0);
    CHECK(enumerate_all_matched_probability(12) == make_rational(91, 256));
}

TEST_CASE("enumeration equals both closed forms for every n up to 14", "[enumerate][cross]") {
    for (int n = 1; n <= 14; ++n) {
        const EnumReport r = enumerate_report(n);
        CHECK(r.unmatched_probability == unmatched_probability(n));
        CHECK(r.perfect_probability == all_matched_probability(n));
        CHECK(r.total_strings == (std::uint64_t{1} << n));
        CHECK(r.counts.scanned == r.total_strings);
        CHECK(r.counts.regular_unique + r.counts.irregular_even + r.counts.irregular_odd ==
              r.total_strings);
        CHECK(r.counts.irregular_even + r.counts.irregular_odd == 2u);
    }
}

TEST_CASE("range tallies add up", "[enumerate]") {
    const EnumTally whole = enumerate_range(12, 0, 4096);
    const EnumTally left = enumerate_range(12, 0, 2048);
    const EnumTally right = enumerate_range(12, 2048, 4096);
    CHECK(left + right == whole);

    // all 8 strings of a 3-seat table: two regular ones leave seat 0 alone,
    // the two irregular ones carry weight 1/3 each
    const EnumTally t3 = enumerate_range(3, 0, 8);
    CHECK(t3.regular_unique == 6);
    CHECK(t3.irregular_odd == 2);
    CHECK(t3.irregular_even == 0);
    CHECK(t3.regular_unmatched_seat0 == 2);
    CHECK(t3.even_spaced == 0);
    CHECK(t3.perfect == 0);
    CHECK(enumerate_unmatched_probability(3) == make_rational(1, 3));

    const EnumTally t4 = enumerate_range(4, 0, 16);
    CHECK(t4.perfect == 16);  // every 4-seat string seats everyone

    CHECK_THROWS_AS(enumerate_range(12, 5, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_range(12, 0, 4097), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_range(0, 0, 0), std::invalid_argument);
}

TEST_CASE("random shard boundaries reduce to the monolithic tally", "[enumerate][property]") {
    std::mt19937_64 gen(20260816);
    for (int round = 0; round < 40; ++round) {
        const int n = 1 + static_cast<int>(gen() % 14);
        const std::uint64_t total = std::uint64_t{1} << n;
        std::vector<std::uint64_t> cuts{0, total};
        const int extra = static_cast<int>(gen() % 5);
        for (int i = 0; i < extra; ++i) cuts.push_back(gen() % (total + 1));
        std::sort(cuts.begin(), cuts.end());
        EnumTally combined;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            combined += enumerate_range(n, cuts[i], cuts[i + 1]);
        REQUIRE(combined == enumerate_range(n, 0, total));
    }
}

TEST_CASE("report is identical for every shard count", "[enumerate]") {
    const EnumReport base = enumerate_report(12, kDefaultEnumCap, 1);
    for (int shards : {2, 3, 5, 8, 64}) {
        const EnumReport r = enumerate_report(12, kDefaultEnumCap, shards);
        CHECK(r.counts == base.counts);
        CHECK(r.unmatched_probability == base.unmatched_probability);
        CHECK(r.perfect_probability == base.perfect_probability);
    }
}

TEST_CASE("perfect-outcome string counting", "[enumerate]") {
    CHECK(count_perfect_strings(2) == 4);
    CHECK(count_perfect_strings(4) == 16);
    CHECK(count_perfect_strings(10) == 484);
    for (int n = 2; n <= 16; n += 2) {
        const mpz_class expected = 2 * int_pow(3, static_cast<unsigned long>(n / 2)) - 2;
        CHECK(mpz_class(static_cast<long>(count_perfect_strings(n))) == expected);
    }
    CHECK_THROWS_AS(count_perfect_strings(7), std::invalid_argument);
}

TEST_CASE("stable-matching census histograms", "[enumerate]") {
    using hist = std::map<int, long long>;
    CHECK(stable_count_census(3) == hist{{0, 2}, {1, 6}});
    CHECK(stable_count_census(4) == hist{{1, 14}, {2, 2}});
    CHECK(stable_count_census(5) == hist{{0, 2}, {1, 30}});
    CHECK(stable_count_census(1) == hist{{0, 2}});
    CHECK(stable_count_census(2) == hist{{1, 4}});  // both pairings coincide at n=2
    for (int n = 3; n <= 10; ++n) {
        const hist h = stable_count_census(n);
        hist expected{{1, (1LL << n) - 2}};
        expected[n % 2 == 0 ? 2 : 0] = 2;
        CHECK(h == expected);
    }
}

TEST_CASE("enumeration caps are enforced", "[enumerate]") {
    CHECK_THROWS_AS(enumerate_report(25, kDefaultEnumCap), std::length_error);
    CHECK_THROWS_AS(enumerate_unmatched_probability(30), std::length_error);
    CHECK_THROWS_AS(count_perfect_strings(26), std::length_error);
    CHECK_THROWS_AS(stable_count_census(15), std::length_error);
    CHECK_THROWS_AS(stable_count_census(4, 3), std::length_error);  // caps are configuration,
    CHECK_NOTHROW(enumerate_matchings(17, 17));                     // in both directions
    CHECK_THROWS_AS(enumerate_report(0, kDefaultEnumCap), std::invalid_argument);
}
