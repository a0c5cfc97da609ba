#pragma once

// Closed forms for the two headline quantities over a uniformly random
// preference string on n seats:
//
//   unmatched_probability(n): probability a fixed seat ends up alone in the
//     stable outcome (counting each of the two perfect matchings of an even
//     irregular string as all-matched, and the lone seat of n == 1 as alone);
//   all_matched_probability(n): probability the stable outcome seats everyone.
//
// Both are exact rationals. The auxiliary terms below are the pieces the
// closed forms are assembled from; tests hold the assembly identities together
// with the independent exhaustive enumeration.

#include <cmath>
#include <stdexcept>

#include "roundtable/rational.hpp"

namespace roundtable {

enum class FormulaBranch { OddTotal, EvenTotal, OddZero, EvenFormula };

struct FormulaResult {
    int n = 0;
    Rational value;
    FormulaBranch branch = FormulaBranch::OddTotal;
};

// P(fixed seat unmatched):
//   odd n:  1/9 + (1/2)^n (2n/3 - 8/9 + 2/n)
//   even n: 1/9 - (1/2)^n (2n/3 - 8/9)
inline FormulaResult unmatched_probability_result(int n) {
    if (n < 1) throw std::invalid_argument("unmatched_probability needs n >= 1");
    const Rational ninth = make_rational(1, 9);
    if (n % 2 == 1) {
        const Rational corr =
            make_rational(2L * n, 3) - make_rational(8, 9) + make_rational(2, n);
        return {n, ninth + pow2(-n) * corr, FormulaBranch::OddTotal};
    }
    const Rational corr = make_rational(2L * n, 3) - make_rational(8, 9);
    return {n, ninth - pow2(-n) * corr, FormulaBranch::EvenTotal};
}

inline Rational unmatched_probability(int n) { return unmatched_probability_result(n).value; }

// P(everyone matched): 0 for odd n, (3^(n/2) - 1) / 2^(n-1) for even n.
inline FormulaResult all_matched_probability_result(int n) {
    if (n < 1) throw std::invalid_argument("all_matched_probability needs n >= 1");
    if (n % 2 == 1) return {n, Rational(0), FormulaBranch::OddZero};
    const mpz_class num = int_pow(3, static_cast<unsigned long>(n / 2)) - 1;
    return {n, make_rational(num, int_pow(2, static_cast<unsigned long>(n - 1))),
            FormulaBranch::EvenFormula};
}

inline Rational all_matched_probability(int n) { return all_matched_probability_result(n).value; }

// Regular-string contribution to the even case n = 2m, written as the raw
// double sum over the two scan distances: sum_{c=1}^{m-2} sum_{d=1}^{m-1-c}
// (1/4)^c (1/4)^d. Empty for m <= 2.
inline Rational regular_unmatched_double_sum(int m) {
    if (m < 1) throw std::invalid_argument("regular_unmatched_double_sum needs m >= 1");
    Rational total = 0;
    for (int c = 1; c <= m - 2; ++c)
        for (int d = 1; d <= m - 1 - c; ++d) total += pow2(-2L * (c + d));
    return total;
}

// The same double sum collapsed: 1/9 - (1/4)^m (4m/3 - 8/9).
inline Rational regular_unmatched_closed(int m) {
    if (m < 1) throw std::invalid_argument("regular_unmatched_closed needs m >= 1");
    const Rational corr = make_rational(4L * m, 3) - make_rational(8, 9);
    return make_rational(1, 9) - pow2(-2L * m) * corr;
}

// Odd n = 2m-1 correction where the two scans can wrap past each other:
// (m-1) (1/2)^(2m-2).
inline Rational odd_overlap_term(int m) {
    if (m < 1) throw std::invalid_argument("odd_overlap_term needs m >= 1");
    return (m - 1) * pow2(-(2L * m - 2));
}

// Irregular strings at odd n: both all-L and all-R leave exactly one seat
// alone, so a fixed seat is the lonely one with probability 2 (1/2)^n (1/n).
inline Rational irregular_odd_contribution(int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("irregular_odd_contribution needs odd n >= 1");
    return pow2(-(n - 1L)) / n;
}

// Expected number of seats left alone by the randomized greedy process that
// repeatedly starts a conversation on a uniformly random still-available edge:
// sum_{k=0}^{n-3} (-2)^k (n-2-k) / k!. An expected count, not a probability;
// divide by n for the per-seat probability.
inline Rational greedy_unmatched_expectation(int n) {
    if (n < 3) throw std::invalid_argument("greedy_unmatched_expectation needs n >= 3");
    Rational total = 0;
    Rational term = 1;  // (-2)^k / k!
    for (int k = 0; k <= n - 3; ++k) {
        if (k > 0) {
            term *= -2;
            term /= k;
        }
        total += term * (n - 2 - k);
    }
    return total;
}

inline Rational greedy_unmatched_probability(int n) {
    return greedy_unmatched_expectation(n) / n;
}

// Large-n limits of the per-seat unmatched probabilities, as IEEE doubles
// (correct to their full ~15.9 significant digits).
struct Limits {
    double stable_unmatched;  // 1/9
    double greedy_unmatched;  // e^-2
};

inline Limits limits() { return {1.0 / 9.0, std::exp(-2.0)}; }

}  // namespace roundtable
