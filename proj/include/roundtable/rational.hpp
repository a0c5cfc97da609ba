#pragma once

// Exact rational arithmetic used everywhere a probability or expectation is
// reported. All values stay canonical (lowest terms, positive denominator);
// doubles are derived views, never the source of truth.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace roundtable {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r;
    mpz_set(mpq_numref(r.get_mpq_t()), num.get_mpz_t());
    mpz_set(mpq_denref(r.get_mpq_t()), den.get_mpz_t());
    r.canonicalize();
    return r;
}

// 2^e as an exact rational; e may be negative.
inline Rational pow2(long e) {
    const Rational one = 1;
    Rational r;
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), one.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), one.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return r;
}

inline mpz_class int_pow(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline mpz_class factorial(unsigned long k) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

inline double to_double(const Rational& v) { return mpq_get_d(v.get_mpq_t()); }

// "p/q" in lowest terms; integers keep the explicit "/1" so the format is uniform.
inline std::string to_fraction_string(const Rational& v) {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace roundtable
