#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lat5 {

// All arithmetic in this project is exact: arbitrary-precision integers and
// rationals in lowest terms with positive denominator (gmp keeps both
// invariants after canonicalization).
using Int = mpz_class;
using Rat = mpq_class;

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// floor(sqrt(a)), a >= 0
inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int rat_floor(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }

inline Int rat_ceil(const Rat& r) { return ceil_div(r.get_num(), r.get_den()); }

// nearest integer, ties toward zero (used to re-center coset representatives)
inline Int rat_round(const Rat& r) {
    Int two_num = 2 * r.get_num();
    if (r >= 0) return floor_div(two_num + r.get_den(), 2 * r.get_den());
    return ceil_div(two_num - r.get_den(), 2 * r.get_den());
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool fits_slong(const Int& a) { return a.fits_slong_p(); }

}  // namespace lat5
