#pragma once

#include <gmpxx.h>
#include <string>

namespace nctori {

// All arithmetic in this library is exact: integers are arbitrary-precision,
// rationals are kept in lowest terms with positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int &a, const Int &b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int &a, const Int &b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int abs(const Int &a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline int sign(const Int &a) { return mpz_sgn(a.get_mpz_t()); }
inline int sign(const Rat &a) { return mpq_sgn(a.get_mpq_t()); }

/// Quotient rounded to nearest (ties toward -inf); keeps remainders small
/// during Euclidean elimination.
Int div_round(const Int &a, const Int &b);

/// Floor division a/b.
Int div_floor(const Int &a, const Int &b);

/// Canonical rational from numerator/denominator (den != 0).
Rat make_rat(const Int &num, const Int &den);

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

/// r reduced modulo 2 into [0, 2).
Rat mod2(const Rat &r);

inline bool is_integer(const Rat &r) { return r.get_den() == 1; }

std::string to_string(const Int &a);

/// "num/den" in lowest terms; plain "num" when den == 1.
std::string to_string(const Rat &r);

Int parse_int(const std::string &s);

/// Accepts "a" or "a/b"; canonicalizes.
Rat parse_rat(const std::string &s);

} // namespace nctori
