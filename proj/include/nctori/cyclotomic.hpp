#pragma once

#include <optional>

#include "nctori/matrix.hpp"
#include "nctori/poly.hpp"

namespace nctori::cyclotomic {

/// n-th cyclotomic polynomial, monic of degree phi(n). Computed by exact
/// division of x^n - 1 by the product of the lower cyclotomic factors;
/// memoized.
IntPoly cyclotomic_poly(unsigned long n);

unsigned long euler_phi(unsigned long n);

/// Companion matrix of a monic polynomial with nonzero constant term:
/// ones on the subdiagonal, negated coefficients down the last column.
IntMatrix companion(const IntPoly &p);

/// Companion matrix of the n-th cyclotomic polynomial (order n in GL).
IntMatrix companion_cyclotomic(unsigned long n);

/// Least k <= cap with A^k = I, or nullopt. Pure iteration, no shortcuts.
std::optional<unsigned long> matrix_order(const IntMatrix &a, unsigned long cap = 10000);

/// Whether GL_n(Z) contains an element of order m: with m = prod p_i^{k_i},
/// the sum of (p_i - 1) p_i^{k_i - 1} must be <= n, discounted by 1 when the
/// 2-part of m is exactly 2.
bool order_realizable(unsigned long m, unsigned long n);

/// Prime factorization as (prime, exponent) pairs, ascending primes.
std::vector<std::pair<unsigned long, unsigned long>> factorize(unsigned long n);

} // namespace nctori::cyclotomic
