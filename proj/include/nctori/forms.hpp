#pragma once

#include "nctori/param.hpp"

namespace nctori::forms {

/// Q-basis of the skew forms fixed by a congruence action, with formal
/// parameter names attached to the basis elements.
struct SkewFormSpace {
    std::size_t dim_ambient; // d
    std::vector<RatMatrix> basis;
    std::vector<std::string> parameters;

    std::size_t dimension() const { return basis.size(); }

    /// sum_i parameters[i] * basis[i]
    ParamMatrix generic_member() const;
};

/// Solves Theta = A^t Theta A over the upper-triangle coordinates
/// (row-major order (1,2),(1,3),...,(d-1,d)); basis comes out of the
/// reduced-echelon kernel, parameters named in basis order.
SkewFormSpace invariant_form_space(const IntMatrix &a);

/// Exact check A^t Theta A = Theta, i.e. membership in the isotropy group.
bool is_invariant(const IntMatrix &a, const ParamMatrix &theta);

/// sum_{k=0}^{order-1} (A^k)^t Theta' A^k; requires A^order = I.
ParamMatrix average_form(const IntMatrix &a, unsigned long order, const ParamMatrix &theta_prime);

/// theta * sum_k (C_n^k)^t (C_n^t - C_n) C_n^k with formal parameter "theta";
/// skew and invariant under the cyclotomic companion matrix by construction.
ParamMatrix canonical_nondegenerate_seed(unsigned long n);

/// The (p-1)x(p-1) constant-superdiagonal skew form whose superdiagonal
/// values (v_1, ..., v_{d-1}) satisfy v_j + v_{d+1-j} = 0 for j >= 2, with
/// free parameters theta0..theta_{(p-3)/2}.
ParamMatrix prime_form(unsigned long p);
ParamMatrix prime_form(unsigned long p, const std::vector<std::string> &params);

/// Toeplitz pattern plus the reflection relations above.
bool matches_prime_form(const ParamMatrix &theta);

/// True iff entries above the diagonal depend only on the offset j - i.
bool toeplitz_form_check(const ParamMatrix &theta);

/// True iff Theta - (A^{-1})^t Theta A^{-1} has integer entries and no
/// parameter content (membership in the extended symmetry group).
bool extended_symmetry_check(const IntMatrix &a, const ParamMatrix &theta);

} // namespace nctori::forms
