#pragma once

#include <optional>
#include <vector>

#include "nctori/matrix.hpp"
#include "nctori/poly.hpp"

namespace nctori::exactla {

/// U * M * V = D with U, V unimodular and D diagonal, each diagonal entry
/// nonnegative and dividing the next.
struct SnfResult {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
};

/// Q-basis of the right null space of M, each vector in the reduced echelon
/// normal form (unit entry at its free coordinate). Empty iff M is injective.
std::vector<RatMatrix> rat_kernel(const RatMatrix &m);

inline std::vector<RatMatrix> rat_kernel(const IntMatrix &m) {
    return rat_kernel(RatMatrix::from_int(m));
}

/// Z-basis of {x : Mx = 0}. The kernel of an integer matrix is a saturated
/// sublattice, and the basis is normalized to content 1 with the first
/// nonzero coordinate positive.
std::vector<std::vector<Int>> int_kernel(const IntMatrix &m);

SnfResult smith_normal_form(const IntMatrix &m);

/// Z-basis of the full-rank lattice {x : Mx = 0 (mod modulus)}.
std::vector<std::vector<Int>> congruence_lattice(const IntMatrix &m, const Int &modulus);

/// Exact determinant (fraction-free elimination).
Int det(const IntMatrix &m);

/// Rank over Q.
std::size_t rank_q(const IntMatrix &m);
std::size_t rank_q(const RatMatrix &m);

/// Inverse of a matrix with det = +-1; throws on anything else.
IntMatrix inverse_unimodular(const IntMatrix &m);

/// Characteristic polynomial det(xI - M), monic of degree n.
IntPoly char_poly(const IntMatrix &m);

/// Whether x lies in the lattice spanned by the given basis vectors.
bool lattice_contains(const std::vector<std::vector<Int>> &basis, const std::vector<Int> &x);

/// |det| of the square matrix with the given columns (lattice index helper).
Int lattice_index(const std::vector<std::vector<Int>> &basis);

} // namespace nctori::exactla
