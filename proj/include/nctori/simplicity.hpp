#pragma once

#include <optional>

#include "nctori/param.hpp"

namespace nctori::simplicity {

/// Outcome of the nondegeneracy test. A degenerate form carries a nonzero
/// integer witness x with Theta x integral: every parameter coefficient of
/// Theta x vanishes and the constant part lies in Z^d.
struct DegeneracyVerdict {
    bool nondegenerate;
    std::optional<std::vector<Int>> witness;
};

/// Lattice form of the nondegeneracy test for a skew form over
/// Q + Q*theta_1 + ...: degenerate iff some nonzero x in Z^d has Theta x in
/// Z^d, where the parameters are assumed linearly independent over Q
/// together with 1.
DegeneracyVerdict is_nondegenerate(const ParamMatrix &theta);

/// True iff no nontrivial power of A fixes a nonzero lattice vector;
/// requires A^order = I.
bool is_free_outside_origin(const IntMatrix &a, unsigned long order);

} // namespace nctori::simplicity
