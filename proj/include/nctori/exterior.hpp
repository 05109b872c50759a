#pragma once

#include <vector>

#include "nctori/matrix.hpp"

namespace nctori::exterior {

/// Lexicographic basis {e_{i_1} ^ ... ^ e_{i_l} : i_1 < ... < i_l} of the
/// l-th exterior power of Z^d, with subset <-> index conversions. Indices are
/// 0-based here; callers present 1-based index sets at the boundaries.
class WedgeBasis {
  public:
    WedgeBasis(unsigned d, unsigned l);

    unsigned d() const { return d_; }
    unsigned l() const { return l_; }
    std::size_t size() const { return size_; }

    std::size_t rank(const std::vector<unsigned> &subset) const;
    std::vector<unsigned> unrank(std::size_t r) const;

  private:
    unsigned d_, l_;
    std::size_t size_;
    std::vector<std::vector<unsigned long long>> choose_; // Pascal table
};

unsigned long long binomial(unsigned n, unsigned k);

/// Signed minor det(A[rows, cols]).
Int minor_det(const IntMatrix &a, const std::vector<unsigned> &rows,
              const std::vector<unsigned> &cols);

/// Matrix of the induced map on the l-th exterior power in the lexicographic
/// wedge basis; entries are the l x l minors of A. The default entry loop is
/// OpenMP-parallel; the serial variant is the reference used by tests and the
/// benchmark.
IntMatrix exterior_power_matrix(const IntMatrix &a, unsigned l);
IntMatrix exterior_power_matrix_serial(const IntMatrix &a, unsigned l);

/// Coordinate vector of e_S.
std::vector<Int> wedge_unit(const WedgeBasis &basis, const std::vector<unsigned> &subset);

/// Image of a wedge-coordinate vector under the induced map, computed by
/// expanding decomposables column by column (cheap for companion-like A).
std::vector<Int> apply_exterior(const IntMatrix &a, const WedgeBasis &basis,
                                const std::vector<Int> &v);

/// Coefficient of e_1 ^ ... ^ e_d in w1 ^ w2 (degrees l1 + l2 = d).
Int wedge_top_coefficient(const std::vector<Int> &w1, unsigned l1, const std::vector<Int> &w2,
                          unsigned l2, unsigned d);

/// Sign of the permutation sorting the concatenation (subset, complement).
int shuffle_sign(const std::vector<unsigned> &subset, unsigned d);

} // namespace nctori::exterior
