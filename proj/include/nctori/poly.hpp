#pragma once

#include <vector>

#include "nctori/int_types.hpp"

namespace nctori {

/// Integer polynomial, coefficients ascending by degree, trailing zeros trimmed.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly x_power_minus_one(unsigned long n); // x^n - 1
    static IntPoly constant(const Int &c);

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    const Int &coeff(std::size_t k) const;
    const std::vector<Int> &coeffs() const { return coeffs_; }

    bool operator==(const IntPoly &other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const IntPoly &other) const { return !(*this == other); }

    IntPoly operator+(const IntPoly &other) const;
    IntPoly operator-(const IntPoly &other) const;
    IntPoly operator*(const IntPoly &other) const;

    /// Exact quotient; throws if the division leaves a remainder or the
    /// divisor is zero.
    IntPoly divexact(const IntPoly &divisor) const;

    Int eval(const Int &x) const;

    std::string str() const;

  private:
    std::vector<Int> coeffs_;
    void trim();
};

} // namespace nctori
