#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "nctori/int_types.hpp"

namespace nctori {

/// Dense matrix over arbitrary-precision integers, row-major.
class IntMatrix {
  public:
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols);
    static IntMatrix column(const std::vector<Int> &v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int &at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int &at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntMatrix transpose() const;
    std::vector<Int> col_vector(std::size_t j) const;

    bool operator==(const IntMatrix &other) const;
    bool operator!=(const IntMatrix &other) const { return !(*this == other); }

    IntMatrix operator+(const IntMatrix &other) const;
    IntMatrix operator-(const IntMatrix &other) const;
    IntMatrix operator*(const IntMatrix &other) const;
    IntMatrix operator-() const;

    std::vector<Int> apply(const std::vector<Int> &x) const;

    bool is_zero() const;
    bool is_identity() const;

    std::string str() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

/// Dense matrix over rationals in lowest terms.
class RatMatrix {
  public:
    RatMatrix(std::size_t rows, std::size_t cols);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_int(const IntMatrix &m);
    static RatMatrix column(const std::vector<Rat> &v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat &at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat &at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    RatMatrix transpose() const;
    std::vector<Rat> col_vector(std::size_t j) const;

    bool operator==(const RatMatrix &other) const;
    bool operator!=(const RatMatrix &other) const { return !(*this == other); }

    RatMatrix operator+(const RatMatrix &other) const;
    RatMatrix operator-(const RatMatrix &other) const;
    RatMatrix operator*(const RatMatrix &other) const;
    RatMatrix operator*(const Rat &s) const;

    bool is_zero() const;
    bool is_skew() const;

    /// lcm of entry denominators (>= 1).
    Int denominator_lcm() const;

    std::string str() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> entries_;
};

IntMatrix mat_mul(const IntMatrix &a, const IntMatrix &b);
IntMatrix mat_pow(const IntMatrix &a, unsigned long k);

/// Content (gcd of entries) of a vector; 0 for the zero vector.
Int content(const std::vector<Int> &v);

} // namespace nctori
