#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "nctori/matrix.hpp"

namespace nctori {

/// Element of Q + Q*theta_1 + ... for formal parameters assumed linearly
/// independent over Q together with 1. Zero coefficients are never stored.
class ParamScalar {
  public:
    ParamScalar() = default;
    ParamScalar(const Rat &c) : const_part_(c) {}
    ParamScalar(long c) : const_part_(c) {}

    static ParamScalar parameter(const std::string &name, const Rat &coeff = Rat(1));

    const Rat &const_part() const { return const_part_; }
    const std::map<std::string, Rat> &coeffs() const { return coeffs_; }
    Rat coeff(const std::string &name) const;

    bool is_zero() const { return const_part_ == 0 && coeffs_.empty(); }
    bool is_rational() const { return coeffs_.empty(); }
    bool is_integral() const { return coeffs_.empty() && nctori::is_integer(const_part_); }

    ParamScalar operator+(const ParamScalar &other) const;
    ParamScalar operator-(const ParamScalar &other) const;
    ParamScalar operator-() const;
    ParamScalar operator*(const Rat &s) const;
    ParamScalar &operator+=(const ParamScalar &other);

    bool operator==(const ParamScalar &other) const {
        return const_part_ == other.const_part_ && coeffs_ == other.coeffs_;
    }
    bool operator!=(const ParamScalar &other) const { return !(*this == other); }

    /// Rendering like "1/2+theta-2*mu"; "0" when zero.
    std::string str() const;

  private:
    Rat const_part_ = Rat(0);
    std::map<std::string, Rat> coeffs_;
    void set_coeff(const std::string &name, const Rat &value);
    friend class ParamMatrix;
};

/// Matrix with ParamScalar entries; carries the parametrized skew forms.
class ParamMatrix {
  public:
    ParamMatrix(std::size_t rows, std::size_t cols);

    static ParamMatrix from_rat(const RatMatrix &m);
    static ParamMatrix from_int(const IntMatrix &m);
    /// name * B for a rational matrix B.
    static ParamMatrix scaled_parameter(const std::string &name, const RatMatrix &b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    ParamScalar &at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const ParamScalar &at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    ParamMatrix transpose() const;
    ParamMatrix operator+(const ParamMatrix &other) const;
    ParamMatrix operator-(const ParamMatrix &other) const;
    ParamMatrix operator*(const Rat &s) const;
    bool operator==(const ParamMatrix &other) const;
    bool operator!=(const ParamMatrix &other) const { return !(*this == other); }

    bool is_skew() const;
    bool is_zero() const;

    /// A^t * this * A for an integer matrix A of matching shape.
    ParamMatrix congruence_by(const IntMatrix &a) const;

    std::vector<ParamScalar> apply(const std::vector<Int> &x) const;

    /// Sorted union of parameter names over all entries.
    std::vector<std::string> parameter_names() const;

    /// Matrix of constant parts.
    RatMatrix const_matrix() const;
    /// Matrix of coefficients of one parameter.
    RatMatrix coeff_matrix(const std::string &name) const;

    std::string str() const;

  private:
    std::size_t rows_, cols_;
    std::vector<ParamScalar> entries_;
};

} // namespace nctori
