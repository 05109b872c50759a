#include "nctori/param.hpp"

#include <sstream>
#include <stdexcept>

namespace nctori {

ParamScalar ParamScalar::parameter(const std::string &name, const Rat &coeff) {
    ParamScalar s;
    s.set_coeff(name, coeff);
    return s;
}

void ParamScalar::set_coeff(const std::string &name, const Rat &value) {
    if (value == 0)
        coeffs_.erase(name);
    else
        coeffs_[name] = value;
}

Rat ParamScalar::coeff(const std::string &name) const {
    auto it = coeffs_.find(name);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

ParamScalar ParamScalar::operator+(const ParamScalar &other) const {
    ParamScalar r = *this;
    r += other;
    return r;
}

ParamScalar &ParamScalar::operator+=(const ParamScalar &other) {
    const_part_ += other.const_part_;
    for (const auto &[name, c] : other.coeffs_) set_coeff(name, coeff(name) + c);
    return *this;
}

ParamScalar ParamScalar::operator-(const ParamScalar &other) const { return *this + (-other); }

ParamScalar ParamScalar::operator-() const {
    ParamScalar r;
    r.const_part_ = -const_part_;
    for (const auto &[name, c] : coeffs_) r.coeffs_[name] = -c;
    return r;
}

ParamScalar ParamScalar::operator*(const Rat &s) const {
    ParamScalar r;
    if (s == 0) return r;
    r.const_part_ = const_part_ * s;
    for (const auto &[name, c] : coeffs_) r.coeffs_[name] = c * s;
    return r;
}

std::string ParamScalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (const_part_ != 0) {
        os << to_string(const_part_);
        first = false;
    }
    for (const auto &[name, c] : coeffs_) {
        if (!first) os << (sign(c) < 0 ? "-" : "+");
        else if (sign(c) < 0) os << "-";
        Rat a = ::abs(c);
        if (a != 1) os << to_string(a) << "*";
        os << name;
        first = false;
    }
    return os.str();
}

ParamMatrix::ParamMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

ParamMatrix ParamMatrix::from_rat(const RatMatrix &m) {
    ParamMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = ParamScalar(m.at(i, j));
    return r;
}

ParamMatrix ParamMatrix::from_int(const IntMatrix &m) {
    return from_rat(RatMatrix::from_int(m));
}

ParamMatrix ParamMatrix::scaled_parameter(const std::string &name, const RatMatrix &b) {
    ParamMatrix r(b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b.at(i, j) != 0) r.at(i, j) = ParamScalar::parameter(name, b.at(i, j));
    return r;
}

ParamMatrix ParamMatrix::transpose() const {
    ParamMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ParamMatrix ParamMatrix::operator+(const ParamMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix add: shape mismatch");
    ParamMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        r.entries_[k] = entries_[k] + other.entries_[k];
    return r;
}

ParamMatrix ParamMatrix::operator-(const ParamMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sub: shape mismatch");
    ParamMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        r.entries_[k] = entries_[k] - other.entries_[k];
    return r;
}

ParamMatrix ParamMatrix::operator*(const Rat &s) const {
    ParamMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] * s;
    return r;
}

bool ParamMatrix::operator==(const ParamMatrix &other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

bool ParamMatrix::is_skew() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

bool ParamMatrix::is_zero() const {
    for (const auto &e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

ParamMatrix ParamMatrix::congruence_by(const IntMatrix &a) const {
    if (rows_ != cols_ || a.rows() != rows_)
        throw std::invalid_argument("congruence_by: shape mismatch");
    const std::size_t n = rows_;
    // tmp = this * a
    ParamMatrix tmp(n, a.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            ParamScalar acc;
            for (std::size_t k = 0; k < n; ++k)
                if (a.at(k, j) != 0 && !at(i, k).is_zero()) acc += at(i, k) * Rat(a.at(k, j));
            tmp.at(i, j) = acc;
        }
    // out = a^t * tmp
    ParamMatrix out(a.cols(), a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            ParamScalar acc;
            for (std::size_t k = 0; k < n; ++k)
                if (a.at(k, i) != 0 && !tmp.at(k, j).is_zero()) acc += tmp.at(k, j) * Rat(a.at(k, i));
            out.at(i, j) = acc;
        }
    return out;
}

std::vector<ParamScalar> ParamMatrix::apply(const std::vector<Int> &x) const {
    if (x.size() != cols_) throw std::invalid_argument("apply: shape mismatch");
    std::vector<ParamScalar> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (x[j] != 0 && !at(i, j).is_zero()) y[i] += at(i, j) * Rat(x[j]);
    return y;
}

std::vector<std::string> ParamMatrix::parameter_names() const {
    std::set<std::string> names;
    for (const auto &e : entries_)
        for (const auto &[name, c] : e.coeffs()) names.insert(name);
    return {names.begin(), names.end()};
}

RatMatrix ParamMatrix::const_matrix() const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).const_part();
    return r;
}

RatMatrix ParamMatrix::coeff_matrix(const std::string &name) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).coeff(name);
    return r;
}

std::string ParamMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n" : "") << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
        os << "]";
    }
    return os.str();
}

} // namespace nctori
