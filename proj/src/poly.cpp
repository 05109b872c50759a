#include "nctori/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace nctori {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::x_power_minus_one(unsigned long n) {
    std::vector<Int> c(n + 1, Int(0));
    c[0] = -1;
    c[n] = 1;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::constant(const Int &c) { return IntPoly(std::vector<Int>{c}); }

const Int &IntPoly::coeff(std::size_t k) const {
    static const Int zero(0);
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

IntPoly IntPoly::operator+(const IntPoly &other) const {
    std::vector<Int> c(std::max(coeffs_.size(), other.coeffs_.size()), Int(0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + other.coeff(k);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly &other) const {
    std::vector<Int> c(std::max(coeffs_.size(), other.coeffs_.size()), Int(0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) - other.coeff(k);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly &other) const {
    if (is_zero() || other.is_zero()) return IntPoly();
    std::vector<Int> c(coeffs_.size() + other.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::divexact(const IntPoly &divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("poly divexact: zero divisor");
    if (is_zero()) return IntPoly();
    if (degree() < divisor.degree())
        throw std::invalid_argument("poly divexact: division leaves a remainder");
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(coeffs_.size() - divisor.coeffs_.size() + 1, Int(0));
    const Int &lead = divisor.coeffs_.back();
    for (long k = static_cast<long>(quot.size()) - 1; k >= 0; --k) {
        const Int &top = rem[k + divisor.degree()];
        if (top == 0) continue;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) throw std::invalid_argument("poly divexact: division leaves a remainder");
        quot[k] = q;
        for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
            rem[k + j] -= q * divisor.coeffs_[j];
    }
    for (const auto &c : rem)
        if (c != 0) throw std::invalid_argument("poly divexact: division leaves a remainder");
    return IntPoly(std::move(quot));
}

Int IntPoly::eval(const Int &x) const {
    Int v = 0;
    for (long k = degree(); k >= 0; --k) v = v * x + coeffs_[k];
    return v;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Int &c = coeffs_[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1 || k == 0) os << a.get_str();
        if (k > 0) {
            os << "x";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

} // namespace nctori
