#include "nctori/forms.hpp"

#include <stdexcept>

#include "nctori/cyclotomic.hpp"
#include "nctori/exactla.hpp"

namespace nctori::forms {

namespace {

const char *kParamNames[] = {"theta", "mu", "nu", "rho", "sigma", "tau", "eta", "xi"};

std::string nth_param_name(std::size_t k) {
    if (k < sizeof(kParamNames) / sizeof(kParamNames[0])) return kParamNames[k];
    return "t" + std::to_string(k);
}

std::size_t triangle_index(std::size_t i, std::size_t j, std::size_t d) {
    // row-major position of (i, j), i < j, among the d(d-1)/2 pairs
    return i * d - i * (i + 1) / 2 + (j - i - 1);
}

} // namespace

ParamMatrix SkewFormSpace::generic_member() const {
    ParamMatrix m(dim_ambient, dim_ambient);
    for (std::size_t k = 0; k < basis.size(); ++k)
        m = m + ParamMatrix::scaled_parameter(parameters[k], basis[k]);
    return m;
}

SkewFormSpace invariant_form_space(const IntMatrix &a) {
    if (!a.is_square()) throw std::invalid_argument("invariant_form_space: matrix not square");
    Int d0 = exactla::det(a);
    if (d0 != 1 && d0 != -1)
        throw std::invalid_argument("invariant_form_space: matrix not unimodular");
    const std::size_t d = a.rows();
    const std::size_t m = d * (d - 1) / 2;
    if (m == 0) {
        // d = 1: the only skew form is 0
        return SkewFormSpace{d, {}, {}};
    }
    RatMatrix constraint(m, m);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            const std::size_t eq = triangle_index(i, j, d);
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = k + 1; l < d; ++l) {
                    Int coeff = a.at(k, i) * a.at(l, j) - a.at(l, i) * a.at(k, j);
                    if (k == i && l == j) coeff -= 1;
                    if (coeff != 0)
                        constraint.at(eq, triangle_index(k, l, d)) = Rat(coeff);
                }
        }
    std::vector<RatMatrix> kernel = exactla::rat_kernel(constraint);
    SkewFormSpace space{d, {}, {}};
    for (std::size_t b = 0; b < kernel.size(); ++b) {
        RatMatrix form(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                const Rat &v = kernel[b].at(triangle_index(i, j, d), 0);
                form.at(i, j) = v;
                form.at(j, i) = -v;
            }
        space.basis.push_back(std::move(form));
        space.parameters.push_back(nth_param_name(b));
    }
    return space;
}

bool is_invariant(const IntMatrix &a, const ParamMatrix &theta) {
    if (!a.is_square() || a.rows() != theta.rows() || theta.rows() != theta.cols())
        throw std::invalid_argument("is_invariant: shape mismatch");
    return theta.congruence_by(a) == theta;
}

ParamMatrix average_form(const IntMatrix &a, unsigned long order, const ParamMatrix &theta_prime) {
    if (!a.is_square() || a.rows() != theta_prime.rows())
        throw std::invalid_argument("average_form: shape mismatch");
    if (!theta_prime.is_skew()) throw std::domain_error("average_form: input form not skew");
    if (order == 0 || !mat_pow(a, order).is_identity())
        throw std::domain_error("average_form: A^order != I");
    ParamMatrix sum = theta_prime;
    ParamMatrix term = theta_prime;
    for (unsigned long k = 1; k < order; ++k) {
        term = term.congruence_by(a);
        sum = sum + term;
    }
    return sum;
}

ParamMatrix canonical_nondegenerate_seed(unsigned long n) {
    if (n < 3) throw std::invalid_argument("canonical_nondegenerate_seed: n must be >= 3");
    IntMatrix c = cyclotomic::companion_cyclotomic(n);
    IntMatrix seed = c.transpose() - c;
    IntMatrix sum = seed;
    IntMatrix power = IntMatrix::identity(c.rows());
    for (unsigned long k = 1; k < n; ++k) {
        power = mat_mul(power, c);
        sum = sum + mat_mul(power.transpose(), mat_mul(seed, power));
    }
    return ParamMatrix::scaled_parameter("theta", RatMatrix::from_int(sum));
}

ParamMatrix prime_form(unsigned long p) {
    if (p < 3) throw std::invalid_argument("prime_form: p must be an odd prime >= 3");
    std::vector<std::string> params((p - 1) / 2);
    for (std::size_t k = 0; k < params.size(); ++k) params[k] = "theta" + std::to_string(k);
    return prime_form(p, params);
}

ParamMatrix prime_form(unsigned long p, const std::vector<std::string> &params) {
    auto factors = cyclotomic::factorize(p);
    if (p < 3 || factors.size() != 1 || factors[0].second != 1)
        throw std::invalid_argument("prime_form: p must be an odd prime >= 3");
    const std::size_t d = p - 1;
    if (params.size() != d / 2)
        throw std::invalid_argument("prime_form: expected (p-1)/2 parameter names");
    std::vector<ParamScalar> v(d); // superdiagonal values v[1..d-1]
    v[1] = ParamScalar::parameter(params[0]);
    for (std::size_t j = 2; j <= d / 2; ++j) v[j] = ParamScalar::parameter(params[j - 1]);
    for (std::size_t j = d / 2 + 1; j < d; ++j) v[j] = -v[d + 1 - j];
    ParamMatrix theta(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            theta.at(i, j) = v[j - i];
            theta.at(j, i) = -v[j - i];
        }
    return theta;
}

bool toeplitz_form_check(const ParamMatrix &theta) {
    if (!theta.is_skew()) throw std::domain_error("toeplitz_form_check: form not skew");
    const std::size_t d = theta.rows();
    for (std::size_t offset = 1; offset < d; ++offset)
        for (std::size_t i = 1; i + offset < d; ++i)
            if (theta.at(i, i + offset) != theta.at(0, offset)) return false;
    return true;
}

bool matches_prime_form(const ParamMatrix &theta) {
    if (!theta.is_skew()) throw std::domain_error("matches_prime_form: form not skew");
    const std::size_t d = theta.rows();
    if (d < 2 || d % 2 != 0) return false;
    if (!toeplitz_form_check(theta)) return false;
    // superdiagonal values v_j = theta(1, j+1); require v_j = -v_{d+1-j} for j >= 2
    for (std::size_t j = 2; j < d; ++j)
        if (!(theta.at(0, j) + theta.at(0, d + 1 - j)).is_zero()) return false;
    return true;
}

bool extended_symmetry_check(const IntMatrix &a, const ParamMatrix &theta) {
    if (!a.is_square() || a.rows() != theta.rows())
        throw std::invalid_argument("extended_symmetry_check: shape mismatch");
    IntMatrix inv = exactla::inverse_unimodular(a);
    ParamMatrix k = theta - theta.congruence_by(inv);
    for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j)
            if (!k.at(i, j).is_integral()) return false;
    return true;
}

} // namespace nctori::forms
