#include "nctori/simplicity.hpp"

#include <stdexcept>

#include "nctori/exactla.hpp"

namespace nctori::simplicity {

namespace {

Int sup_norm(const std::vector<Int> &v) {
    Int m = 0;
    for (const auto &e : v) m = std::max(m, abs(e));
    return m;
}

std::size_t first_nonzero(const std::vector<Int> &v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return v.size();
}

void sign_normalize(std::vector<Int> &v) {
    std::size_t f = first_nonzero(v);
    if (f < v.size() && v[f] < 0)
        for (auto &e : v) e = -e;
}

// minimal sup-norm, then earliest leading coordinate, then lexicographic
bool witness_better(const std::vector<Int> &a, const std::vector<Int> &b) {
    Int na = sup_norm(a), nb = sup_norm(b);
    if (na != nb) return na < nb;
    std::size_t fa = first_nonzero(a), fb = first_nonzero(b);
    if (fa != fb) return fa < fb;
    return a < b;
}

} // namespace

DegeneracyVerdict is_nondegenerate(const ParamMatrix &theta) {
    if (!theta.is_skew()) throw std::domain_error("is_nondegenerate: form not skew");
    const std::size_t d = theta.rows();

    // x must be killed by every parameter coefficient matrix
    std::vector<std::vector<Int>> lattice_basis;
    std::vector<std::string> names = theta.parameter_names();
    if (names.empty()) {
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<Int> e(d, Int(0));
            e[i] = 1;
            lattice_basis.push_back(std::move(e));
        }
    } else {
        IntMatrix stacked(names.size() * d, d);
        for (std::size_t k = 0; k < names.size(); ++k) {
            RatMatrix coeff = theta.coeff_matrix(names[k]);
            Int scale = coeff.denominator_lcm();
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    Rat e = coeff.at(i, j) * Rat(scale);
                    stacked.at(k * d + i, j) = e.get_num();
                }
        }
        lattice_basis = exactla::int_kernel(stacked);
    }
    if (lattice_basis.empty()) return DegeneracyVerdict{true, std::nullopt};

    // within the lattice, solve for integrality of the constant part
    const std::size_t r = lattice_basis.size();
    IntMatrix basis(d, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < d; ++i) basis.at(i, j) = lattice_basis[j][i];

    RatMatrix theta0 = theta.const_matrix();
    RatMatrix restricted = theta0 * RatMatrix::from_int(basis);
    Int n = restricted.denominator_lcm();
    IntMatrix scaled(d, r);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Rat e = restricted.at(i, j) * Rat(n);
            scaled.at(i, j) = e.get_num();
        }

    std::vector<std::vector<Int>> solutions = exactla::congruence_lattice(scaled, n);
    std::optional<std::vector<Int>> best;
    for (const auto &y : solutions) {
        std::vector<Int> x(d, Int(0));
        for (std::size_t j = 0; j < r; ++j)
            if (y[j] != 0)
                for (std::size_t i = 0; i < d; ++i) x[i] += basis.at(i, j) * y[j];
        bool zero = true;
        for (const auto &e : x)
            if (e != 0) {
                zero = false;
                break;
            }
        if (zero) continue;
        sign_normalize(x);
        if (!best || witness_better(x, *best)) best = x;
    }
    if (!best) return DegeneracyVerdict{true, std::nullopt};
    return DegeneracyVerdict{false, best};
}

bool is_free_outside_origin(const IntMatrix &a, unsigned long order) {
    if (!a.is_square()) throw std::invalid_argument("is_free_outside_origin: matrix not square");
    if (order == 0 || !mat_pow(a, order).is_identity())
        throw std::domain_error("is_free_outside_origin: A^order != I");
    const IntMatrix id = IntMatrix::identity(a.rows());
    IntMatrix power = id;
    for (unsigned long k = 1; k < order; ++k) {
        power = mat_mul(power, a);
        if (!exactla::int_kernel(power - id).empty()) return false;
    }
    return true;
}

} // namespace nctori::simplicity
