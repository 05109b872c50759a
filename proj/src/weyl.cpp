#include "nctori/weyl.hpp"

#include <sstream>
#include <stdexcept>

#include "nctori/exactla.hpp"
#include "nctori/forms.hpp"

namespace nctori::weyl {

PhaseExponent::PhaseExponent(const ParamScalar &t) {
    t_ = t - ParamScalar(t.const_part()) + ParamScalar(mod2(t.const_part()));
}

PhaseExponent PhaseExponent::operator+(const PhaseExponent &other) const {
    return PhaseExponent(t_ + other.t_);
}

PhaseExponent PhaseExponent::operator-() const { return PhaseExponent(-t_); }

std::string PhaseExponent::str() const { return "exp(pi*i*(" + t_.str() + "))"; }

WeylElement WeylElement::generator(std::size_t d, std::size_t i) {
    if (i >= d) throw std::invalid_argument("generator index out of range");
    WeylElement g;
    g.exponent.assign(d, Int(0));
    g.exponent[i] = 1;
    return g;
}

WeylElement WeylElement::identity(std::size_t d) {
    WeylElement g;
    g.exponent.assign(d, Int(0));
    return g;
}

std::string NormalWord::str() const {
    std::ostringstream os;
    bool printed = false;
    if (!phase.is_trivial()) {
        os << phase.str();
        printed = true;
    }
    for (std::size_t i = 0; i < powers.size(); ++i) {
        if (powers[i] == 0) continue;
        if (printed) os << " ";
        os << "u" << (i + 1);
        if (powers[i] == -1)
            os << "*";
        else if (powers[i] != 1)
            os << "^" << powers[i].get_str();
        printed = true;
    }
    if (!printed) os << "1";
    return os.str();
}

PhaseExponent cocycle(const ParamMatrix &theta, const std::vector<Int> &x,
                      const std::vector<Int> &y) {
    if (x.size() != theta.cols() || y.size() != theta.rows())
        throw std::invalid_argument("cocycle: shape mismatch");
    std::vector<ParamScalar> tx = theta.apply(x);
    ParamScalar acc;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] != 0 && !tx[i].is_zero()) acc += tx[i] * Rat(y[i]);
    return PhaseExponent(acc);
}

WeylElement multiply(const ParamMatrix &theta, const WeylElement &g, const WeylElement &h) {
    if (g.exponent.size() != h.exponent.size())
        throw std::invalid_argument("multiply: shape mismatch");
    WeylElement out;
    out.phase = g.phase + h.phase + cocycle(theta, g.exponent, h.exponent);
    out.exponent.resize(g.exponent.size());
    for (std::size_t i = 0; i < g.exponent.size(); ++i)
        out.exponent[i] = g.exponent[i] + h.exponent[i];
    return out;
}

WeylElement inverse(const ParamMatrix &theta, const WeylElement &g) {
    WeylElement out;
    std::vector<Int> neg(g.exponent.size());
    for (std::size_t i = 0; i < g.exponent.size(); ++i) neg[i] = -g.exponent[i];
    out.phase = -(g.phase + cocycle(theta, g.exponent, neg));
    out.exponent = std::move(neg);
    return out;
}

NormalWord normal_order(const ParamMatrix &theta, const std::vector<Int> &y) {
    if (y.size() != theta.rows() || theta.rows() != theta.cols())
        throw std::invalid_argument("normal_order: shape mismatch");
    ParamScalar acc;
    for (std::size_t k = 1; k < y.size(); ++k) {
        if (y[k] == 0) continue;
        for (std::size_t j = 0; j < k; ++j)
            if (y[j] != 0 && !theta.at(j, k).is_zero())
                acc += theta.at(j, k) * Rat(y[k] * y[j]);
    }
    NormalWord word;
    word.phase = PhaseExponent(acc);
    word.powers = y;
    return word;
}

WeylElement act(const ParamMatrix &theta, const IntMatrix &a, const WeylElement &g) {
    if (!forms::is_invariant(a, theta))
        throw std::domain_error("act: matrix is not in the isotropy group of the form");
    WeylElement out;
    out.phase = g.phase;
    out.exponent = a.apply(g.exponent);
    return out;
}

std::vector<NormalWord> action_table(const IntMatrix &a, const ParamMatrix &theta) {
    if (!forms::is_invariant(a, theta))
        throw std::domain_error("action_table: matrix is not in the isotropy group of the form");
    const std::size_t d = a.rows();
    std::vector<NormalWord> table;
    table.reserve(d);
    for (std::size_t i = 0; i < d; ++i) table.push_back(normal_order(theta, a.col_vector(i)));
    return table;
}

ConjugacyReport conjugacy_check(const IntMatrix &b, const ParamMatrix &theta_prime,
                                const IntMatrix &a) {
    if (!b.is_square() || b.rows() != theta_prime.rows() || a.rows() != b.rows() ||
        !a.is_square())
        throw std::invalid_argument("conjugacy_check: shape mismatch");
    IntMatrix b_inv = exactla::inverse_unimodular(b);
    ParamMatrix theta = theta_prime.congruence_by(b);
    IntMatrix psi = mat_mul(b_inv, mat_mul(a, b));

    ConjugacyReport report{false, false, false, psi};
    report.a_in_source_isotropy = forms::is_invariant(a, theta_prime);
    report.conjugate_in_target = forms::is_invariant(psi, theta);

    // rho(l(x)) = l(B^{-1} x): compare rho(alpha_A(e_i)) with beta_psi(rho(e_i))
    bool ok = true;
    const std::size_t d = a.rows();
    for (std::size_t i = 0; i < d && ok; ++i) {
        std::vector<Int> via_source = b_inv.apply(a.col_vector(i));
        std::vector<Int> via_target = psi.apply(b_inv.col_vector(i));
        ok = (via_source == via_target);
    }
    report.intertwines = ok;
    return report;
}

} // namespace nctori::weyl
