#pragma once

#include "nctori/param.hpp"

namespace nctori::weyl {

/// Exponent t of a phase exp(pi*i*t). Phases agree exactly when the
/// parameter parts match and the rational parts are congruent mod 2, so the
/// rational part is normalized into [0, 2).
class PhaseExponent {
  public:
    PhaseExponent() = default;
    explicit PhaseExponent(const ParamScalar &t);

    const ParamScalar &exponent() const { return t_; }
    bool is_trivial() const { return t_.is_zero(); }

    PhaseExponent operator+(const PhaseExponent &other) const;
    PhaseExponent operator-() const;
    bool operator==(const PhaseExponent &other) const { return t_ == other.t_; }
    bool operator!=(const PhaseExponent &other) const { return !(*this == other); }

    std::string str() const; // "exp(pi*i*(<t>))"

  private:
    ParamScalar t_;
};

/// A scalar multiple of a generator: exp(pi*i*phase) * l(exponent).
struct WeylElement {
    PhaseExponent phase;
    std::vector<Int> exponent;

    bool operator==(const WeylElement &other) const {
        return phase == other.phase && exponent == other.exponent;
    }
    bool operator!=(const WeylElement &other) const { return !(*this == other); }

    static WeylElement generator(std::size_t d, std::size_t i); // l(e_i)
    static WeylElement identity(std::size_t d);
};

/// Normal-ordered rendering exp(pi*i*phase) u_1^{y_1} ... u_d^{y_d}.
struct NormalWord {
    PhaseExponent phase;
    std::vector<Int> powers;

    bool operator==(const NormalWord &other) const {
        return phase == other.phase && powers == other.powers;
    }
    bool operator!=(const NormalWord &other) const { return !(*this == other); }

    /// "u2 u4*", "exp(pi*i*(theta)) u1* u2*"; adjoints rendered with '*'.
    std::string str() const;
};

/// Exponent <Theta x, y> of the twisting 2-cocycle.
PhaseExponent cocycle(const ParamMatrix &theta, const std::vector<Int> &x,
                      const std::vector<Int> &y);

/// (a, x) * (b, y) = (a + b + <Theta x, y>, x + y).
WeylElement multiply(const ParamMatrix &theta, const WeylElement &g, const WeylElement &h);

WeylElement inverse(const ParamMatrix &theta, const WeylElement &g);

/// l(y) as a phase times the ordered word u_1^{y_1} ... u_d^{y_d}; the phase
/// exponent is sum_{j<k} y_k y_j theta_{jk}.
NormalWord normal_order(const ParamMatrix &theta, const std::vector<Int> &y);

/// Canonical automorphism (a, y) -> (a, A y); requires A in the isotropy
/// group of Theta.
WeylElement act(const ParamMatrix &theta, const IntMatrix &a, const WeylElement &g);

/// Images of the d generators under the canonical automorphism of A,
/// normal-ordered with exact phases.
std::vector<NormalWord> action_table(const IntMatrix &a, const ParamMatrix &theta);

struct ConjugacyReport {
    bool a_in_source_isotropy = false;   // A preserves Theta'
    bool conjugate_in_target = false;    // B^{-1} A B preserves B^t Theta' B
    bool intertwines = false;            // transported action matches on generators
    IntMatrix conjugated_generator;      // B^{-1} A B
    bool passed() const { return a_in_source_isotropy && conjugate_in_target && intertwines; }
};

/// Checks that transporting the canonical action of A on the Theta' torus
/// through the basis change B lands on the canonical action of B^{-1} A B on
/// the (B^t Theta' B)-torus, generator by generator.
ConjugacyReport conjugacy_check(const IntMatrix &b, const ParamMatrix &theta_prime,
                                const IntMatrix &a);

} // namespace nctori::weyl
