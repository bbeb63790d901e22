#pragma once
#include <functional>
#include <utility>
#include <vector>

#include "switchsim/numerics.hpp"
#include "switchsim/rng.hpp"

namespace switchsim {

// One atom of a discrete switch distribution: the canonical pair (a11, a12)
// with probability weight w. Rows complete to a21 = 1-a11, a22 = 1-a12.
struct SwitchAtom {
    double a11 = 0.0;
    double a12 = 0.0;
    double w = 0.0;
};

// Distribution of the random column-stochastic 2x2 switch matrix, identified
// with its canonical first-row pair (A11, A12).
class SwitchLaw {
  public:
    enum class Kind { Deterministic, Bernoulli, Beta, Discrete };
    enum class Entry { A11, A12 };

    // default: all work routed to server 1
    SwitchLaw() : atoms_{{1.0, 1.0, 1.0}} {}

    static SwitchLaw deterministic(double d1, double d2);
    // A11 ~ Bernoulli(p), A12 ~ Bernoulli(q), independent
    static SwitchLaw bernoulli(double p, double q);
    // A11 ~ Beta(b1, g1), A12 ~ Beta(b2, g2), independent
    static SwitchLaw beta(double b1, double g1, double b2, double g2);
    static SwitchLaw discrete(std::vector<SwitchAtom> atoms);

    // E[h(A11, A12)]. Discrete kinds sum atoms exactly; Beta tensorizes the
    // marginal Gauss-Jacobi rules with node escalation 8..512 until two
    // successive levels agree to relative 1e-8.
    double expect(const std::function<double(double, double)>& h) const;
    // E[h(entry)] for integrands depending on a single canonical entry;
    // Beta switches then need only the 1-d marginal rule.
    double expect_entry(Entry entry, const std::function<double(double)>& h) const;

    std::pair<double, double> sample(Pcg32& rng) const;
    std::pair<double, double> mean_entries() const;

    // support bounds of the marginal, for mgf-domain bracketing (row 2
    // entries are complements, so their sup needs the row-1 infimum)
    double support_sup(Entry entry) const;
    double support_inf(Entry entry) const;

    Kind kind() const { return kind_; }
    const std::vector<SwitchAtom>& atoms() const { return atoms_; }
    // beta marginal parameters in order (b1, g1, b2, g2)
    const std::vector<double>& beta_params() const { return beta_params_; }

  private:
    // Ladder rules are built on first use; single-threaded access assumed.
    const Quadrature1D& rule(Entry entry, int level) const;

    Kind kind_ = Kind::Deterministic;
    std::vector<SwitchAtom> atoms_;                   // discrete kinds
    std::vector<double> beta_params_;                 // Beta kind
    mutable std::vector<Quadrature1D> rules_a11_;     // escalation ladder, Beta kind
    mutable std::vector<Quadrature1D> rules_a12_;
};

}  // namespace switchsim
