#include "switchsim/switch_laws.hpp"

#include <cmath>
#include <sstream>

#include "switchsim/errors.hpp"

namespace switchsim {

namespace {
constexpr int kLevels[] = {8, 16, 32, 64, 128, 256, 512};
constexpr int kNumLevels = 7;

void check_unit(double v, const char* name) {
    if (!(v >= 0.0) || !(v <= 1.0)) {
        std::ostringstream os;
        os << "switch law: " << name << " = " << v << " outside [0,1]";
        throw ConfigError(os.str());
    }
}

// Two-level escalation driver shared by the 1-d and 2-d Beta expectations.
template <typename EvalAtLevel>
double escalate(EvalAtLevel&& eval) {
    double prev = 0.0;
    double cur = 0.0;
    for (int level = 0; level < kNumLevels; ++level) {
        prev = cur;
        cur = eval(level);
        if (level > 0) {
            double scale = std::max(std::abs(cur), 1e-300);
            if (std::abs(cur - prev) <= 1e-8 * scale || std::abs(cur - prev) <= 1e-13)
                return cur;
        }
    }
    std::ostringstream os;
    os << "switch expectation stalled at the finest quadrature level: successive estimates "
       << prev << " and " << cur;
    throw QuadratureNoConvergence(os.str(), prev, cur);
}
}  // namespace

SwitchLaw SwitchLaw::deterministic(double d1, double d2) {
    check_unit(d1, "d1");
    check_unit(d2, "d2");
    SwitchLaw law;
    law.kind_ = Kind::Deterministic;
    law.atoms_ = {{d1, d2, 1.0}};
    return law;
}

SwitchLaw SwitchLaw::bernoulli(double p, double q) {
    check_unit(p, "p");
    check_unit(q, "q");
    SwitchLaw law;
    law.kind_ = Kind::Bernoulli;
    law.atoms_ = {{1.0, 1.0, p * q},
                  {1.0, 0.0, p * (1.0 - q)},
                  {0.0, 1.0, (1.0 - p) * q},
                  {0.0, 0.0, (1.0 - p) * (1.0 - q)}};
    return law;
}

SwitchLaw SwitchLaw::beta(double b1, double g1, double b2, double g2) {
    if (!(b1 > 0.0) || !(g1 > 0.0) || !(b2 > 0.0) || !(g2 > 0.0))
        throw ConfigError("beta switch law: all shape parameters must be > 0");
    SwitchLaw law;
    law.kind_ = Kind::Beta;
    law.beta_params_ = {b1, g1, b2, g2};
    return law;
}

const Quadrature1D& SwitchLaw::rule(Entry entry, int level) const {
    auto& ladder = entry == Entry::A11 ? rules_a11_ : rules_a12_;
    double jb = entry == Entry::A11 ? beta_params_[0] : beta_params_[2];
    double jg = entry == Entry::A11 ? beta_params_[1] : beta_params_[3];
    while (static_cast<int>(ladder.size()) <= level)
        ladder.push_back(gauss_jacobi_beta(kLevels[ladder.size()], jb, jg));
    return ladder[level];
}

SwitchLaw SwitchLaw::discrete(std::vector<SwitchAtom> atoms) {
    if (atoms.empty()) throw ConfigError("discrete switch law: no atoms");
    double wsum = 0.0;
    for (const auto& a : atoms) {
        check_unit(a.a11, "atom a11");
        check_unit(a.a12, "atom a12");
        if (!(a.w > 0.0)) throw ConfigError("discrete switch law: atom weight must be > 0");
        wsum += a.w;
    }
    if (std::abs(wsum - 1.0) > 1e-9)
        throw ConfigError("discrete switch law: atom weights must sum to 1");
    for (auto& a : atoms) a.w /= wsum;
    SwitchLaw law;
    law.kind_ = Kind::Discrete;
    law.atoms_ = std::move(atoms);
    return law;
}

double SwitchLaw::expect(const std::function<double(double, double)>& h) const {
    if (kind_ != Kind::Beta) {
        double acc = 0.0;
        for (const auto& a : atoms_) acc += a.w * h(a.a11, a.a12);
        return acc;
    }
    return escalate([&](int level) {
        const Quadrature1D& r1 = rule(Entry::A11, level);
        const Quadrature1D& r2 = rule(Entry::A12, level);
        double acc = 0.0;
        for (size_t i = 0; i < r1.nodes.size(); ++i) {
            double inner = 0.0;
            for (size_t j = 0; j < r2.nodes.size(); ++j)
                inner += r2.weights[j] * h(r1.nodes[i], r2.nodes[j]);
            acc += r1.weights[i] * inner;
        }
        return acc;
    });
}

double SwitchLaw::expect_entry(Entry entry, const std::function<double(double)>& h) const {
    if (kind_ != Kind::Beta) {
        double acc = 0.0;
        for (const auto& a : atoms_)
            acc += a.w * h(entry == Entry::A11 ? a.a11 : a.a12);
        return acc;
    }
    return escalate([&](int level) {
        const Quadrature1D& r = rule(entry, level);
        double acc = 0.0;
        for (size_t i = 0; i < r.nodes.size(); ++i) acc += r.weights[i] * h(r.nodes[i]);
        return acc;
    });
}

std::pair<double, double> SwitchLaw::sample(Pcg32& rng) const {
    if (kind_ == Kind::Beta)
        return {rng.beta(beta_params_[0], beta_params_[1]),
                rng.beta(beta_params_[2], beta_params_[3])};
    if (atoms_.size() == 1) return {atoms_[0].a11, atoms_[0].a12};
    double u = rng.uniform_co();
    double acc = 0.0;
    for (const auto& a : atoms_) {
        acc += a.w;
        if (u < acc) return {a.a11, a.a12};
    }
    return {atoms_.back().a11, atoms_.back().a12};
}

std::pair<double, double> SwitchLaw::mean_entries() const {
    if (kind_ == Kind::Beta)
        return {beta_params_[0] / (beta_params_[0] + beta_params_[1]),
                beta_params_[2] / (beta_params_[2] + beta_params_[3])};
    double m1 = 0.0, m2 = 0.0;
    for (const auto& a : atoms_) {
        m1 += a.w * a.a11;
        m2 += a.w * a.a12;
    }
    return {m1, m2};
}

double SwitchLaw::support_sup(Entry entry) const {
    if (kind_ == Kind::Beta) return 1.0;
    double s = 0.0;
    for (const auto& a : atoms_) s = std::max(s, entry == Entry::A11 ? a.a11 : a.a12);
    return s;
}

double SwitchLaw::support_inf(Entry entry) const {
    if (kind_ == Kind::Beta) return 0.0;
    double s = 1.0;
    for (const auto& a : atoms_) s = std::min(s, entry == Entry::A11 ? a.a11 : a.a12);
    return s;
}

}  // namespace switchsim
