#include "switchsim/asymptotics_rv.hpp"

#include <algorithm>
#include <limits>

#include "switchsim/errors.hpp"
#include "switchsim/numerics.hpp"

namespace switchsim {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

struct RvSource {
    bool active = false;  // positive rate and regularly varying
    double alpha = 0.0;
    double tail_const = 0.0;
    double rate = 0.0;
};

struct RvView {
    RvSource src[2];
    double alpha_min = 0.0;

    bool dominant(int j) const { return src[j].active && src[j].alpha == alpha_min; }
};

RvView rv_view(const Model& m) {
    RvView view;
    for (int j = 0; j < 2; ++j) {
        const JobLaw& law = m.job(j + 1);
        double rate = m.arrival_rate(j + 1);
        if (rate > 0.0 && law.tail_class().kind == TailKind::RegVarying) {
            view.src[j] = {true, law.tail_class().alpha, law.tail_class().constant, rate};
        }
    }
    if (!view.src[0].active && !view.src[1].active)
        throw NotRegVarying("no active regularly varying source in this model");
    view.alpha_min = kInf;
    for (const auto& s : view.src)
        if (s.active) view.alpha_min = std::min(view.alpha_min, s.alpha);
    return view;
}

// zeta-derived source weights with the limit conventions applied once.
std::pair<double, double> zeta_weights(double z) {
    if (std::isinf(z)) return {1.0, 0.0};
    if (z == 0.0) return {0.0, 1.0};
    return {z / (1.0 + z), 1.0 / (1.0 + z)};
}

template <typename Combine>
double ray_power_integral(const Model& m, int j, double alpha, Combine&& comb) {
    const auto& cs = m.safety_loading();
    double b1 = m.params().b1;
    double b2 = 1.0 - b1;
    auto entry = j == 0 ? SwitchLaw::Entry::A11 : SwitchLaw::Entry::A12;
    return m.params().switch_law.expect_entry(entry, [&](double a) {
        auto f = [&](double v) {
            double arg = comb((v * cs[0] + b1) / a, (v * cs[1] + b2) / (1.0 - a));
            return std::pow(arg, -alpha);  // pow(+inf, -alpha) = 0
        };
        return integrate_semi_infinite(f).value;
    });
}

template <typename Combine>
double c_combined(const Model& m, Combine&& comb) {
    RvView view = rv_view(m);
    auto [w1, w2] = zeta_weights(zeta(m));
    double acc = 0.0;
    if (w1 > 0.0 && view.src[0].active)
        acc += w1 * ray_power_integral(m, 0, view.src[0].alpha, comb);
    if (w2 > 0.0 && view.src[1].active)
        acc += w2 * ray_power_integral(m, 1, view.src[1].alpha, comb);
    return acc;
}

double take_min(double x, double y) { return std::min(x, y); }
double take_max(double x, double y) { return std::max(x, y); }

// E[A_{i j}^alpha] for row i in {1,2}, source j in {0,1}.
double entry_moment(const Model& m, int i, int j, double alpha) {
    auto entry = j == 0 ? SwitchLaw::Entry::A11 : SwitchLaw::Entry::A12;
    bool complement = i == 2;
    return m.params().switch_law.expect_entry(entry, [&](double e) {
        double a = complement ? 1.0 - e : e;
        return a > 0.0 ? std::pow(a, alpha) : 0.0;
    });
}

// Leading coefficient of the single-component curve in its own scale.
double single_coefficient(const Model& m, const RvView& view, int i) {
    double ci_star = m.safety_loading()[i - 1];
    double acc = 0.0;
    for (int j = 0; j < 2; ++j) {
        if (!view.dominant(j)) continue;
        const RvSource& s = view.src[j];
        acc += s.rate * s.tail_const * entry_moment(m, i, j, s.alpha) / (s.alpha - 1.0);
    }
    return acc / (m.lambda() * ci_star);
}

double dominant_rate_mass(const RvView& view) {
    double acc = 0.0;
    for (int j = 0; j < 2; ++j)
        if (view.dominant(j)) acc += view.src[j].rate * view.src[j].tail_const;
    return acc;
}
}  // namespace

double zeta(const Model& model) {
    RvView view = rv_view(model);
    const RvSource& s1 = view.src[0];
    const RvSource& s2 = view.src[1];
    if (s1.active && !s2.active) return kInf;
    if (!s1.active && s2.active) return 0.0;
    if (s1.alpha < s2.alpha) return kInf;
    if (s1.alpha > s2.alpha) return 0.0;
    return s1.rate * s1.tail_const / (s2.rate * s2.tail_const);
}

double c_vee(const Model& model) { return c_combined(model, take_min); }

double c_and_sim(const Model& model) { return c_combined(model, take_max); }

RvReport psi_curves_rv(const Model& model) {
    Regime reg = model.regime();
    if (reg != Regime::RegVarying && reg != Regime::Mixed)
        throw NotRegVarying("power-law curves need a regularly varying dominant tail, model regime is " +
                            regime_name(reg));
    RvView view = rv_view(model);
    RvReport rep;
    rep.zeta = zeta(model);
    rep.c_vee_value = c_vee(model);
    rep.c_and_sim_value = c_and_sim(model);
    rep.alpha_min = view.alpha_min;

    double expo = 1.0 - view.alpha_min;
    double lam = model.lambda();
    double mass = dominant_rate_mass(view);
    rep.psi1 = {single_coefficient(model, view, 1), expo};
    rep.psi2 = {single_coefficient(model, view, 2), expo};
    rep.psi_or = {rep.c_vee_value / lam * mass, expo};
    rep.psi_and_sim = {rep.c_and_sim_value / lam * mass, expo};

    // Inclusion-exclusion at matched exponents reduces to coefficients; the
    // u-scale single terms carry the barrier-split powers.
    double b1 = model.params().b1;
    double b2 = 1.0 - b1;
    double t1 = rep.psi1.coefficient * std::pow(b1, expo);
    double t2 = rep.psi2.coefficient * std::pow(b2, expo);
    double diff = t1 + t2 - rep.psi_or.coefficient;
    bool ratio_degenerate =
        rep.psi_or.coefficient <= 0.0 ||
        std::abs((t1 + t2) / rep.psi_or.coefficient - 1.0) < 0.01;
    bool cancelled = diff <= 1e-3 * std::max(t1, t2);
    if (ratio_degenerate || cancelled) {
        if (model.params().switch_law.kind() == SwitchLaw::Kind::Bernoulli) {
            rep.and_via_product = true;
            rep.psi_and.status = CurveStatus::Value;
            rep.psi_and.law = {rep.psi1.coefficient * std::pow(b1, expo) *
                                   rep.psi2.coefficient * std::pow(b2, expo),
                               2.0 * expo};
        } else {
            rep.psi_and.status = CurveStatus::LittleO;
            rep.psi_and.law = {0.0, expo};
        }
    } else {
        rep.psi_and.status = CurveStatus::Value;
        rep.psi_and.law = {diff, expo};
    }
    return rep;
}

}  // namespace switchsim
