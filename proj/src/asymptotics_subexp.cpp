#include "switchsim/asymptotics_subexp.hpp"

#include <cmath>
#include <memory>
#include <sstream>

#include "switchsim/errors.hpp"
#include "switchsim/numerics.hpp"

namespace switchsim {

namespace {

// Sum over active sources of (lambda_j / lambda) E_a[tail_j(a)], where
// tail_j depends on the source's canonical entry only (row 2 is 1 - a).
template <typename PerSource>
double source_mix(const Model& m, PerSource&& tail_term) {
    const ModelParams& p = m.params();
    double lam = m.lambda();
    double acc = 0.0;
    if (p.lambda1 > 0.0)
        acc += p.lambda1 / lam *
               m.params().switch_law.expect_entry(
                   SwitchLaw::Entry::A11, [&](double a) { return tail_term(1, a); });
    if (p.lambda2 > 0.0)
        acc += p.lambda2 / lam *
               m.params().switch_law.expect_entry(
                   SwitchLaw::Entry::A12, [&](double a) { return tail_term(2, a); });
    return acc;
}

// min / max of the two barrier ray arguments at switch draw a; a division by
// zero produces +inf and the surviving tail evaluates to 0.
double ray_min(double n1, double n2, double a) {
    return std::min(n1 / a, n2 / (1.0 - a));
}
double ray_max(double n1, double n2, double a) {
    return std::max(n1 / a, n2 / (1.0 - a));
}

template <typename Combine>
double g_like(const Model& m, double u, double v, Combine&& comb) {
    auto [bu1, bu2] = m.split_barrier(u);
    const auto& cs = m.safety_loading();
    double n1 = bu1 + v * cs[0];
    double n2 = bu2 + v * cs[1];
    return source_mix(m, [&](int j, double a) {
        return m.job(j).survival(comb(n1, n2, a));
    });
}

template <typename Combine>
double psi_joint(const Model& m, double u, Combine&& comb) {
    const auto& cs = m.safety_loading();
    auto [bu1, bu2] = m.split_barrier(u);
    return source_mix(m, [&](int j, double a) {
        auto f = [&](double v) {
            return m.job(j).survival(comb(bu1 + v * cs[0], bu2 + v * cs[1], a));
        };
        return integrate_semi_infinite(f).value;
    });
}

void require_theta(const Model& m) { theta(m); }

}  // namespace

double g_uv(const Model& model, double u, double v) {
    return g_like(model, u, v, ray_min);
}

double theta(const Model& model) {
    const auto& cs = model.safety_loading();
    double val = source_mix(model, [&](int j, double a) {
        return model.job(j).mean() * std::min(a / cs[0], (1.0 - a) / cs[1]);
    });
    if (!(val > 0.0)) {
        std::ostringstream os;
        os << "integrated-tail normalizer is zero: every switch draw degenerates one row, "
              "the double-barrier tail theory does not apply (value "
           << val << ")";
        throw ThetaZero(os.str());
    }
    return val;
}

double psi_or_subexp(const Model& model, double u) {
    require_theta(model);
    return psi_joint(model, u, ray_min);
}

double psi_single_subexp(const Model& model, int i, double u_i) {
    if (i != 1 && i != 2) throw ConfigError("component index must be 1 or 2");
    const ModelParams& p = model.params();
    double ci_star = model.safety_loading()[i - 1];
    double lam = model.lambda();
    // Inner ray integral in closed form: int_0^inf S((u_i + v c*) / a) dv
    // = (a / c*) * int_{u_i/a}^inf S, with the a = 0 term vanishing.
    double acc = 0.0;
    auto one_source = [&](int j, SwitchLaw::Entry entry, bool complement) {
        return p.switch_law.expect_entry(entry, [&](double e) {
            double a = complement ? 1.0 - e : e;
            if (a <= 0.0) return 0.0;
            return a * model.job(j).upper_integrated_tail(u_i / a);
        });
    };
    bool row2 = i == 2;
    if (p.lambda1 > 0.0)
        acc += p.lambda1 * one_source(1, SwitchLaw::Entry::A11, row2);
    if (p.lambda2 > 0.0)
        acc += p.lambda2 * one_source(2, SwitchLaw::Entry::A12, row2);
    return acc / (lam * ci_star);
}

double psi_and_subexp_raw(const Model& model, double u) {
    require_theta(model);
    return psi_joint(model, u, ray_max);
}

std::optional<double> psi_and_subexp(const Model& model, double u, double threshold) {
    require_theta(model);
    auto [bu1, bu2] = model.split_barrier(u);
    double orv = psi_joint(model, u, ray_min);
    double singles = psi_single_subexp(model, 1, bu1) + psi_single_subexp(model, 2, bu2);
    if (orv <= 0.0 || std::abs(singles / orv - 1.0) < threshold) return std::nullopt;
    return psi_joint(model, u, ray_max);
}

double f_subexp_cdf(const Model& model, double u) {
    double th = theta(model);
    if (u <= 0.0) return 0.0;
    return 1.0 - psi_or_subexp(model, u) / th;
}

SubexpReport subexp_report(const Model& model, const std::vector<double>& grid_u,
                           double threshold) {
    if (grid_u.empty()) throw ConfigError("evaluation grid is empty");
    SubexpReport rep;
    rep.theta_value = theta(model);
    rep.and_threshold = threshold;
    rep.grid_u = grid_u;

    auto shared = std::make_shared<Model>(model);
    rep.psi_or = [shared](double u) { return psi_or_subexp(*shared, u); };
    rep.psi_single[0] = [shared](double u1) { return psi_single_subexp(*shared, 1, u1); };
    rep.psi_single[1] = [shared](double u2) { return psi_single_subexp(*shared, 2, u2); };
    rep.psi_and = [shared](double u) { return psi_and_subexp_raw(*shared, u); };

    rep.equivalence_diagnostic.reserve(grid_u.size());
    double r_last = 0.0;
    for (double u : grid_u) {
        auto [bu1, bu2] = model.split_barrier(u);
        double orv = psi_or_subexp(model, u);
        double singles =
            psi_single_subexp(model, 1, bu1) + psi_single_subexp(model, 2, bu2);
        r_last = orv > 0.0 ? singles / orv : 1.0;
        rep.equivalence_diagnostic.push_back(r_last);
    }
    rep.and_status =
        std::abs(r_last - 1.0) >= threshold ? CurveStatus::Value : CurveStatus::LittleO;
    return rep;
}

}  // namespace switchsim
