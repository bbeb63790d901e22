#include "switchsim/asymptotics_light.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "switchsim/errors.hpp"
#include "switchsim/numerics.hpp"

namespace switchsim {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_light(const Model& m) {
    if (m.regime() != Regime::Light)
        throw RegimeError("exponential-tail machinery needs the light regime, model regime is " +
                          regime_name(m.regime()));
}

SwitchLaw::Entry source_entry(int j) {
    return j == 1 ? SwitchLaw::Entry::A11 : SwitchLaw::Entry::A12;
}

// E[f(A_{ij})] over the marginal of source j's canonical entry; row 2 takes
// the complement.
double row_expect(const Model& m, int i, int j, const std::function<double(double)>& f) {
    return m.params().switch_law.expect_entry(source_entry(j), [&](double e) {
        return f(i == 1 ? e : 1.0 - e);
    });
}

// sup of admissible kappa for row i: each source's mgf domain divided by the
// largest switch entry it can meet.
double kappa_row_sup(const Model& m, int i) {
    const SwitchLaw& sw = m.params().switch_law;
    double sup = kInf;
    for (int j = 1; j <= 2; ++j) {
        if (!(m.arrival_rate(j) > 0.0)) continue;
        double mgf_sup = m.job(j).mgf_domain_sup();
        if (std::isinf(mgf_sup)) continue;
        double row_sup = i == 1 ? sw.support_sup(source_entry(j))
                                : 1.0 - sw.support_inf(source_entry(j));
        if (row_sup <= 0.0) continue;
        sup = std::min(sup, mgf_sup / row_sup);
    }
    return sup;
}

// Exponential drift function whose positive root is the adjustment
// coefficient; +inf stands in for a diverging expectation.
double h_drift(const Model& m, int i, double kappa) {
    try {
        double acc = -m.capacity(i) * kappa;
        for (int j = 1; j <= 2; ++j) {
            double rate = m.arrival_rate(j);
            if (!(rate > 0.0)) continue;
            const JobLaw& law = m.job(j);
            acc += rate * row_expect(m, i, j,
                                     [&](double a) { return law.mgf(kappa * a) - 1.0; });
        }
        return std::isnan(acc) ? kInf : acc;
    } catch (const QuadratureNoConvergence&) {
        return kInf;
    }
}

// Picks the evaluation point just below the domain sup at which f is finite,
// or the doubling point at which f turns positive when the domain is free.
template <typename F>
double upper_probe(F&& f, double domain_sup, const char* what) {
    if (std::isinf(domain_sup)) {
        double hi = 1.0;
        for (int it = 0; it < 200; ++it) {
            if (f(hi) > 0.0) return hi;
            hi *= 2.0;
        }
        std::ostringstream os;
        os << what << ": no sign change found up to " << hi;
        throw NoAdjustmentCoefficient(os.str());
    }
    double shrink = 1e-6;
    while (shrink < 0.5) {
        double hi = domain_sup * (1.0 - shrink);
        if (std::isfinite(f(hi))) return hi;
        shrink *= 2.0;
    }
    std::ostringstream os;
    os << what << ": expectation diverges on the whole admissible interval";
    throw NoAdjustmentCoefficient(os.str());
}
}  // namespace

double adjustment_coefficient(const Model& model, int i) {
    if (i != 1 && i != 2) throw ConfigError("barrier index must be 1 or 2");
    require_light(model);
    auto h = [&](double k) { return h_drift(model, i, k); };
    double hi = upper_probe(h, kappa_row_sup(model, i), "adjustment coefficient");
    if (!(h(hi) > 0.0)) {
        std::ostringstream os;
        os << "drift function stays negative on (0, " << hi
           << "]: no positive root for barrier " << i;
        throw NoAdjustmentCoefficient(os.str());
    }
    double lo = hi / 2.0;
    for (int it = 0; it < 200 && h(lo) > 0.0; ++it) lo /= 2.0;
    return find_root(h, lo, hi);
}

double cramer_constant(const Model& model, int i, double kappa_i) {
    require_light(model);
    double denom = -model.capacity(i);
    for (int j = 1; j <= 2; ++j) {
        double rate = model.arrival_rate(j);
        if (!(rate > 0.0)) continue;
        const JobLaw& law = model.job(j);
        denom += rate * row_expect(model, i, j, [&](double a) {
            return a * law.mgf_prime(kappa_i * a);
        });
    }
    return model.lambda() * model.safety_loading()[i - 1] / denom;
}

double cramer_constant(const Model& model, int i) {
    return cramer_constant(model, i, adjustment_coefficient(model, i));
}

LundbergBounds lundberg_bounds(const Model& model, double u) {
    double k1 = adjustment_coefficient(model, 1);
    double k2 = adjustment_coefficient(model, 2);
    auto [bu1, bu2] = model.split_barrier(u);
    LundbergBounds b;
    b.bound1 = std::exp(-k1 * bu1);
    b.bound2 = std::exp(-k2 * bu2);
    b.bound_or = std::min(1.0, b.bound1 + b.bound2);
    return b;
}

double psi_or_light(const Model& model, double u) {
    double k1 = adjustment_coefficient(model, 1);
    double k2 = adjustment_coefficient(model, 2);
    double c1 = cramer_constant(model, 1, k1);
    double c2 = cramer_constant(model, 2, k2);
    auto [bu1, bu2] = model.split_barrier(u);
    return c1 * std::exp(-k1 * bu1) + c2 * std::exp(-k2 * bu2);
}

double joint_exponent(const Model& model, double kappa1_query) {
    require_light(model);
    if (!(kappa1_query >= 0.0))
        throw ConfigError("joint exponent query must be >= 0");
    if (kappa1_query >= kappa_row_sup(model, 1))
        throw NoBracket("queried first exponent leaves the mgf domain");

    auto g = [&](double k2) -> double {
        try {
            double acc = -model.capacity(1) * kappa1_query - model.capacity(2) * k2;
            for (int j = 1; j <= 2; ++j) {
                double rate = model.arrival_rate(j);
                if (!(rate > 0.0)) continue;
                const JobLaw& law = model.job(j);
                acc += rate * model.params().switch_law.expect_entry(
                                  source_entry(j), [&](double a) {
                                      return law.mgf(kappa1_query * a) *
                                                 law.mgf(k2 * (1.0 - a)) -
                                             1.0;
                                  });
            }
            return std::isnan(acc) ? kInf : acc;
        } catch (const QuadratureNoConvergence&) {
            return kInf;
        }
    };

    double hi = 0.0;
    double sup2 = kappa_row_sup(model, 2);
    if (std::isinf(sup2)) {
        hi = 1.0;
        for (int it = 0; it < 200 && g(hi) < 0.0; ++it) hi *= 2.0;
    } else {
        double shrink = 1e-6;
        hi = sup2 * (1.0 - shrink);
        while (!std::isfinite(g(hi)) && shrink < 0.5) {
            shrink *= 2.0;
            hi = sup2 * (1.0 - shrink);
        }
    }
    if (!std::isfinite(g(hi)))
        throw NoBracket("joint drift diverges on the whole admissible interval");

    // The equation is convex in the second exponent; keep the upper root so
    // the curve continues the marginal root at kappa1 = 0.
    double k2_min = golden_max([&](double k2) { return -g(k2); }, 0.0, hi);
    double g_min = g(k2_min);
    if (g_min > 0.0)
        throw NoBracket("no simultaneous exponent pair at this first exponent");
    if (g_min == 0.0) return k2_min;
    if (g(hi) < 0.0)
        throw NoBracket("joint drift fails to recross zero below the mgf domain edge");
    return find_root(g, k2_min, hi);
}

std::optional<JointExponent> joint_bound_maximizer(const Model& model) {
    require_light(model);
    double b1 = model.params().b1;
    double b2 = 1.0 - b1;
    auto objective = [&](double k1) -> double {
        try {
            return k1 * b1 + joint_exponent(model, k1) * b2;
        } catch (const NumericError&) {
            return -1.0;  // exponents are positive, any failure loses
        }
    };

    double sup1 = kappa_row_sup(model, 1);
    double hi1 = std::isinf(sup1) ? 1.0 : sup1 * (1.0 - 1e-6);
    if (std::isinf(sup1)) {
        for (int it = 0; it < 60 && objective(hi1 * 2.0) > 0.0; ++it) hi1 *= 2.0;
    }
    if (objective(0.0) < 0.0) return std::nullopt;

    // Feasibility holds on an interval starting at zero; bisect its edge.
    double lo = 0.0, end = hi1;
    if (objective(end) < 0.0) {
        for (int it = 0; it < 60; ++it) {
            double mid = 0.5 * (lo + end);
            (objective(mid) > 0.0 ? lo : end) = mid;
        }
        end = lo;
    }
    double k1_best = golden_max(objective, 0.0, end, 1e-9);
    JointExponent je;
    je.kappa1 = k1_best;
    je.kappa2 = joint_exponent(model, k1_best);
    je.exponent = k1_best * b1 + je.kappa2 * b2;
    return je;
}

double optimal_split(const Model& model) {
    double k1 = adjustment_coefficient(model, 1);
    double k2 = adjustment_coefficient(model, 2);
    return k2 / (k1 + k2);
}

LightReport light_report(const Model& model) {
    LightReport rep;
    rep.kappa1 = adjustment_coefficient(model, 1);
    rep.kappa2 = adjustment_coefficient(model, 2);
    rep.cc1 = cramer_constant(model, 1, rep.kappa1);
    rep.cc2 = cramer_constant(model, 2, rep.kappa2);
    rep.optimal_b1 = rep.kappa2 / (rep.kappa1 + rep.kappa2);
    rep.optimal_common_exponent = rep.kappa1 * rep.kappa2 / (rep.kappa1 + rep.kappa2);

    double b1 = model.params().b1;
    double e1 = rep.kappa1 * b1;
    double e2 = rep.kappa2 * (1.0 - b1);
    if (std::abs(e1 - e2) > 0.1 * std::max(e1, e2)) rep.dominated_term = e1 > e2 ? 1 : 2;

    rep.joint = joint_bound_maximizer(model);

    double cc1 = rep.cc1, cc2 = rep.cc2, k1 = rep.kappa1, k2 = rep.kappa2, bb1 = b1;
    rep.psi_or = [=](double u) {
        return cc1 * std::exp(-k1 * bb1 * u) + cc2 * std::exp(-k2 * (1.0 - bb1) * u);
    };
    rep.bounds = [=](double u) {
        LundbergBounds b;
        b.bound1 = std::exp(-k1 * bb1 * u);
        b.bound2 = std::exp(-k2 * (1.0 - bb1) * u);
        b.bound_or = std::min(1.0, b.bound1 + b.bound2);
        return b;
    };
    return rep;
}

}  // namespace switchsim
