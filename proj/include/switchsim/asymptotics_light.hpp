#pragma once

#include <functional>
#include <optional>

#include "switchsim/model.hpp"

namespace switchsim {

struct LundbergBounds {
    double bound1 = 1.0;
    double bound2 = 1.0;
    double bound_or = 1.0;
};

// A point on the simultaneous-ruin exponent curve together with the bound
// exponent kappa1 b1 + kappa2 b2 it certifies.
struct JointExponent {
    double kappa1 = 0.0;
    double kappa2 = 0.0;
    double exponent = 0.0;
};

struct LightReport {
    double kappa1 = 0.0;
    double kappa2 = 0.0;
    double cc1 = 0.0;  // Cramer constants
    double cc2 = 0.0;
    double optimal_b1 = 0.5;
    double optimal_common_exponent = 0.0;  // kappa1 kappa2 / (kappa1 + kappa2)
    // 0: both exponential terms comparable; 1 or 2: that term decays at a
    // rate more than 10% steeper and is asymptotically dominated.
    int dominated_term = 0;
    std::optional<JointExponent> joint;
    std::function<double(double)> psi_or;
    std::function<LundbergBounds(double)> bounds;
};

// Unique positive root of the exponential drift equation for barrier i.
double adjustment_coefficient(const Model& model, int i);

double cramer_constant(const Model& model, int i);
// overload avoiding a repeated root search when kappa_i is already known
double cramer_constant(const Model& model, int i, double kappa_i);

LundbergBounds lundberg_bounds(const Model& model, double u);

// Two-term exponential approximation C1 e^{-k1 b1 u} + C2 e^{-k2 b2 u};
// both terms are always retained.
double psi_or_light(const Model& model, double u);

// Solves the simultaneous-ruin exponent equation for kappa2 at the queried
// kappa1, taking the upper root so the curve continues the marginal root at
// kappa1 = 0.
double joint_exponent(const Model& model, double kappa1_query);

// Maximizes kappa1 b1 + kappa2 b2 along the exponent curve; empty when no
// point of the curve is admissible.
std::optional<JointExponent> joint_bound_maximizer(const Model& model);

// Barrier split equalizing the two Lundberg exponents: kappa2/(kappa1+kappa2).
double optimal_split(const Model& model);

LightReport light_report(const Model& model);

}  // namespace switchsim
