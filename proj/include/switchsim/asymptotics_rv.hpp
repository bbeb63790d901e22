#pragma once

#include <cmath>

#include "switchsim/asymptotics_subexp.hpp"
#include "switchsim/model.hpp"

namespace switchsim {

// Pure power-law curve value(u) = coefficient * u^exponent.
struct PowerLaw {
    double coefficient = 0.0;
    double exponent = 0.0;
    double eval(double u) const { return coefficient * std::pow(u, exponent); }
};

struct RvCurve {
    CurveStatus status = CurveStatus::Value;
    PowerLaw law;  // meaningful only when status == Value
};

struct RvReport {
    double zeta = 0.0;  // may be 0 or +inf when one tail dominates
    double c_vee_value = 0.0;
    double c_and_sim_value = 0.0;
    double alpha_min = 0.0;
    PowerLaw psi1;  // own-scale argument u_1
    PowerLaw psi2;  // own-scale argument u_2
    PowerLaw psi_or;
    RvCurve psi_and;
    bool and_via_product = false;  // degenerate difference replaced by the product form
    PowerLaw psi_and_sim;
};

// Tail-dominance ratio from the declared power-law constants.
double zeta(const Model& model);

// Barrier-ray tail integrals behind the either/both asymptotes. The
// conventions x/0 = +inf, survival(+inf) = 0 and the zeta-weight limits
// w = (1, 0) / (0, 1) at zeta = inf / 0 are applied in one place.
double c_vee(const Model& model);
double c_and_sim(const Model& model);

// All five asymptotic curves as leading power laws. Sources whose tail index
// exceeds the minimum are dropped from every coefficient; the difference
// curve degrades to LittleO on near-cancellation, with the independent-switch
// product form taking over where it applies.
RvReport psi_curves_rv(const Model& model);

}  // namespace switchsim
