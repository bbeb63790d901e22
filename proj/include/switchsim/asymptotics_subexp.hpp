#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "switchsim/model.hpp"

namespace switchsim {

// Whether an asymptotic curve carries a usable value or only the weaker
// little-o statement (the inclusion-exclusion difference degenerates).
enum class CurveStatus { Value, LittleO };

// Density-like kernel of the double-barrier tail approximation at (u, v).
double g_uv(const Model& model, double u, double v);

// Normalizer of the integrated-tail cdf built from g. Zero exactly when
// every switch draw puts one of the two rows at 0 (e.g. Bernoulli).
double theta(const Model& model);

// One-point evaluation of the approximation to the hitting probability of
// either barrier (min tails), integral of g(u, .) over v.
double psi_or_subexp(const Model& model, double u);

// Single-component approximation in the component's own scale u_i,
// i in {1, 2}.
double psi_single_subexp(const Model& model, int i, double u_i);

// Max-tail analogue of psi_or_subexp; meaningful only while the joint and
// the summed single-component approximations stay apart.
double psi_and_subexp_raw(const Model& model, double u);

// Guarded version: empty when |r(u) - 1| < threshold, where
// r(u) = (psi1(b1 u) + psi2(b2 u)) / psi_or(u); the difference curve then
// only supports a little-o statement.
std::optional<double> psi_and_subexp(const Model& model, double u, double threshold = 0.01);

// cdf 1 - psi_or_subexp(u) / theta; valid cdf on [0, inf).
double f_subexp_cdf(const Model& model, double u);

struct SubexpReport {
    double theta_value = 0.0;
    std::function<double(double)> psi_or;
    std::array<std::function<double(double)>, 2> psi_single;  // own-scale arguments
    std::function<double(double)> psi_and;  // max-form curve, see and_status
    CurveStatus and_status = CurveStatus::Value;
    double and_threshold = 0.01;
    std::vector<double> grid_u;
    std::vector<double> equivalence_diagnostic;  // r(u) on grid_u
};

// Evaluates the diagnostic on the grid and freezes the and-curve status from
// the largest grid point. Throws ThetaZero when the theory does not apply.
SubexpReport subexp_report(const Model& model, const std::vector<double>& grid_u,
                           double threshold = 0.01);

}  // namespace switchsim
