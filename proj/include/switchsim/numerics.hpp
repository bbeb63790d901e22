#pragma once
#include <functional>
#include <vector>

namespace switchsim {

struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod (G7/K15) on a finite interval. Panels are split
// worst-error-first until the summed error estimate meets
// max(abs_tol, rel_tol * |value|) or the evaluation budget runs out.
QuadResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                            double rel_tol = 1e-9, double abs_tol = 1e-13,
                            long max_evals = 1000000);

// Integral over [0, inf) via the substitution v = t/(1-t), handled by the
// finite-interval adaptive rule on (0,1). Endpoint singularities of the
// transformed integrand are admissible: Kronrod nodes avoid the endpoints and
// the bisection stack resolves them geometrically.
QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double rel_tol = 1e-9, double abs_tol = 1e-13,
                                   long max_evals = 1000000);

// Brent's method on a bracketing interval [lo, hi]; f(lo) and f(hi) must have
// opposite signs. Throws NumericError("no bracket...") otherwise and
// NumericError("no convergence...") past max_iter.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol = 1e-12, int max_iter = 500);

// Golden-section maximizer of a unimodal function on [lo, hi]; returns argmax.
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double x_tol = 1e-10);

// Quadrature rule for E[h(T)], T ~ Beta(beta_param, gamma_param) on (0,1):
// nodes in (0,1) and weights normalized to sum exactly 1. Derived from the
// Gauss-Jacobi rule with exponents (gamma_param-1, beta_param-1) via a
// Golub-Welsch symmetric-tridiagonal eigensolve.
struct Quadrature1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};
Quadrature1D gauss_jacobi_beta(int n, double beta_param, double gamma_param);

// Unnormalized upper incomplete gamma Gamma(a, x), a > 0, x >= 0.
// Series for the lower part when x < a+1, continued fraction otherwise.
double upper_incomplete_gamma(double a, double x);

}  // namespace switchsim
