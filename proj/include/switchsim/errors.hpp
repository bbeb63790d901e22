#pragma once
#include <stdexcept>
#include <string>

namespace switchsim {

// Bad user input: malformed config, parameters outside a law's domain.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Model violates the net-profit condition (some safety loading <= 0).
struct NetProfitError : std::runtime_error {
    explicit NetProfitError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numeric routine failed: no bracket, no convergence, budget exhausted.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested operation does not apply to the model's tail regime.
struct RegimeError : std::runtime_error {
    explicit RegimeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Power-law machinery invoked on a model with no regularly varying source.
struct NotRegVarying : RegimeError {
    explicit NotRegVarying(const std::string& msg) : RegimeError(msg) {}
};

// Quadrature level escalation ran out of levels before two successive
// estimates agreed; keeps both so the caller can judge the gap.
struct QuadratureNoConvergence : NumericError {
    QuadratureNoConvergence(const std::string& msg, double prev, double last)
        : NumericError(msg), estimate_prev(prev), estimate_last(last) {}
    double estimate_prev;
    double estimate_last;
};

// Light-tail Lundberg equation has no positive root for these parameters.
struct NoAdjustmentCoefficient : NumericError {
    explicit NoAdjustmentCoefficient(const std::string& msg) : NumericError(msg) {}
};

// A root search could not establish a sign change on the admissible interval.
struct NoBracket : NumericError {
    explicit NoBracket(const std::string& msg) : NumericError(msg) {}
};

// The integrated-tail normalizer is exactly zero (every switch draw degenerate).
struct ThetaZero : NumericError {
    explicit ThetaZero(const std::string& msg) : NumericError(msg) {}
};

}  // namespace switchsim
