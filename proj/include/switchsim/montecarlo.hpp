#pragma once

#include <cstdint>
#include <vector>

#include "switchsim/model.hpp"
#include "switchsim/rng.hpp"

namespace switchsim {

struct WorkloadConfig {
    double t_burn = -1.0;           // < 0: derived from the model
    double t_total = -1.0;          // < 0: burn-in plus 10^4 sample intervals
    double sample_interval = 1.0;
};

struct McConfig {
    std::int64_t n_paths = 100000;
    std::uint64_t seed = 1;
    std::int64_t max_jumps = 1000000;
    double stop_margin = -1.0;      // < 0: derived from the model
    WorkloadConfig workload;
};

struct McEstimate {
    double p_hat = 0.0;
    double std_err = 0.0;
    std::int64_t n = 0;
    double censored_fraction = 0.0;
};

struct RuinOutcome {
    bool hit1 = false;
    bool hit2 = false;
    bool hit_or = false;
    bool hit_and = false;
    bool hit_and_sim = false;
    bool censored = false;
};

struct RuinEstimates {
    McEstimate psi1, psi2, psi_or, psi_and, psi_and_sim;
};

// Workload exceedance estimates from one stationary trajectory; errors use
// batch means because time samples are dependent.
struct WorkloadEstimate {
    double p_hat = 0.0;
    double std_err = 0.0;
    std::int64_t n_samples = 0;
    int n_batches = 0;
};

struct WorkloadEstimates {
    WorkloadEstimate psi1, psi2, psi_or, psi_and_sim;
};

// Drift-based truncation depth: far enough below every barrier that the
// residual exceedance probability is negligible at the model's decay rate.
double default_stop_margin(const Model& model);

double default_t_burn(const Model& model, const WorkloadConfig& cfg);

// One replication of the jump chain at barrier level u. Ruin can only occur
// at jump instants, so the walk is exact.
RuinOutcome simulate_risk_path(const Model& model, double u, Pcg32& rng,
                               const McConfig& config);

RuinEstimates estimate_ruin(const Model& model, double u, const McConfig& config);

// All barrier levels share each trajectory (common random numbers), which
// makes every estimate monotone in u by construction.
std::vector<RuinEstimates> estimate_ruin_grid(const Model& model,
                                              const std::vector<double>& grid_u,
                                              const McConfig& config);

WorkloadEstimates simulate_workload(const Model& model, double u, const McConfig& config);

std::vector<WorkloadEstimates> simulate_workload_grid(const Model& model,
                                                      const std::vector<double>& grid_u,
                                                      const McConfig& config);

}  // namespace switchsim
