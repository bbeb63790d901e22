#pragma once

#include <array>
#include <string>

#include "switchsim/job_laws.hpp"
#include "switchsim/switch_laws.hpp"

namespace switchsim {

// Which tail picture the pair of job laws puts the model in. Mixed means
// exactly one source is regularly varying; SubexpGeneral covers everything
// with at least one subexponential-but-not-RV source and no RV dominance.
enum class Regime { Light, RegVarying, Mixed, SubexpGeneral };

std::string regime_name(Regime r);

struct ModelParams {
    double lambda1 = 1.0;
    double lambda2 = 1.0;
    double c1 = 5.0;
    double c2 = 8.0;
    double b1 = 0.8;
    JobLaw job1;
    JobLaw job2;
    SwitchLaw switch_law;
};

class Model {
  public:
    explicit Model(ModelParams params);

    const ModelParams& params() const { return params_; }
    double lambda() const { return params_.lambda1 + params_.lambda2; }

    // c_i^* = (c_i - lambda1 E[A_i1] E[X1] - lambda2 E[A_i2] E[X2]) / lambda.
    const std::array<double, 2>& safety_loading() const { return c_star_; }

    // (b1 u, b2 u) with b2 = 1 - b1.
    std::array<double, 2> split_barrier(double u) const;

    Regime regime() const { return regime_; }

    const JobLaw& job(int source) const;
    double arrival_rate(int source) const;
    double capacity(int server) const;

  private:
    ModelParams params_;
    std::array<double, 2> c_star_;
    Regime regime_;
};

}  // namespace switchsim
