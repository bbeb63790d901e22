#pragma once
#include <functional>
#include <optional>
#include <string>

#include "switchsim/rng.hpp"

namespace switchsim {

// Tail classification used to route asymptotics.
enum class TailKind { LightTail, RegVarying, SubexpOther };

struct TailClass {
    TailKind kind = TailKind::LightTail;
    // For RegVarying: survival ~ constant * x^{-alpha}.
    double alpha = 0.0;
    double constant = 0.0;
};

// Job-size distribution on (0, inf) with finite mean. Closed forms for the
// three named families; a Custom law carries user-declared callables.
class JobLaw {
  public:
    enum class Kind { Exponential, Pareto, Weibull, Custom };

    // default: unit-rate exponential, so a value-initialized law is usable
    JobLaw() : kind_(Kind::Exponential), p1_(1.0), mean_(1.0), mgf_sup_(1.0) {}

    static JobLaw exponential(double rate);
    // survival (x/scale)^{-alpha} beyond scale; requires alpha > 1 (finite mean)
    static JobLaw pareto(double alpha, double scale);
    // survival exp(-(x/scale)^shape); heavy branch only: shape in (0,1)
    static JobLaw weibull(double shape, double scale);
    static JobLaw custom(std::function<double(double)> survival, double mean,
                         TailClass tail, double mgf_domain_sup = 0.0,
                         std::function<double(double)> mgf = nullptr,
                         std::function<double(double)> mgf_prime = nullptr);

    double survival(double x) const;
    // int_x^inf survival(t) dt; closed forms, numeric for Custom
    double upper_integrated_tail(double x) const;
    // E[e^{sX}]; +inf past the mgf domain boundary (boundary excluded)
    double mgf(double s) const;
    // E[X e^{sX}]; +inf past the domain boundary
    double mgf_prime(double s) const;
    double mgf_domain_sup() const { return mgf_sup_; }
    double mean() const { return mean_; }
    TailClass tail_class() const { return tail_; }
    Kind kind() const { return kind_; }

    double sample(Pcg32& rng) const;

    // family parameters (for config round-trip)
    double param1() const { return p1_; }  // rate | alpha | shape
    double param2() const { return p2_; }  // -    | scale | scale

  private:
    Kind kind_ = Kind::Exponential;
    double p1_ = 0.0, p2_ = 0.0;
    double mean_ = 0.0;
    double mgf_sup_ = 0.0;
    TailClass tail_;
    std::function<double(double)> custom_survival_;
    std::function<double(double)> custom_mgf_;
    std::function<double(double)> custom_mgf_prime_;
};

}  // namespace switchsim
