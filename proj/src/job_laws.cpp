#include "switchsim/job_laws.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "switchsim/errors.hpp"
#include "switchsim/numerics.hpp"

namespace switchsim {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// E[X e^{sX}] for s < 0 by parts: int (1 + s x) e^{s x} survival(x) dx.
double mgf_prime_numeric(const JobLaw& law, double s) {
    auto f = [&](double x) { return (1.0 + s * x) * std::exp(s * x) * law.survival(x); };
    return integrate_semi_infinite(f).value;
}
}  // namespace

JobLaw JobLaw::exponential(double rate) {
    if (!(rate > 0.0)) throw ConfigError("exponential job law: rate must be > 0");
    JobLaw law;
    law.kind_ = Kind::Exponential;
    law.p1_ = rate;
    law.mean_ = 1.0 / rate;
    law.mgf_sup_ = rate;
    law.tail_ = {TailKind::LightTail, 0.0, 0.0};
    return law;
}

JobLaw JobLaw::pareto(double alpha, double scale) {
    if (!(alpha > 1.0))
        throw ConfigError("pareto job law: alpha must be > 1 (finite mean required)");
    if (!(scale > 0.0)) throw ConfigError("pareto job law: scale must be > 0");
    JobLaw law;
    law.kind_ = Kind::Pareto;
    law.p1_ = alpha;
    law.p2_ = scale;
    law.mean_ = alpha * scale / (alpha - 1.0);
    law.mgf_sup_ = 0.0;
    law.tail_ = {TailKind::RegVarying, alpha, std::pow(scale, alpha)};
    return law;
}

JobLaw JobLaw::weibull(double shape, double scale) {
    if (!(shape > 0.0) || !(shape < 1.0))
        throw ConfigError("weibull job law: shape must lie in (0,1) (heavy branch)");
    if (!(scale > 0.0)) throw ConfigError("weibull job law: scale must be > 0");
    JobLaw law;
    law.kind_ = Kind::Weibull;
    law.p1_ = shape;
    law.p2_ = scale;
    law.mean_ = scale * std::tgamma(1.0 + 1.0 / shape);
    law.mgf_sup_ = 0.0;
    law.tail_ = {TailKind::SubexpOther, 0.0, 0.0};
    return law;
}

JobLaw JobLaw::custom(std::function<double(double)> survival, double mean, TailClass tail,
                      double mgf_domain_sup, std::function<double(double)> mgf,
                      std::function<double(double)> mgf_prime) {
    if (!survival) throw ConfigError("custom job law: survival function required");
    if (!(mean > 0.0) || !std::isfinite(mean))
        throw ConfigError("custom job law: mean must be finite and > 0");
    JobLaw law;
    law.kind_ = Kind::Custom;
    law.mean_ = mean;
    law.mgf_sup_ = mgf_domain_sup;
    law.tail_ = tail;
    law.custom_survival_ = std::move(survival);
    law.custom_mgf_ = std::move(mgf);
    law.custom_mgf_prime_ = std::move(mgf_prime);
    return law;
}

double JobLaw::survival(double x) const {
    if (x <= 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;  // barrier/0 convention lands here
    switch (kind_) {
        case Kind::Exponential:
            return std::exp(-p1_ * x);
        case Kind::Pareto:
            return x < p2_ ? 1.0 : std::pow(x / p2_, -p1_);
        case Kind::Weibull:
            return std::exp(-std::pow(x / p2_, p1_));
        case Kind::Custom:
            return custom_survival_(x);
    }
    return 0.0;
}

double JobLaw::upper_integrated_tail(double x) const {
    if (x < 0.0) x = 0.0;
    if (std::isinf(x)) return 0.0;
    switch (kind_) {
        case Kind::Exponential:
            return std::exp(-p1_ * x) / p1_;
        case Kind::Pareto: {
            double tail_from_scale = p2_ / (p1_ - 1.0);  // int_{xm}^inf
            if (x <= p2_) return (p2_ - x) + tail_from_scale;
            return std::pow(p2_, p1_) * std::pow(x, 1.0 - p1_) / (p1_ - 1.0);
        }
        case Kind::Weibull:
            return (p2_ / p1_) * upper_incomplete_gamma(1.0 / p1_, std::pow(x / p2_, p1_));
        case Kind::Custom: {
            auto f = [&](double v) { return custom_survival_(x + v); };
            return integrate_semi_infinite(f).value;
        }
    }
    return 0.0;
}

double JobLaw::mgf(double s) const {
    if (s == 0.0) return 1.0;
    if (mgf_sup_ >= 0.0 && s >= mgf_sup_) return kInf;  // boundary excluded
    switch (kind_) {
        case Kind::Exponential:
            return p1_ / (p1_ - s);
        case Kind::Pareto:
        case Kind::Weibull: {
            // only s < 0 reaches here for the heavy families
            auto f = [&](double x) { return std::exp(s * x) * survival(x); };
            return 1.0 + s * integrate_semi_infinite(f).value;
        }
        case Kind::Custom:
            if (custom_mgf_) return custom_mgf_(s);
            throw ConfigError("custom job law: mgf not declared");
    }
    return kInf;
}

double JobLaw::mgf_prime(double s) const {
    if (mgf_sup_ >= 0.0 && s >= mgf_sup_ && s > 0.0) return kInf;
    if (s == 0.0) return mean_;
    switch (kind_) {
        case Kind::Exponential: {
            double d = p1_ - s;
            return p1_ / (d * d);
        }
        case Kind::Pareto:
        case Kind::Weibull:
            return mgf_prime_numeric(*this, s);
        case Kind::Custom:
            if (custom_mgf_prime_) return custom_mgf_prime_(s);
            throw ConfigError("custom job law: mgf_prime not declared");
    }
    return kInf;
}

double JobLaw::sample(Pcg32& rng) const {
    double u = rng.uniform();  // (0,1]
    switch (kind_) {
        case Kind::Exponential:
            return -std::log(u) / p1_;
        case Kind::Pareto:
            return p2_ * std::pow(u, -1.0 / p1_);
        case Kind::Weibull:
            return p2_ * std::pow(-std::log(u), 1.0 / p1_);
        case Kind::Custom:
            throw ConfigError("custom job law: no sampler declared");
    }
    return 0.0;
}

}  // namespace switchsim
