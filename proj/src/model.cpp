#include "switchsim/model.hpp"

#include <cmath>
#include <sstream>

#include "switchsim/errors.hpp"

namespace switchsim {

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::Light: return "Light";
        case Regime::RegVarying: return "RegVarying";
        case Regime::Mixed: return "Mixed";
        case Regime::SubexpGeneral: return "SubexpGeneral";
    }
    return "?";
}

namespace {
Regime classify(const JobLaw& j1, const JobLaw& j2, double lambda1, double lambda2) {
    // A source with zero rate contributes nothing; treat it as light so the
    // active source alone decides the regime.
    auto kind_of = [](const JobLaw& j, double lam) {
        return lam > 0.0 ? j.tail_class().kind : TailKind::LightTail;
    };
    TailKind k1 = kind_of(j1, lambda1);
    TailKind k2 = kind_of(j2, lambda2);
    bool rv1 = k1 == TailKind::RegVarying;
    bool rv2 = k2 == TailKind::RegVarying;
    bool light1 = k1 == TailKind::LightTail;
    bool light2 = k2 == TailKind::LightTail;
    if (light1 && light2) return Regime::Light;
    if (rv1 && rv2) return Regime::RegVarying;
    if (rv1 != rv2) return Regime::Mixed;
    return Regime::SubexpGeneral;
}
}  // namespace

Model::Model(ModelParams params) : params_(std::move(params)) {
    const ModelParams& p = params_;
    if (!(p.lambda1 >= 0.0) || !(p.lambda2 >= 0.0))
        throw ConfigError("arrival rates must be >= 0");
    if (!(p.lambda1 + p.lambda2 > 0.0))
        throw ConfigError("at least one arrival rate must be > 0");
    if (!(p.c1 > 0.0) || !(p.c2 > 0.0))
        throw ConfigError("service capacities must be > 0");
    if (!(p.b1 > 0.0) || !(p.b1 < 1.0))
        throw ConfigError("barrier split b1 must lie in (0,1)");

    auto [ea11, ea12] = p.switch_law.mean_entries();
    double m1 = p.job1.mean();
    double m2 = p.job2.mean();
    double lam = p.lambda1 + p.lambda2;
    double load1 = p.lambda1 * ea11 * m1 + p.lambda2 * ea12 * m2;
    double load2 = p.lambda1 * (1.0 - ea11) * m1 + p.lambda2 * (1.0 - ea12) * m2;
    double caps[2] = {p.c1, p.c2};
    double loads[2] = {load1, load2};
    for (int i = 0; i < 2; ++i) {
        if (!(caps[i] > loads[i])) {
            std::ostringstream os;
            os << "server " << (i + 1) << " violates the net profit condition: capacity "
               << caps[i] << " <= mean load " << loads[i] << " (excess "
               << loads[i] - caps[i] << ")";
            throw NetProfitError(os.str());
        }
        c_star_[i] = (caps[i] - loads[i]) / lam;
    }
    regime_ = classify(p.job1, p.job2, p.lambda1, p.lambda2);
}

std::array<double, 2> Model::split_barrier(double u) const {
    return {params_.b1 * u, (1.0 - params_.b1) * u};
}

const JobLaw& Model::job(int source) const {
    return source == 1 ? params_.job1 : params_.job2;
}

double Model::arrival_rate(int source) const {
    return source == 1 ? params_.lambda1 : params_.lambda2;
}

double Model::capacity(int server) const {
    return server == 1 ? params_.c1 : params_.c2;
}

}  // namespace switchsim
