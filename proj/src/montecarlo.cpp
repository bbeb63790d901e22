#include "switchsim/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "switchsim/asymptotics_light.hpp"
#include "switchsim/errors.hpp"

namespace switchsim {

namespace {

// Everything a trajectory tells us, reduced to barrier-scale running maxima:
// each probability at level u is a comparison against one of these.
struct PathMaxima {
    double m1 = 0.0;    // sup S1 / b1
    double m2 = 0.0;    // sup S2 / b2
    double msim = 0.0;  // sup min(S1/b1, S2/b2)
    bool exhausted = false;
};

struct JumpDraw {
    double dt;
    double j1;
    double j2;
};

class JumpChain {
  public:
    JumpChain(const Model& m, Pcg32& rng) : m_(m), rng_(rng) {
        lam_ = m.lambda();
        p1_ = m.params().lambda1 / lam_;
    }

    JumpDraw next() {
        JumpDraw d;
        d.dt = rng_.exponential(1.0 / lam_);
        int source = rng_.uniform_co() < p1_ ? 1 : 2;
        double x = m_.job(source).sample(rng_);
        auto [a11, a12] = m_.params().switch_law.sample(rng_);
        double a = source == 1 ? a11 : a12;
        d.j1 = a * x;
        d.j2 = (1.0 - a) * x;
        return d;
    }

  private:
    const Model& m_;
    Pcg32& rng_;
    double lam_;
    double p1_;
};

PathMaxima walk_path(const Model& m, double u_ref, Pcg32& rng, const McConfig& cfg,
                     double margin) {
    const ModelParams& p = m.params();
    double b1 = p.b1, b2 = 1.0 - p.b1;
    double bu1 = b1 * u_ref, bu2 = b2 * u_ref;
    JumpChain chain(m, rng);
    PathMaxima out;
    double s1 = 0.0, s2 = 0.0;
    for (std::int64_t jump = 0; jump < cfg.max_jumps; ++jump) {
        JumpDraw d = chain.next();
        s1 += d.j1 - d.dt * p.c1;
        s2 += d.j2 - d.dt * p.c2;
        double r1 = s1 / b1, r2 = s2 / b2;
        out.m1 = std::max(out.m1, r1);
        out.m2 = std::max(out.m2, r2);
        out.msim = std::max(out.msim, std::min(r1, r2));
        if (out.msim > u_ref) return out;  // every flag at every level <= u_ref is set
        if (std::max(s1 - bu1, s2 - bu2) < -margin) return out;
    }
    out.exhausted = true;
    return out;
}

RuinOutcome outcome_at(const PathMaxima& pm, double u) {
    RuinOutcome o;
    o.hit1 = pm.m1 > u;
    o.hit2 = pm.m2 > u;
    o.hit_or = o.hit1 || o.hit2;
    o.hit_and = o.hit1 && o.hit2;
    o.hit_and_sim = pm.msim > u;
    o.censored = pm.exhausted && !(o.hit1 && o.hit2 && o.hit_and_sim);
    return o;
}

McEstimate finalize(std::int64_t hits, std::int64_t open, std::int64_t n) {
    McEstimate e;
    e.n = n;
    e.p_hat = static_cast<double>(hits) / static_cast<double>(n);
    e.std_err = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(n));
    e.censored_fraction = static_cast<double>(open) / static_cast<double>(n);
    return e;
}

double resolve_margin(const Model& m, const McConfig& cfg) {
    return cfg.stop_margin > 0.0 ? cfg.stop_margin : default_stop_margin(m);
}

struct BatchAccumulator {
    std::vector<std::int64_t> per_batch;  // hit counts per batch
    explicit BatchAccumulator(int n_batches) : per_batch(n_batches, 0) {}

    WorkloadEstimate finalize(const std::vector<std::int64_t>& batch_sizes,
                              std::int64_t total) const {
        WorkloadEstimate e;
        int b = static_cast<int>(per_batch.size());
        e.n_batches = b;
        e.n_samples = total;
        std::int64_t hits = 0;
        for (auto h : per_batch) hits += h;
        e.p_hat = static_cast<double>(hits) / static_cast<double>(total);
        double var = 0.0;
        for (int i = 0; i < b; ++i) {
            double bm = static_cast<double>(per_batch[i]) /
                        static_cast<double>(batch_sizes[i]);
            var += (bm - e.p_hat) * (bm - e.p_hat);
        }
        e.std_err = std::sqrt(var / (static_cast<double>(b) * (b - 1.0)));
        return e;
    }
};

}  // namespace

double default_stop_margin(const Model& model) {
    const auto& cs = model.safety_loading();
    double kappa_term = 1.0;
    if (model.regime() == Regime::Light) {
        try {
            double k1 = adjustment_coefficient(model, 1);
            double k2 = adjustment_coefficient(model, 2);
            kappa_term = std::min({k1, k2, 1.0});
        } catch (const NumericError&) {
            kappa_term = 1.0;  // no exponential decay rate available
        }
    }
    return 40.0 * std::max(cs[0], cs[1]) * model.lambda() / kappa_term;
}

double default_t_burn(const Model& model, const WorkloadConfig& cfg) {
    if (cfg.t_burn > 0.0) return cfg.t_burn;
    const auto& cs = model.safety_loading();
    const ModelParams& p = model.params();
    double mean_job =
        (p.lambda1 * p.job1.mean() + p.lambda2 * p.job2.mean()) / model.lambda();
    return 50.0 / std::min(cs[0], cs[1]) * mean_job;
}

RuinOutcome simulate_risk_path(const Model& model, double u, Pcg32& rng,
                               const McConfig& config) {
    if (!(u > 0.0)) throw ConfigError("barrier level u must be > 0");
    PathMaxima pm = walk_path(model, u, rng, config, resolve_margin(model, config));
    return outcome_at(pm, u);
}

RuinEstimates estimate_ruin(const Model& model, double u, const McConfig& config) {
    std::vector<double> grid{u};
    return estimate_ruin_grid(model, grid, config)[0];
}

std::vector<RuinEstimates> estimate_ruin_grid(const Model& model,
                                              const std::vector<double>& grid_u,
                                              const McConfig& config) {
    if (grid_u.empty()) throw ConfigError("evaluation grid is empty");
    for (double u : grid_u)
        if (!(u > 0.0)) throw ConfigError("barrier level u must be > 0");
    if (config.n_paths < 1) throw ConfigError("n_paths must be >= 1");
    double u_ref = *std::max_element(grid_u.begin(), grid_u.end());
    double margin = resolve_margin(model, config);

    size_t g = grid_u.size();
    // per level: hits for the five probabilities, then open-flag counts
    std::vector<std::array<std::int64_t, 5>> hits(g, {0, 0, 0, 0, 0});
    std::vector<std::array<std::int64_t, 5>> open(g, {0, 0, 0, 0, 0});
    for (std::int64_t k = 0; k < config.n_paths; ++k) {
        Pcg32 rng = path_rng(config.seed, static_cast<std::uint64_t>(k));
        PathMaxima pm = walk_path(model, u_ref, rng, config, margin);
        for (size_t i = 0; i < g; ++i) {
            RuinOutcome o = outcome_at(pm, grid_u[i]);
            bool flags[5] = {o.hit1, o.hit2, o.hit_or, o.hit_and, o.hit_and_sim};
            for (int f = 0; f < 5; ++f) {
                hits[i][f] += flags[f];
                open[i][f] += pm.exhausted && !flags[f];
            }
        }
    }
    std::vector<RuinEstimates> out(g);
    for (size_t i = 0; i < g; ++i) {
        out[i].psi1 = finalize(hits[i][0], open[i][0], config.n_paths);
        out[i].psi2 = finalize(hits[i][1], open[i][1], config.n_paths);
        out[i].psi_or = finalize(hits[i][2], open[i][2], config.n_paths);
        out[i].psi_and = finalize(hits[i][3], open[i][3], config.n_paths);
        out[i].psi_and_sim = finalize(hits[i][4], open[i][4], config.n_paths);
    }
    return out;
}

WorkloadEstimates simulate_workload(const Model& model, double u, const McConfig& config) {
    std::vector<double> grid{u};
    return simulate_workload_grid(model, grid, config)[0];
}

std::vector<WorkloadEstimates> simulate_workload_grid(const Model& model,
                                                      const std::vector<double>& grid_u,
                                                      const McConfig& config) {
    if (grid_u.empty()) throw ConfigError("evaluation grid is empty");
    const WorkloadConfig& wc = config.workload;
    double dt = wc.sample_interval;
    if (!(dt > 0.0)) throw ConfigError("sample_interval must be > 0");
    double t_burn = default_t_burn(model, wc);
    double t_total = wc.t_total > 0.0 ? wc.t_total : t_burn + 10000.0 * dt;
    if (!(t_burn < t_total)) throw ConfigError("workload burn-in must end before t_total");

    std::int64_t n_samples =
        static_cast<std::int64_t>(std::floor((t_total - t_burn) / dt)) + 1;
    constexpr int kBatches = 32;
    if (n_samples < 2 * kBatches)
        throw ConfigError("workload horizon too short for batch-mean errors");
    std::int64_t per_batch = n_samples / kBatches;
    std::vector<std::int64_t> batch_sizes(kBatches, per_batch);
    batch_sizes.back() += n_samples - per_batch * kBatches;

    size_t g = grid_u.size();
    std::vector<std::array<BatchAccumulator, 4>> acc;
    acc.reserve(g);
    for (size_t i = 0; i < g; ++i)
        acc.push_back({BatchAccumulator(kBatches), BatchAccumulator(kBatches),
                       BatchAccumulator(kBatches), BatchAccumulator(kBatches)});

    const ModelParams& p = model.params();
    double b1 = p.b1, b2 = 1.0 - p.b1;
    Pcg32 rng = path_rng(config.seed, 0);
    JumpChain chain(model, rng);
    double w1 = 0.0, w2 = 0.0, t = 0.0;
    double next_sample = t_burn;
    std::int64_t sample_idx = 0;

    while (sample_idx < n_samples) {
        JumpDraw d = chain.next();
        double t_next = t + d.dt;
        while (sample_idx < n_samples && next_sample <= t_next) {
            double lag = next_sample - t;
            double v1 = std::max(0.0, w1 - p.c1 * lag);
            double v2 = std::max(0.0, w2 - p.c2 * lag);
            int batch = static_cast<int>(std::min<std::int64_t>(
                sample_idx / per_batch, kBatches - 1));
            double r1 = v1 / b1, r2 = v2 / b2;
            for (size_t i = 0; i < g; ++i) {
                bool e1 = r1 > grid_u[i];
                bool e2 = r2 > grid_u[i];
                acc[i][0].per_batch[batch] += e1;
                acc[i][1].per_batch[batch] += e2;
                acc[i][2].per_batch[batch] += e1 || e2;
                acc[i][3].per_batch[batch] += e1 && e2;
            }
            ++sample_idx;
            next_sample += dt;
        }
        w1 = std::max(0.0, w1 - p.c1 * d.dt) + d.j1;
        w2 = std::max(0.0, w2 - p.c2 * d.dt) + d.j2;
        t = t_next;
    }

    std::vector<WorkloadEstimates> out(g);
    for (size_t i = 0; i < g; ++i) {
        out[i].psi1 = acc[i][0].finalize(batch_sizes, n_samples);
        out[i].psi2 = acc[i][1].finalize(batch_sizes, n_samples);
        out[i].psi_or = acc[i][2].finalize(batch_sizes, n_samples);
        out[i].psi_and_sim = acc[i][3].finalize(batch_sizes, n_samples);
    }
    return out;
}

}  // namespace switchsim
