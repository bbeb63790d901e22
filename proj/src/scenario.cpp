#include "switchsim/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "switchsim/errors.hpp"

namespace switchsim {

using nlohmann::json;

std::vector<double> UGrid::points() const {
    std::vector<double> pts;
    pts.reserve(n_points);
    if (spacing == GridSpacing::Linear) {
        double step = (u_max - u_min) / (n_points - 1);
        for (int i = 0; i < n_points; ++i) pts.push_back(u_min + step * i);
    } else {
        double lmin = std::log(u_min), lmax = std::log(u_max);
        double step = (lmax - lmin) / (n_points - 1);
        for (int i = 0; i < n_points; ++i) pts.push_back(std::exp(lmin + step * i));
    }
    pts.back() = u_max;  // guard the endpoint against rounding
    return pts;
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError("config field '" + path + "': " + what);
}

double get_num(const json& j, const std::string& path, const std::string& key) {
    if (!j.contains(key)) fail(path + "." + key, "missing");
    if (!j[key].is_number()) fail(path + "." + key, "expected a number");
    return j[key].get<double>();
}

double get_num_or(const json& j, const std::string& path, const std::string& key,
                  double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) fail(path + "." + key, "expected a number");
    return j[key].get<double>();
}

std::string get_str(const json& j, const std::string& path, const std::string& key) {
    if (!j.contains(key)) fail(path + "." + key, "missing");
    if (!j[key].is_string()) fail(path + "." + key, "expected a string");
    return j[key].get<std::string>();
}

JobLaw parse_job(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    std::string type = get_str(j, path, "type");
    try {
        if (type == "exponential") return JobLaw::exponential(get_num(j, path, "rate"));
        if (type == "pareto")
            return JobLaw::pareto(get_num(j, path, "alpha"), get_num(j, path, "scale"));
        if (type == "weibull")
            return JobLaw::weibull(get_num(j, path, "shape"), get_num(j, path, "scale"));
    } catch (const ConfigError& e) {
        fail(path, e.what());
    }
    fail(path + ".type", "unknown job law '" + type + "'");
}

std::pair<double, double> parse_beta_pair(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(path, "expected [shape, shape]");
    return {j[0].get<double>(), j[1].get<double>()};
}

SwitchLaw parse_switch(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    std::string type = get_str(j, path, "type");
    try {
        if (type == "bernoulli")
            return SwitchLaw::bernoulli(get_num(j, path, "p"), get_num(j, path, "q"));
        if (type == "deterministic")
            return SwitchLaw::deterministic(get_num(j, path, "d1"), get_num(j, path, "d2"));
        if (type == "beta") {
            if (!j.contains("a11") || !j.contains("a12"))
                fail(path, "beta switch needs a11 and a12 shape pairs");
            auto [b1, g1] = parse_beta_pair(j["a11"], path + ".a11");
            auto [b2, g2] = parse_beta_pair(j["a12"], path + ".a12");
            return SwitchLaw::beta(b1, g1, b2, g2);
        }
        if (type == "discrete") {
            if (!j.contains("atoms") || !j["atoms"].is_array())
                fail(path + ".atoms", "expected an array of [a11, a12, w]");
            std::vector<SwitchAtom> atoms;
            int idx = 0;
            for (const auto& row : j["atoms"]) {
                std::string apath = path + ".atoms[" + std::to_string(idx++) + "]";
                if (!row.is_array() || row.size() != 3) fail(apath, "expected [a11, a12, w]");
                atoms.push_back({row[0].get<double>(), row[1].get<double>(),
                                 row[2].get<double>()});
            }
            return SwitchLaw::discrete(std::move(atoms));
        }
    } catch (const ConfigError& e) {
        std::string msg = e.what();
        if (msg.rfind("config field", 0) == 0) throw;  // already annotated
        fail(path, msg);
    }
    fail(path + ".type", "unknown switch law '" + type + "'");
}

ModelParams parse_model(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    ModelParams p;
    p.lambda1 = get_num(j, path, "lambda1");
    p.lambda2 = get_num(j, path, "lambda2");
    p.c1 = get_num(j, path, "c1");
    p.c2 = get_num(j, path, "c2");
    p.b1 = get_num(j, path, "b1");
    if (!j.contains("job1")) fail(path + ".job1", "missing");
    if (!j.contains("job2")) fail(path + ".job2", "missing");
    if (!j.contains("switch")) fail(path + ".switch", "missing");
    p.job1 = parse_job(j["job1"], path + ".job1");
    p.job2 = parse_job(j["job2"], path + ".job2");
    p.switch_law = parse_switch(j["switch"], path + ".switch");
    return p;
}

UGrid parse_grid(const json& j, const std::string& path) {
    UGrid g;
    if (j.is_null()) return g;
    if (!j.is_object()) fail(path, "expected an object");
    g.u_min = get_num_or(j, path, "u_min", g.u_min);
    g.u_max = get_num_or(j, path, "u_max", g.u_max);
    double np = get_num_or(j, path, "n_points", g.n_points);
    g.n_points = static_cast<int>(np);
    if (j.contains("spacing")) {
        std::string s = get_str(j, path, "spacing");
        if (s == "linear")
            g.spacing = GridSpacing::Linear;
        else if (s == "log")
            g.spacing = GridSpacing::Log;
        else
            fail(path + ".spacing", "expected 'linear' or 'log'");
    }
    if (!(g.u_min > 0.0)) fail(path + ".u_min", "must be > 0");
    if (!(g.u_max > g.u_min)) fail(path + ".u_max", "must be > u_min");
    if (g.n_points < 2) fail(path + ".n_points", "must be >= 2");
    return g;
}

McConfig parse_mc(const json& j, const std::string& path) {
    McConfig m;
    if (j.is_null()) return m;
    if (!j.is_object()) fail(path, "expected an object");
    m.n_paths = static_cast<std::int64_t>(get_num_or(j, path, "n_paths", m.n_paths));
    m.seed = static_cast<std::uint64_t>(get_num_or(j, path, "seed", m.seed));
    m.max_jumps = static_cast<std::int64_t>(get_num_or(j, path, "max_jumps", m.max_jumps));
    m.stop_margin = get_num_or(j, path, "stop_margin", m.stop_margin);
    if (j.contains("workload")) {
        const json& w = j["workload"];
        std::string wpath = path + ".workload";
        if (!w.is_object()) fail(wpath, "expected an object");
        m.workload.t_burn = get_num_or(w, wpath, "t_burn", m.workload.t_burn);
        m.workload.t_total = get_num_or(w, wpath, "t_total", m.workload.t_total);
        m.workload.sample_interval =
            get_num_or(w, wpath, "sample_interval", m.workload.sample_interval);
    }
    if (m.n_paths < 1) fail(path + ".n_paths", "must be >= 1");
    return m;
}

json job_to_json(const JobLaw& law) {
    json j;
    switch (law.kind()) {
        case JobLaw::Kind::Exponential:
            j["type"] = "exponential";
            j["rate"] = law.param1();
            break;
        case JobLaw::Kind::Pareto:
            j["type"] = "pareto";
            j["alpha"] = law.param1();
            j["scale"] = law.param2();
            break;
        case JobLaw::Kind::Weibull:
            j["type"] = "weibull";
            j["shape"] = law.param1();
            j["scale"] = law.param2();
            break;
        case JobLaw::Kind::Custom:
            throw ConfigError("custom job laws have no JSON form");
    }
    return j;
}

json switch_to_json(const SwitchLaw& law) {
    json j;
    switch (law.kind()) {
        case SwitchLaw::Kind::Deterministic:
            j["type"] = "deterministic";
            j["d1"] = law.atoms()[0].a11;
            j["d2"] = law.atoms()[0].a12;
            break;
        case SwitchLaw::Kind::Bernoulli: {
            j["type"] = "bernoulli";
            // atom order fixes (p, q) = P(a11 = 1), P(a12 = 1)
            double p = 0.0, q = 0.0;
            for (const auto& a : law.atoms()) {
                if (a.a11 == 1.0) p += a.w;
                if (a.a12 == 1.0) q += a.w;
            }
            j["p"] = p;
            j["q"] = q;
            break;
        }
        case SwitchLaw::Kind::Beta:
            j["type"] = "beta";
            j["a11"] = {law.beta_params()[0], law.beta_params()[1]};
            j["a12"] = {law.beta_params()[2], law.beta_params()[3]};
            break;
        case SwitchLaw::Kind::Discrete: {
            j["type"] = "discrete";
            json atoms = json::array();
            for (const auto& a : law.atoms()) atoms.push_back({a.a11, a.a12, a.w});
            j["atoms"] = atoms;
            break;
        }
    }
    return j;
}

}  // namespace

Scenario scenario_from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("$", "expected a JSON object");
    Scenario sc;
    sc.name = j.contains("name") ? get_str(j, "$", "name") : "unnamed";
    if (!j.contains("model")) fail("$.model", "missing");
    sc.params = parse_model(j["model"], "$.model");
    sc.grid = parse_grid(j.contains("grid") ? j["grid"] : json(), "$.grid");
    sc.mc = parse_mc(j.contains("mc") ? j["mc"] : json(), "$.mc");
    if (j.contains("outputs")) {
        if (!j["outputs"].is_array()) fail("$.outputs", "expected an array");
        int idx = 0;
        for (const auto& o : j["outputs"]) {
            std::string opath = "$.outputs[" + std::to_string(idx++) + "]";
            if (!o.is_object()) fail(opath, "expected an object");
            OutputSpec spec;
            spec.csv_path = get_str(o, opath, "csv_path");
            if (o.contains("svg_path")) spec.svg_path = get_str(o, opath, "svg_path");
            sc.outputs.push_back(spec);
        }
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return scenario_from_json(buf.str());
}

std::string scenario_to_json(const Scenario& scenario) {
    json j;
    j["name"] = scenario.name;
    json m;
    m["lambda1"] = scenario.params.lambda1;
    m["lambda2"] = scenario.params.lambda2;
    m["c1"] = scenario.params.c1;
    m["c2"] = scenario.params.c2;
    m["b1"] = scenario.params.b1;
    m["job1"] = job_to_json(scenario.params.job1);
    m["job2"] = job_to_json(scenario.params.job2);
    m["switch"] = switch_to_json(scenario.params.switch_law);
    j["model"] = m;
    j["grid"] = {{"u_min", scenario.grid.u_min},
                 {"u_max", scenario.grid.u_max},
                 {"n_points", scenario.grid.n_points},
                 {"spacing", scenario.grid.spacing == GridSpacing::Log ? "log" : "linear"}};
    j["mc"] = {{"n_paths", scenario.mc.n_paths},
               {"seed", scenario.mc.seed},
               {"max_jumps", scenario.mc.max_jumps},
               {"stop_margin", scenario.mc.stop_margin},
               {"workload",
                {{"t_burn", scenario.mc.workload.t_burn},
                 {"t_total", scenario.mc.workload.t_total},
                 {"sample_interval", scenario.mc.workload.sample_interval}}}};
    if (!scenario.outputs.empty()) {
        json outs = json::array();
        for (const auto& o : scenario.outputs) {
            json oj = {{"csv_path", o.csv_path}};
            if (!o.svg_path.empty()) oj["svg_path"] = o.svg_path;
            outs.push_back(oj);
        }
        j["outputs"] = outs;
    }
    return j.dump(2);
}

namespace {

ModelParams shared_params() {
    ModelParams p;
    p.lambda1 = 1.0;
    p.lambda2 = 1.0;
    p.c1 = 5.0;
    p.c2 = 8.0;
    p.b1 = 0.8;
    return p;
}

void pareto_jobs(ModelParams& p) {
    p.job1 = JobLaw::pareto(1.5, 1.0);
    p.job2 = JobLaw::pareto(2.0, 2.0);
}

void exp_jobs(ModelParams& p) {
    p.job1 = JobLaw::exponential(1.0 / 3.0);
    p.job2 = JobLaw::exponential(0.25);
}

void weibull_jobs(ModelParams& p) {
    p.job1 = JobLaw::weibull(1.0 / 3.0, 0.5);
    p.job2 = JobLaw::weibull(0.5, 2.0);
}

Scenario heavy_grid(Scenario sc) {
    sc.grid = {10.0, 1000.0, 25, GridSpacing::Log};
    return sc;
}

Scenario light_grid(Scenario sc) {
    sc.grid = {2.0, 60.0, 30, GridSpacing::Linear};
    return sc;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"fig2", "fig3", "fig4",
                                                   "fig5", "fig6", "fig7"};
    return names;
}

Scenario builtin_scenario(const std::string& name) {
    Scenario sc;
    sc.name = name;
    sc.params = shared_params();
    if (name == "fig2") {
        pareto_jobs(sc.params);
        sc.params.switch_law = SwitchLaw::bernoulli(0.4, 0.7);
        sc.mc.stop_margin = 10000.0;
        return heavy_grid(sc);
    }
    if (name == "fig3") {
        exp_jobs(sc.params);
        sc.params.switch_law = SwitchLaw::bernoulli(0.4, 0.7);
        return light_grid(sc);
    }
    if (name == "fig4") {
        weibull_jobs(sc.params);
        sc.params.switch_law = SwitchLaw::deterministic(0.4, 0.7);
        sc.grid = {10.0, 2000.0, 25, GridSpacing::Log};
        sc.mc.stop_margin = 2000.0;
        return sc;
    }
    if (name == "fig5") {
        pareto_jobs(sc.params);
        sc.params.switch_law = SwitchLaw::deterministic(0.4, 0.7);
        sc.mc.stop_margin = 6000.0;
        return heavy_grid(sc);
    }
    if (name == "fig6") {
        exp_jobs(sc.params);
        sc.params.switch_law = SwitchLaw::deterministic(0.4, 0.7);
        return light_grid(sc);
    }
    if (name == "fig7") {
        pareto_jobs(sc.params);
        sc.params.switch_law = SwitchLaw::beta(1.5, 2.25, 3.0, 9.0 / 7.0);
        sc.mc.stop_margin = 6000.0;
        return heavy_grid(sc);
    }
    throw ConfigError("unknown scenario '" + name + "'; built-ins are fig2..fig7");
}

std::vector<Scenario> fig7_comparison() {
    std::vector<Scenario> out;
    Scenario base = builtin_scenario("fig7");
    auto variant = [&](const std::string& suffix, SwitchLaw sw) {
        Scenario sc = base;
        sc.name = "fig7_" + suffix;
        sc.params.switch_law = std::move(sw);
        out.push_back(std::move(sc));
    };
    variant("bernoulli", SwitchLaw::bernoulli(0.4, 0.7));
    variant("deterministic", SwitchLaw::deterministic(0.4, 0.7));
    variant("beta1", SwitchLaw::beta(0.4, 0.6, 0.7, 0.3));
    variant("beta2", base.params.switch_law);
    return out;
}

}  // namespace switchsim
