#include "beable/scenario.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "beable/algebra.hpp"
#include "beable/contexts.hpp"
#include "beable/decompositions.hpp"
#include "beable/epr.hpp"
#include "beable/errors.hpp"
#include "beable/weyl.hpp"
#include "beable/witness.hpp"

namespace beable {

double round_sig15(double x) {
    if (!std::isfinite(x)) return x;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return std::strtod(buf, nullptr);
}

// ---------------------------------------------------------------------------
// config parsing

namespace {

OperatorMatrix parse_matrix(const nlohmann::json& j, const std::string& field) {
    if (!j.is_array() || j.empty())
        throw InvalidInput("config." + field + ": matrix literal must be a nonempty array of rows");
    const std::size_t n = j.size();
    OperatorMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) {
        if (!j[r].is_array() || j[r].size() != n)
            throw InvalidInput("config." + field + ": matrix literal must be square");
        for (std::size_t c = 0; c < n; ++c) {
            const auto& e = j[r][c];
            if (!e.is_array() || e.size() != 2)
                throw InvalidInput("config." + field + ": entries must be [re, im] pairs");
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

std::vector<OperatorMatrix> parse_matrix_list(const nlohmann::json& j,
                                              const std::string& field) {
    std::vector<OperatorMatrix> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_matrix(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

ScenarioConfig parse_config(const nlohmann::json& j) {
    ScenarioConfig cfg;
    if (!j.contains("name") || !j["name"].is_string())
        throw InvalidInput("config.name: required string");
    cfg.name = j["name"].get<std::string>();
    if (!j.contains("kind") || !j["kind"].is_string())
        throw InvalidInput("config.kind: required string");
    cfg.kind = j["kind"].get<std::string>();
    if (cfg.kind != "singlet" && cfg.kind != "theorem1" && cfg.kind != "weyl_finite" &&
        cfg.kind != "custom")
        throw InvalidInput("config.kind: must be one of singlet|theorem1|weyl_finite|custom");

    const nlohmann::json params =
        j.contains("parameters") ? j["parameters"] : nlohmann::json::object();
    auto get_int = [&](const char* key, int def) {
        return params.contains(key) ? params[key].get<int>() : def;
    };
    if (params.contains("dims")) cfg.dims = params["dims"].get<std::vector<int>>();
    if (params.contains("lattice_sites"))
        cfg.lattice_sites = params["lattice_sites"].get<std::vector<int>>();
    if (params.contains("region1")) cfg.region1 = params["region1"].get<std::vector<int>>();
    if (params.contains("region2")) cfg.region2 = params["region2"].get<std::vector<int>>();
    cfg.d = get_int("d", 2);
    cfg.u = get_int("u", 0);
    cfg.v = get_int("v", 0);
    cfg.a = get_int("a", 1);
    cfg.b = get_int("b", 1);
    cfg.max_power = get_int("max_power", 4);
    cfg.n_symmetry_samples = get_int("n_symmetry_samples", 8);
    if (params.contains("seed")) cfg.seed = params["seed"].get<std::uint64_t>();
    if (params.contains("generators1"))
        cfg.generators1 = parse_matrix_list(params["generators1"], "parameters.generators1");
    if (params.contains("generators2"))
        cfg.generators2 = parse_matrix_list(params["generators2"], "parameters.generators2");
    if (params.contains("pool")) cfg.pool = parse_matrix_list(params["pool"], "parameters.pool");

    if (j.contains("tolerances")) {
        const auto& t = j["tolerances"];
        if (t.contains("eps_zero")) cfg.tol.eps_zero = t["eps_zero"].get<double>();
        if (t.contains("eps_rank")) cfg.tol.eps_rank = t["eps_rank"].get<double>();
        if (t.contains("eps_feas")) cfg.tol.eps_feas = t["eps_feas"].get<double>();
    }
    if (cfg.tol.eps_zero < 0.0 || cfg.tol.eps_rank < 0.0 || cfg.tol.eps_feas < 0.0)
        throw InvalidInput("config.tolerances: negative tolerance");

    if (cfg.kind == "theorem1" && cfg.dims.empty() && cfg.lattice_sites.empty())
        throw InvalidInput("config.parameters: theorem1 needs dims or lattice_sites");
    if (cfg.kind == "theorem1" && !cfg.lattice_sites.empty() &&
        (cfg.region1.empty() || cfg.region2.empty()))
        throw InvalidInput("config.parameters: lattice layout needs region1 and region2");
    if (cfg.kind == "custom" && (cfg.generators1.empty() || cfg.generators2.empty()))
        throw InvalidInput("config.parameters: custom needs generators1 and generators2");
    if (cfg.kind == "weyl_finite" && cfg.d < 2)
        throw InvalidInput("config.parameters.d: must be >= 2");
    return cfg;
}

// ---------------------------------------------------------------------------
// builtins

std::vector<ScenarioConfig> list_builtin_scenarios() {
    std::vector<ScenarioConfig> out;
    auto add = [&](ScenarioConfig cfg) { out.push_back(std::move(cfg)); };

    {
        ScenarioConfig c;
        c.name = "bohm-singlet";
        c.kind = "singlet";
        add(c);
    }
    for (const auto& [name, p, q] :
         {std::tuple<const char*, int, int>{"theorem1-2x2", 2, 2},
          std::tuple<const char*, int, int>{"theorem1-2x3", 2, 3},
          std::tuple<const char*, int, int>{"theorem1-3x3", 3, 3}}) {
        ScenarioConfig c;
        c.name = name;
        c.kind = "theorem1";
        c.dims = {p, q};
        add(c);
    }
    {
        // two single-site regions with a spectator site between them
        ScenarioConfig c;
        c.name = "lattice-local-algebras";
        c.kind = "theorem1";
        c.lattice_sites = {2, 2, 2};
        c.region1 = {0};
        c.region2 = {2};
        add(c);
    }
    for (int d : {2, 3, 5}) {
        ScenarioConfig c;
        c.name = "weyl-d" + std::to_string(d);
        c.kind = "weyl_finite";
        c.d = d;
        add(c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// scenario execution

namespace {

class CheckRunner {
  public:
    explicit CheckRunner(Report& report) : report_(report) {}

    /// f fills `measured` and returns pass/fail.
    void run(const std::string& id, const std::string& anchor, double tolerance,
             const std::function<bool(std::map<std::string, double>&, std::string&)>& f) {
        CheckResult c;
        c.id = id;
        c.anchor = anchor;
        c.tolerance = tolerance;
        const auto start = std::chrono::steady_clock::now();
        try {
            std::string note;
            const bool ok = f(c.measured, note);
            c.note = note;
            c.status = ok ? "pass" : "fail";
        } catch (const PremiseFailure& e) {
            c.status = "skipped";
            c.note = e.what();
        } catch (const std::exception& e) {
            c.status = "fail";
            c.note = e.what();
        }
        c.time_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        report_.checks.push_back(std::move(c));
    }

  private:
    Report& report_;
};

std::vector<OperatorMatrix> factor_generators(const std::vector<int>& dims, int which) {
    std::vector<OperatorMatrix> gens;
    const WeylSystem w = clock_shift(dims[static_cast<std::size_t>(which)]);
    for (const OperatorMatrix* g : {&w.clock, &w.shift}) {
        OperatorMatrix full = OperatorMatrix::Ones(1, 1);
        for (std::size_t s = 0; s < dims.size(); ++s)
            full = kron(full, static_cast<int>(s) == which
                                  ? *g
                                  : identity(dims[s]));
        gens.push_back(full);
    }
    return gens;
}

std::vector<OperatorMatrix> region_generators(const std::vector<int>& sites,
                                              const std::vector<int>& region) {
    std::vector<OperatorMatrix> gens;
    for (int site : region) {
        if (site < 0 || site >= static_cast<int>(sites.size()))
            throw InvalidInput("lattice region references a missing site");
        const WeylSystem w = clock_shift(sites[static_cast<std::size_t>(site)]);
        for (const OperatorMatrix* g : {&w.clock, &w.shift}) {
            OperatorMatrix full = OperatorMatrix::Ones(1, 1);
            for (std::size_t s = 0; s < sites.size(); ++s)
                full = kron(full, static_cast<int>(s) == site ? *g : identity(sites[s]));
            gens.push_back(full);
        }
    }
    return gens;
}

std::vector<TrigPolynomial> standard_trig_samples() {
    std::vector<TrigPolynomial> fs;
    fs.push_back({{Complex(1.0, 0.0)}, {0.0}});                          // constant
    fs.push_back({{Complex(1.0, 0.0)}, {1.0}});                          // e^{ix}
    fs.push_back({{Complex(0.5, 0.0), Complex(0.5, 0.0)}, {1.0, -1.0}}); // cos
    fs.push_back({{Complex(0.3, 0.1), Complex(0.2, -0.4), Complex(0.1, 0.0)},
                  {0.7, -1.3, 2.1}});
    return fs;
}

void run_epr_pair_checks(CheckRunner& runner, const std::string& prefix,
                         const std::string& anchor, const State& phi,
                         const CommutingPair& pair, const ToleranceConfig& tol) {
    runner.run(prefix + "-epr", anchor, tol.eps_zero,
               [&](std::map<std::string, double>& m, std::string&) {
                   const auto d = is_epr_state(phi, pair, tol);
                   m["moment"] = d.moment;
                   m["diagonal_mass"] = d.diagonal_mass;
                   m["max_grid_deviation"] = d.max_grid_deviation;
                   return d.epr && std::abs(d.diagonal_mass - 1.0) < tol.eps_feas &&
                          d.max_grid_deviation < tol.eps_feas;
               });
}

void run_singlet(const ScenarioConfig& cfg, Report& report) {
    const ToleranceConfig& tol = cfg.tol;
    CheckRunner runner(report);
    const SingletScenario sc = singlet_scenario();

    run_epr_pair_checks(runner, "pair1", "sec2-bohm-singlet", sc.phi, sc.pair1, tol);
    run_epr_pair_checks(runner, "pair2", "sec2-bohm-singlet", sc.phi, sc.pair2, tol);

    runner.run("joint-distribution-moments", "eq1-joint-distribution", tol.eps_feas,
               [&](std::map<std::string, double>& m, std::string&) {
                   const auto mu = joint_distribution(sc.pair1, sc.phi, tol);
                   m["diagonal_mass"] = mu.diagonal_mass();
                   m["moment_residual"] = mu.moment_check_residual;
                   return std::abs(mu.diagonal_mass() - 1.0) < tol.eps_feas &&
                          mu.moment_check_residual < tol.eps_feas;
               });

    runner.run("incommensurability", "sec2-incommensurable-pairs", tol.eps_zero,
               [&](std::map<std::string, double>& m, std::string&) {
                   const auto r =
                       incommensurability_check(sc.phi, sc.pair1, sc.pair2, cfg.max_power, tol);
                   m["modulus_side1"] = r.side1.max_modulus;
                   m["modulus_side2"] = r.side2.max_modulus;
                   return r.incommensurable &&
                          std::abs(r.side1.max_modulus - 0.25) < tol.eps_zero * 100.0 &&
                          std::abs(r.side2.max_modulus - 0.25) < tol.eps_zero * 100.0;
               });

    const MeasurementContext ctx{sc.phi, sc.pair1.first};
    const StarAlgebra b =
        generate_algebra({sc.pair1.first, sc.pair1.second}, 4, tol);

    runner.run("theorem2-transfer", "theorem2", tol.eps_feas,
               [&](std::map<std::string, double>& m, std::string&) {
                   const auto rep = verify_theorem2(ctx, sc.pair1.second, b, cfg.max_power,
                                                    32, cfg.seed, tol);
                   m["max_modulus"] = rep.max_modulus;
                   m["max_vt_deviation"] = rep.max_vt_deviation;
                   m["max_span_residual"] = rep.max_span_residual;
                   return rep.pass;
               });

    const double exclusion_floor = 1e-2;
    for (const auto& [id, cand] :
         {std::pair<const char*, const OperatorMatrix*>{"exclusion-b1", &sc.pair2.first},
          std::pair<const char*, const OperatorMatrix*>{"exclusion-b2", &sc.pair2.second}}) {
        runner.run(id, "theorem3", exclusion_floor,
                   [&, cand = cand](std::map<std::string, double>& m, std::string&) {
                       const auto rep = verify_exclusion(ctx, sc.pair1, sc.pair2, *cand,
                                                         cfg.max_power, tol);
                       m["violation"] = rep.violation;
                       return rep.excluded && rep.violation >= exclusion_floor;
                   });
    }
    runner.run("admissible-partner", "theorem2", tol.eps_zero,
               [&](std::map<std::string, double>& m, std::string&) {
                   const auto rep = verify_exclusion(ctx, sc.pair1, sc.pair2,
                                                     sc.pair1.second, cfg.max_power, tol);
                   m["violation"] = rep.violation;
                   return !rep.excluded;
               });

    runner.run("howard-mixture", "sec3-howard-strategy", tol.eps_feas,
               [&](std::map<std::string, double>& m, std::string&) {
                   std::vector<OperatorMatrix> pool = {sc.pair1.second, sc.pair2.second};
                   for (const auto& p : cfg.pool) pool.push_back(p);
                   const auto mix = build_appropriate_mixture(ctx, pool, cfg.max_power, tol);
                   m["admitted"] = 0.0;
                   for (const auto& e : mix.log)
                       if (e.admitted) m["admitted"] += 1.0;
                   const auto after = check_beable_subalgebra(mix.algebra, ctx,
                                                              cfg.n_symmetry_samples,
                                                              cfg.seed, tol);
                   m["classicality_residual"] = after.classicality_residual;
                   // the perfectly correlated partner is admitted, its
                   // incommensurable companion is rejected
                   return mix.log.size() >= 2 && mix.log[0].admitted && !mix.log[1].admitted &&
                          after.beable_ok && after.a_priv_ok;
               });

    runner.run("function-transport", "prop4-function-transport", tol.eps_feas,
               [&](std::map<std::string, double>& m, std::string&) {
                   const auto res =
                       epr_function_transport(sc.phi, sc.pair1, standard_trig_samples(), tol);
                   double worst = 0.0;
                   for (double r : res) worst = std::max(worst, r);
                   m["max_residual"] = worst;
                   return worst < tol.eps_feas;
               });
}

void run_theorem1(const ScenarioConfig& cfg, Report& report) {
    const ToleranceConfig& tol = cfg.tol;
    CheckRunner runner(report);

    Eigen::Index ambient = 1;
    std::vector<OperatorMatrix> gens1, gens2;
    std::string layout_anchor = "theorem1";
    if (!cfg.lattice_sites.empty()) {
        for (int d : cfg.lattice_sites) ambient *= d;
        gens1 = region_generators(cfg.lattice_sites, cfg.region1);
        gens2 = region_generators(cfg.lattice_sites, cfg.region2);
        layout_anchor = "sec6-local-algebras";
    } else if (cfg.kind == "custom") {
        ambient = cfg.generators1.front().rows();
        gens1 = cfg.generators1;
        gens2 = cfg.generators2;
    } else {
        if (cfg.dims.size() != 2) throw InvalidInput("theorem1 dims must have two entries");
        ambient = Eigen::Index(cfg.dims[0]) * cfg.dims[1];
        gens1 = factor_generators(cfg.dims, 0);
        gens2 = factor_generators(cfg.dims, 1);
    }

    const StarAlgebra n1 = generate_algebra(gens1, ambient, tol);
    const StarAlgebra n2 = generate_algebra(gens2, ambient, tol);

    std::optional<EPRWitness> witness;
    runner.run("construction", layout_anchor, tol.eps_zero,
               [&](std::map<std::string, double>& m, std::string&) {
                   witness.emplace(theorem1_construct(n1, n2, tol, cfg.max_power));
                   m["dim_n1"] = double(n1.dim());
                   m["dim_n2"] = double(n2.dim());
                   return true;
               });
    if (!witness) return;
    const EPRWitness& wit = *witness;

    report.witnesses["theorem1"] = {
        {"expectations",
         {round_sig15(wit.expectations[0]), round_sig15(wit.expectations[1]),
          round_sig15(wit.expectations[2]), round_sig15(wit.expectations[3]),
          round_sig15(wit.expectations[4]), round_sig15(wit.expectations[5])}},
        {"modulus_side1", round_sig15(wit.side1.max_modulus)},
        {"modulus_side2", round_sig15(wit.side2.max_modulus)},
    };

    runner.run("expectations-one-half", "theorem1-proof", tol.eps_zero,
               [&](std::map<std::string, double>& m, std::string&) {
                   double worst = 0.0;
                   for (double e : wit.expectations) worst = std::max(worst, std::abs(e - 0.5));
                   m["max_deviation"] = worst;
                   return worst < tol.eps_zero;
               });

    runner.run("perfect-correlation", "theorem1", tol.eps_zero,
               [&](std::map<std::string, double>& m, std::string&) {
                   m["moment_e"] = wit.epr_moment_e;
                   m["moment_f"] = wit.epr_moment_f;
                   return wit.epr_moment_e < tol.eps_zero && wit.epr_moment_f < tol.eps_zero;
               });

    const double modulus_floor = 1e-6;
    runner.run("incommensurability-moduli", "theorem1", modulus_floor,
               [&](std::map<std::string, double>& m, std::string&) {
                   m["modulus_side1"] = wit.side1.max_modulus;
                   m["modulus_side2"] = wit.side2.max_modulus;
                   return wit.side1.max_modulus > modulus_floor &&
                          wit.side2.max_modulus > modulus_floor;
               });

    run_epr_pair_checks(runner, "pair-e", "theorem1", wit.phi, {wit.e1, wit.e2}, tol);
    run_epr_pair_checks(runner, "pair-f", "theorem1", wit.phi, {wit.f1, wit.f2}, tol);

    const MeasurementContext ctx{wit.phi, wit.e1};
    const StarAlgebra b = generate_algebra({wit.e1, wit.e2}, ambient, tol);
    runner.run("theorem2-transfer", "theorem2", tol.eps_feas,
               [&](std::map<std::string, double>& m, std::string&) {
                   const auto rep = verify_theorem2(ctx, wit.e2, b, cfg.max_power, 32,
                                                    cfg.seed, tol);
                   m["max_modulus"] = rep.max_modulus;
                   m["max_vt_deviation"] = rep.max_vt_deviation;
                   m["max_span_residual"] = rep.max_span_residual;
                   return rep.pass;
               });

    const CommutingPair pe{wit.e1, wit.e2};
    const CommutingPair pf{wit.f1, wit.f2};
    const double exclusion_floor = 1e-2;
    for (const auto& [id, cand] :
         {std::pair<const char*, const OperatorMatrix*>{"exclusion-f1", &wit.f1},
          std::pair<const char*, const OperatorMatrix*>{"exclusion-f2", &wit.f2}}) {
        runner.run(id, "theorem3", exclusion_floor,
                   [&, cand = cand](std::map<std::string, double>& m, std::string&) {
                       const auto rep =
                           verify_exclusion(ctx, pe, pf, *cand, cfg.max_power, tol);
                       m["violation"] = rep.violation;
                       return rep.excluded && rep.violation >= exclusion_floor;
                   });
    }
    runner.run("admissible-partner", "theorem2", tol.eps_zero,
               [&](std::map<std::string, double>& m, std::string&) {
                   const auto rep = verify_exclusion(ctx, pe, pf, wit.e2, cfg.max_power, tol);
                   m["violation"] = rep.violation;
                   return !rep.excluded;
               });

    runner.run("howard-mixture", "sec3-howard-strategy", tol.eps_feas,
               [&](std::map<std::string, double>& m, std::string&) {
                   const auto mix =
                       build_appropriate_mixture(ctx, {wit.e2, wit.f2}, cfg.max_power, tol);
                   m["admitted"] = 0.0;
                   for (const auto& e : mix.log)
                       if (e.admitted) m["admitted"] += 1.0;
                   return mix.log.size() == 2 && mix.log[0].admitted && !mix.log[1].admitted;
               });

    runner.run("function-transport", "prop4-function-transport", tol.eps_feas,
               [&](std::map<std::string, double>& m, std::string&) {
                   const auto res =
                       epr_function_transport(wit.phi, pe, standard_trig_samples(), tol);
                   double worst = 0.0;
                   for (double r : res) worst = std::max(worst, r);
                   m["max_residual"] = worst;
                   return worst < tol.eps_feas;
               });
}

void run_weyl(const ScenarioConfig& cfg, Report& report) {
    const ToleranceConfig& tol = cfg.tol;
    CheckRunner runner(report);
    const WeylSystem sys = clock_shift(cfg.d);
    const FiniteEPRState st = finite_epr_state(cfg.d, cfg.u, cfg.v);

    runner.run("weyl-relation", "sec5-weyl-relation", 1e-13,
               [&](std::map<std::string, double>& m, std::string&) {
                   const double r = (sys.clock * sys.shift -
                                     sys.omega * sys.shift * sys.clock)
                                        .norm();
                   m["relation_residual"] = r;
                   return r < 1e-13;
               });

    runner.run("correlator-grid", "eq3-canonical-epr-state", tol.eps_zero,
               [&](std::map<std::string, double>& m, std::string&) {
                   const double r = st.correlator_grid_residual(sys);
                   m["grid_residual"] = r;
                   return r < tol.eps_zero;
               });

    runner.run("theorem9-contradiction", "theorem9-proof", 1e-12,
               [&](std::map<std::string, double>& m, std::string&) {
                   const auto rep =
                       theorem9_exclusion(cfg.d, cfg.u, cfg.v, cfg.a, cfg.b, tol);
                   m["measured_modulus"] = rep.measured_modulus;
                   m["contradiction_magnitude"] = rep.contradiction_magnitude;
                   const double analytic = std::abs(
                       1.0 - std::pow(sys.omega, cfg.a * cfg.b));
                   m["analytic_magnitude"] = analytic;
                   return rep.epr_premise_ok && rep.measured_modulus > tol.eps_zero &&
                          std::abs(rep.contradiction_magnitude - analytic) < 1e-12;
               });

    const CommutingPair clock_pair = clock_observable_pair(st);
    run_epr_pair_checks(runner, "clock-pair", "theorem4", st.phi, clock_pair, tol);

    runner.run("theorem2-transfer", "theorem2", tol.eps_feas,
               [&](std::map<std::string, double>& m, std::string&) {
                   const MeasurementContext ctx{st.phi, clock_pair.first};
                   const StarAlgebra b = generate_algebra(
                       {clock_pair.first, clock_pair.second}, Eigen::Index(cfg.d) * cfg.d, tol);
                   const auto rep = verify_theorem2(ctx, clock_pair.second, b,
                                                    cfg.max_power, 32, cfg.seed, tol);
                   m["max_modulus"] = rep.max_modulus;
                   m["max_vt_deviation"] = rep.max_vt_deviation;
                   m["max_span_residual"] = rep.max_span_residual;
                   return rep.pass;
               });

    runner.run("function-transport", "prop4-function-transport", tol.eps_feas,
               [&](std::map<std::string, double>& m, std::string&) {
                   const auto res = finite_ap_transport(st, 4, cfg.seed, tol);
                   double worst = 0.0;
                   for (double r : res) worst = std::max(worst, r);
                   m["max_residual"] = worst;
                   return worst < tol.eps_feas;
               });
}

}  // namespace

Report run_scenario(const ScenarioConfig& config) {
    Report report;
    report.scenario = config.name;
    report.seed = config.seed;
    report.tol = config.tol;
    report.witnesses = nlohmann::json::object();

    // a zero tolerance silently vacates every strict-inequality check, so it
    // is reported as a failing check rather than trusted
    if (config.tol.eps_zero <= 0.0 || config.tol.eps_rank <= 0.0 ||
        config.tol.eps_feas <= 0.0) {
        CheckResult c;
        c.id = "tolerance-sanity";
        c.anchor = "tolerances";
        c.status = "fail";
        c.note = "all tolerances must be strictly positive";
        c.measured = {{"eps_zero", config.tol.eps_zero},
                      {"eps_rank", config.tol.eps_rank},
                      {"eps_feas", config.tol.eps_feas}};
        report.checks.push_back(std::move(c));
    }

    try {
        if (config.kind == "singlet") {
            run_singlet(config, report);
        } else if (config.kind == "theorem1" || config.kind == "custom") {
            run_theorem1(config, report);
        } else if (config.kind == "weyl_finite") {
            run_weyl(config, report);
        } else {
            throw InvalidInput("unknown scenario kind: " + config.kind);
        }
    } catch (const InvalidInput&) {
        throw;  // configuration errors propagate to the exit-code contract
    } catch (const std::exception& e) {
        CheckResult c;
        c.id = "scenario-execution";
        c.anchor = config.kind;
        c.status = "fail";
        c.note = e.what();
        report.checks.push_back(std::move(c));
    }
    return report;
}

// ---------------------------------------------------------------------------
// serialization

nlohmann::json report_to_json(const Report& report, bool include_timing) {
    nlohmann::json j;
    j["schema"] = "beable-lab/1";
    j["scenario"] = report.scenario;
    j["seed"] = report.seed;
    j["status"] = report.pass() ? "pass" : "fail";
    j["tolerances"] = {{"eps_zero", round_sig15(report.tol.eps_zero)},
                       {"eps_rank", round_sig15(report.tol.eps_rank)},
                       {"eps_feas", round_sig15(report.tol.eps_feas)}};
    j["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json cj;
        cj["id"] = c.id;
        cj["anchor"] = c.anchor;
        cj["status"] = c.status;
        cj["tolerance"] = round_sig15(c.tolerance);
        cj["measured"] = nlohmann::json::object();
        for (const auto& [k, v] : c.measured) cj["measured"][k] = round_sig15(v);
        if (!c.note.empty()) cj["note"] = c.note;
        if (include_timing) cj["time_ms"] = round_sig15(c.time_ms);
        j["checks"].push_back(std::move(cj));
    }
    j["witnesses"] = report.witnesses;
    return j;
}

std::string emit_report(const Report& report, const std::string& format,
                        bool include_timing) {
    if (format == "json") return report_to_json(report, include_timing).dump(2) + "\n";
    if (format != "text") throw InvalidInput("emit_report: unknown format " + format);

    std::ostringstream out;
    out << "scenario " << report.scenario << " (seed " << report.seed << ")\n";
    for (const auto& c : report.checks) {
        out << "  [" << c.status << "] " << c.id << "  anchor=" << c.anchor
            << "  tol=" << c.tolerance;
        for (const auto& [k, v] : c.measured) out << "  " << k << "=" << round_sig15(v);
        if (!c.note.empty()) out << "  (" << c.note << ")";
        if (include_timing) out << "  [" << c.time_ms << " ms]";
        out << "\n";
    }
    out << "  overall: " << (report.pass() ? "pass" : "fail") << "\n";
    return out.str();
}

}  // namespace beable
