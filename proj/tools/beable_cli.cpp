#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "beable/errors.hpp"
#include "beable/scenario.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;

std::optional<beable::ScenarioConfig> find_builtin(const std::string& name) {
    for (auto& cfg : beable::list_builtin_scenarios())
        if (cfg.name == name) return cfg;
    return std::nullopt;
}

beable::ScenarioConfig load_config(const std::string& source) {
    if (auto builtin = find_builtin(source)) return *builtin;

    std::ifstream in(source);
    if (!in) throw beable::InvalidInput("cannot open config file or builtin: " + source);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw beable::InvalidInput("malformed JSON in " + source + ": " + e.what());
    }
    return beable::parse_config(j);
}

struct RunOptions {
    std::string source;
    std::string format = "json";
    std::string output;
    double tol_zero = -1.0, tol_rank = -1.0, tol_feas = -1.0;
    std::int64_t seed = -1;
    int max_power = 0;
    int parallel = 1;
    bool timing = false;
};

void apply_overrides(beable::ScenarioConfig& cfg, const RunOptions& opt) {
    if (opt.tol_zero >= 0.0) cfg.tol.eps_zero = opt.tol_zero;
    if (opt.tol_rank >= 0.0) cfg.tol.eps_rank = opt.tol_rank;
    if (opt.tol_feas >= 0.0) cfg.tol.eps_feas = opt.tol_feas;
    if (opt.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opt.seed);
    if (opt.max_power > 0) cfg.max_power = opt.max_power;
}

void write_out(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw beable::InvalidInput("cannot open output file: " + path);
    out << text;
}

int cmd_run(const RunOptions& opt) {
    beable::ScenarioConfig cfg = load_config(opt.source);
    apply_overrides(cfg, opt);
    const beable::Report report = beable::run_scenario(cfg);
    write_out(beable::emit_report(report, opt.format, opt.timing), opt.output);
    return report.pass() ? kExitPass : kExitCheckFailed;
}

int cmd_verify_all(const RunOptions& opt) {
    auto configs = beable::list_builtin_scenarios();
    for (auto& cfg : configs) apply_overrides(cfg, opt);

    // reports are assembled in input order regardless of completion order
    std::vector<beable::Report> reports(configs.size());
    if (opt.parallel > 1) {
        std::vector<std::future<beable::Report>> futures;
        futures.reserve(configs.size());
        for (const auto& cfg : configs)
            futures.push_back(std::async(std::launch::async,
                                         [&cfg] { return beable::run_scenario(cfg); }));
        for (std::size_t i = 0; i < futures.size(); ++i) reports[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < configs.size(); ++i)
            reports[i] = beable::run_scenario(configs[i]);
    }

    bool ok = true;
    nlohmann::json all = nlohmann::json::array();
    std::string text;
    for (const auto& report : reports) {
        ok = ok && report.pass();
        if (opt.format == "json")
            all.push_back(beable::report_to_json(report, opt.timing));
        else
            text += beable::emit_report(report, "text", opt.timing);
    }
    write_out(opt.format == "json" ? all.dump(2) + "\n" : text, opt.output);
    return ok ? kExitPass : kExitCheckFailed;
}

int cmd_list() {
    for (const auto& cfg : beable::list_builtin_scenarios())
        std::cout << cfg.name << "  (" << cfg.kind << ")\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"beable-lab: operator-algebra checks for EPR states and beable subalgebras"};
    app.require_subcommand(1);

    RunOptions opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Report format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
        sub->add_option("--output", opt.output, "Write the report to a file");
        sub->add_option("--tol-zero", opt.tol_zero, "Override eps_zero");
        sub->add_option("--tol-rank", opt.tol_rank, "Override eps_rank");
        sub->add_option("--tol-feas", opt.tol_feas, "Override eps_feas");
        sub->add_option("--seed", opt.seed, "Override the sampling seed");
        sub->add_option("--max-power", opt.max_power, "Override the exponent scan bound");
        sub->add_option("--parallel", opt.parallel, "Run independent scenarios concurrently")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--timing", opt.timing, "Include per-check timings in the report");
    };

    CLI::App* run = app.add_subcommand("run", "Run one scenario (builtin name or JSON config)");
    run->add_option("scenario", opt.source, "Builtin scenario name or path to a JSON config")
        ->required();
    add_common(run);

    CLI::App* verify = app.add_subcommand("verify-all", "Run every builtin scenario");
    add_common(verify);

    app.add_subcommand("list", "List builtin scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (app.got_subcommand("run")) return cmd_run(opt);
        if (app.got_subcommand("verify-all")) return cmd_verify_all(opt);
        return cmd_list();
    } catch (const beable::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
