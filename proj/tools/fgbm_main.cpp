// Command line front end: synthesis, verification, and pricing runs with
// reproducible file outputs. Every run emits a manifest with content digests
// of the files it wrote.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fgbm/config.hpp"
#include "fgbm/csv.hpp"
#include "fgbm/parallel.hpp"
#include "fgbm/pricing.hpp"
#include "fgbm/scenario_mc.hpp"
#include "fgbm/stats.hpp"
#include "fgbm/verify_suites.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

std::uint64_t fnv1a64_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("manifest: cannot digest " + path.string());
    std::uint64_t h = 14695981039346656037ULL;
    char buf[8192];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ULL;
        }
        if (got < static_cast<std::streamsize>(sizeof(buf))) break;
    }
    return h;
}

std::string digest_string(std::uint64_t h) {
    std::ostringstream os;
    os << "fnv1a64:" << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

// Collects output files and writes <dir>/manifest.json as the final step of
// a command, so a manifest only ever describes files that exist.
class ManifestWriter {
  public:
    ManifestWriter(std::string command, fs::path dir)
        : command_(std::move(command)), dir_(std::move(dir)),
          start_(std::chrono::steady_clock::now()) {}

    void set_config(json cfg) { config_ = std::move(cfg); }
    void set_seed(std::uint64_t s) { seed_ = s; }
    void add_output(const std::string& name) { outputs_.push_back(name); }

    void write() const {
        json m;
        m["command"] = command_;
        m["config"] = config_;
        m["seed"] = seed_;
        m["versions"] = {{"fgbm", fgbm::kVersion}, {"manifest", 1}};
        m["wall_clock_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        json files = json::array();
        for (const auto& name : outputs_)
            files.push_back({{"file", name}, {"digest", digest_string(fnv1a64_file(dir_ / name))}});
        m["outputs"] = files;
        std::ofstream out(dir_ / "manifest.json", std::ios::binary);
        if (!out) throw std::runtime_error("manifest: cannot open " + (dir_ / "manifest.json").string());
        out << m.dump(2) << '\n';
    }

  private:
    std::string command_;
    fs::path dir_;
    std::chrono::steady_clock::time_point start_;
    json config_;
    std::uint64_t seed_ = 0;
    std::vector<std::string> outputs_;
};

void write_json_file(const fs::path& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << j.dump(2) << '\n';
}

struct CommonFlags {
    std::string config_file;
    std::size_t threads = 0;
    std::string out_dir;
};

// Layered resolution: defaults, then the config file, then explicit flags.
fgbm::Config layered_config(const CLI::App* cmd, const std::string& config_file,
                            const std::vector<std::pair<std::string, std::string>>& flag_keys) {
    fgbm::Config cfg = fgbm::Config::defaults();
    if (!config_file.empty()) cfg.merge(fgbm::Config::from_file(config_file));
    for (const auto& [flag, key] : flag_keys) {
        const CLI::Option* opt = cmd->get_option(flag);
        if (opt->count() > 0) cfg.set(key, opt->as<std::string>());
    }
    return cfg;
}

json config_echo(const fgbm::Config& cfg) {
    json j = json::object();
    for (const auto& [k, v] : cfg.entries()) j[k] = v;
    return j;
}

void write_ensemble_csv(const fs::path& path, const fgbm::PathEnsemble& ens) {
    std::vector<std::string> header;
    header.push_back("path");
    for (std::size_t i = 0; i < ens.grid.size(); ++i)
        header.push_back("t" + fgbm::format_double(ens.grid.point(i)));
    std::vector<std::vector<double>> rows(ens.num_paths);
    for (std::size_t p = 0; p < ens.num_paths; ++p) {
        rows[p].reserve(ens.grid.size() + 1);
        rows[p].push_back(static_cast<double>(p));
        for (std::size_t i = 0; i < ens.grid.size(); ++i) rows[p].push_back(ens.at(p, i));
    }
    fgbm::write_csv(path.string(), header, rows);
}

json ensemble_stats(const fgbm::PathEnsemble& ens, double sigma) {
    const fgbm::CovarianceEstimate cov = fgbm::sample_covariance(ens);
    const std::size_t np = cov.np;
    json j;
    j["sigma"] = sigma;
    j["num_paths"] = ens.num_paths;
    json mean = json::array(), var = json::array();
    for (std::size_t i = 0; i < np; ++i) {
        double m = 0.0;
        for (std::size_t p = 0; p < ens.num_paths; ++p) m += ens.at(p, i);
        mean.push_back(m / static_cast<double>(ens.num_paths));
        var.push_back(cov.mean[i * np + i]);
    }
    j["mean"] = mean;
    j["variance"] = var;
    if (np <= 128) {
        json rows = json::array();
        for (std::size_t i = 0; i < np; ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < np; ++k) row.push_back(cov.mean[i * np + k]);
            rows.push_back(row);
        }
        j["covariance"] = rows;
    } else {
        j["covariance_omitted"] = "grid larger than 128 points";
    }
    j["warnings"] = ens.warnings;
    return j;
}

fgbm::GeneratorKind parse_method(const std::string& s) {
    if (s == "cholesky") return fgbm::GeneratorKind::CovFactor;
    if (s == "movavg") return fgbm::GeneratorKind::MovingAverage;
    if (s == "wavelet") return fgbm::GeneratorKind::Wavelet;
    throw CLI::ValidationError("--method", "expected cholesky, movavg or wavelet");
}

int run_synth(const CLI::App* cmd, const CommonFlags& common, const std::string& method,
              std::size_t num_paths) {
    const fgbm::Config cfg = layered_config(cmd, common.config_file,
                                            {{"--hurst", "hurst"},
                                             {"--sigma-lo", "sigma_lo"},
                                             {"--sigma-hi", "sigma_hi"},
                                             {"--grid-n", "grid.n"},
                                             {"--horizon", "horizon"},
                                             {"--seed", "seed"}});
    const fgbm::HurstIndex h(cfg.get_double("hurst"));
    const fgbm::VolatilityBand band(cfg.get_double("sigma_lo"), cfg.get_double("sigma_hi"));
    const fgbm::TimeGrid grid(0.0, cfg.get_double("horizon"), cfg.get_size("grid.n"));
    const std::uint64_t seed = cfg.get_u64("seed");

    fgbm::ScenarioMcConfig mc;
    mc.generator = parse_method(method);
    mc.threads = common.threads;

    const fs::path dir(common.out_dir);
    fs::create_directories(dir);
    ManifestWriter manifest("synth", dir);
    json echo = config_echo(cfg);
    echo["method"] = method;
    echo["paths"] = num_paths;
    echo["threads"] = common.threads;
    manifest.set_config(echo);
    manifest.set_seed(seed);

    const fgbm::SeedSpec spec{seed, fgbm::seed_stream::kPaths};
    json stats;
    stats["config"] = echo;
    const struct {
        const char* tag;
        double sigma;
    } sides[] = {{"hi", band.hi}, {"lo", band.lo}};
    for (const auto& side : sides) {
        const fgbm::PathEnsemble ens = fgbm::generate_ensemble(
            h, grid, fgbm::VolatilityScenario::constant(side.sigma), num_paths, spec, mc);
        const std::string csv_name = std::string("paths_") + side.tag + ".csv";
        write_ensemble_csv(dir / csv_name, ens);
        manifest.add_output(csv_name);
        if (num_paths >= 2) stats[side.tag] = ensemble_stats(ens, side.sigma);
    }
    write_json_file(dir / "stats.json", stats);
    manifest.add_output("stats.json");
    manifest.write();
    std::cout << "synth: wrote " << (dir / "manifest.json").string() << "\n";
    return kExitOk;
}

int run_verify(const std::string& suite, const CommonFlags& common, std::uint64_t seed) {
    std::vector<std::string> suites;
    if (suite == "all") {
        suites = fgbm::verify_suite_names();
    } else {
        suites.push_back(suite);
    }

    const fs::path dir(common.out_dir);
    fs::create_directories(dir);
    ManifestWriter manifest("verify", dir);
    manifest.set_config({{"suite", suite}, {"seed", seed}, {"threads", common.threads}});
    manifest.set_seed(seed);

    bool all_pass = true;
    json report;
    report["suites"] = json::array();
    for (const auto& name : suites) {
        const fgbm::SuiteReport r = fgbm::run_verify_suite(name, seed, common.threads);
        json js;
        js["suite"] = r.suite;
        js["pass"] = r.pass();
        js["elapsed_seconds"] = r.elapsed_seconds;
        js["checks"] = json::array();
        for (const auto& c : r.checks) {
            js["checks"].push_back({{"name", c.name},
                                    {"pass", c.pass},
                                    {"measured", c.measured},
                                    {"bound", c.bound},
                                    {"note", c.note}});
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << r.suite << "/" << c.name
                      << "  measured=" << c.measured << " bound=" << c.bound << "\n";
        }
        report["suites"].push_back(js);
        all_pass = all_pass && r.pass();
    }
    report["pass"] = all_pass;
    write_json_file(dir / "report.json", report);
    manifest.add_output("report.json");
    manifest.write();
    std::cout << (all_pass ? "verify: all checks passed\n" : "verify: FAILURES present\n");
    return all_pass ? kExitOk : kExitNumerical;
}

int run_price(const CLI::App* cmd, const CommonFlags& common, const std::string& payoff_name,
              const std::string& engine_name, double strike, double spot, double rate,
              double maturity, std::size_t num_paths) {
    const fgbm::Config cfg = layered_config(cmd, common.config_file,
                                            {{"--hurst", "hurst"},
                                             {"--sigma-lo", "sigma_lo"},
                                             {"--sigma-hi", "sigma_hi"},
                                             {"--seed", "seed"},
                                             {"--scenarios", "scenarios.m"}});
    const fgbm::HurstIndex h(cfg.get_double("hurst"));
    const fgbm::VolatilityBand band(cfg.get_double("sigma_lo"), cfg.get_double("sigma_hi"));
    const std::uint64_t seed = cfg.get_u64("seed");
    const std::size_t scenarios_m = cfg.get_size("scenarios.m");

    fgbm::Payoff payoff;
    if (payoff_name == "call") payoff.kind = fgbm::PayoffKind::Call;
    else if (payoff_name == "put") payoff.kind = fgbm::PayoffKind::Put;
    else throw CLI::ValidationError("--payoff", "expected call or put");
    payoff.strike = strike;

    fgbm::PricingConfig pc;
    if (engine_name == "mc") pc.engine = fgbm::PricingEngine::ScenarioMC;
    else if (engine_name == "pde") pc.engine = fgbm::PricingEngine::Pde;
    else if (engine_name == "closed") pc.engine = fgbm::PricingEngine::PerScenarioClosedForm;
    else throw CLI::ValidationError("--engine", "expected mc, pde or closed");
    pc.num_paths = num_paths;
    pc.seed = fgbm::SeedSpec{seed, fgbm::seed_stream::kPricing};

    // Engine compatibility is checked before any work is done.
    if (pc.engine == fgbm::PricingEngine::Pde && h.value != 0.5)
        throw CLI::ValidationError(
            "--engine", "the pde engine solves the classical case only and requires hurst 0.5");

    fgbm::MarketModel model{spot, rate, h, band, maturity};
    model.validate();
    const fgbm::ScenarioFamily family = fgbm::make_scenario_family(band, scenarios_m, maturity);

    const fs::path dir(common.out_dir);
    fs::create_directories(dir);
    ManifestWriter manifest("price", dir);
    json echo = config_echo(cfg);
    echo["payoff"] = payoff_name;
    echo["engine"] = engine_name;
    echo["strike"] = strike;
    echo["spot"] = spot;
    echo["rate"] = rate;
    echo["maturity"] = maturity;
    echo["paths"] = num_paths;
    manifest.set_config(echo);
    manifest.set_seed(seed);

    const fgbm::PriceQuote quote = fgbm::price_bid_ask(model, payoff, family, pc);

    json jq;
    jq["bid"] = quote.bid;
    jq["ask"] = quote.ask;
    jq["engine"] = quote.engine;
    jq["attaining_scenario_bid"] = quote.bid_arg;
    jq["attaining_scenario_ask"] = quote.ask_arg;
    jq["stderr_or_grid_error"] = {{"bid_se", quote.bid_se}, {"ask_se", quote.ask_se}};
    jq["member_prices"] = quote.member_prices;
    jq["member_ses"] = quote.member_ses;
    jq["diagnostics"] = quote.diagnostics;
    jq["config"] = echo;
    write_json_file(dir / "quote.json", jq);
    manifest.add_output("quote.json");
    manifest.write();
    std::cout << "price: bid=" << fgbm::format_double(quote.bid)
              << " ask=" << fgbm::format_double(quote.ask) << " (" << quote.engine << ")\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional process laboratory: synthesis, verification, pricing"};
    app.require_subcommand(1);

    CommonFlags common;

    // synth
    auto* synth = app.add_subcommand("synth", "generate a path ensemble to CSV");
    std::string method = "cholesky";
    std::size_t synth_paths = 1000;
    synth->add_option("--hurst", "roughness index in (0, 1)");
    synth->add_option("--sigma-lo", "lower volatility level");
    synth->add_option("--sigma-hi", "upper volatility level");
    synth->add_option("--method", method, "cholesky | movavg | wavelet")->capture_default_str();
    synth->add_option("--paths", synth_paths, "number of sample paths")->capture_default_str();
    synth->add_option("--grid-n", "time grid steps");
    synth->add_option("--horizon", "terminal time");
    synth->add_option("--seed", "master seed");
    synth->add_option("--out", common.out_dir, "output directory")->default_str("fgbm-out");
    synth->add_option("--config", common.config_file, "key = value config file");
    synth->add_option("--threads", common.threads, "worker threads (0: FGBM_THREADS or 1)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a property suite");
    std::string suite;
    std::uint64_t verify_seed = 1;
    std::string suite_help = "suite name: all";
    for (const auto& s : fgbm::verify_suite_names()) suite_help += ", " + s;
    verify->add_option("suite", suite, suite_help)->required();
    verify->add_option("--seed", verify_seed, "master seed")->capture_default_str();
    verify->add_option("--out", common.out_dir, "output directory")->default_str("fgbm-out");
    verify->add_option("--threads", common.threads, "worker threads (0: FGBM_THREADS or 1)");

    // price
    auto* price = app.add_subcommand("price", "bid-ask quote for a European claim");
    std::string payoff_name = "call", engine_name = "closed";
    double strike = 100.0, spot = 100.0, rate = 0.0, maturity = 1.0;
    std::size_t price_paths = std::size_t{1} << 16;
    price->add_option("--payoff", payoff_name, "call | put")->capture_default_str();
    price->add_option("--strike", strike, "strike level")->capture_default_str();
    price->add_option("--spot", spot, "initial stock level")->capture_default_str();
    price->add_option("--rate", rate, "risk-free rate")->capture_default_str();
    price->add_option("--hurst", "roughness index in (0, 1)");
    price->add_option("--sigma-lo", "lower volatility level");
    price->add_option("--sigma-hi", "upper volatility level");
    price->add_option("--maturity", maturity, "claim maturity")->capture_default_str();
    price->add_option("--engine", engine_name, "mc | pde | closed")->capture_default_str();
    price->add_option("--paths", price_paths, "MC paths")->capture_default_str();
    price->add_option("--seed", "master seed");
    price->add_option("--scenarios", "scenario family size");
    price->add_option("--out", common.out_dir, "output directory")->default_str("fgbm-out");
    price->add_option("--config", common.config_file, "key = value config file");
    price->add_option("--threads", common.threads, "worker threads (0: FGBM_THREADS or 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (common.out_dir.empty()) common.out_dir = "fgbm-out";

    try {
        if (synth->parsed()) return run_synth(synth, common, method, synth_paths);
        if (verify->parsed()) return run_verify(suite, common, verify_seed);
        if (price->parsed())
            return run_price(price, common, payoff_name, engine_name, strike, spot, rate,
                             maturity, price_paths);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
