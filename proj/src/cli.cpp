#include "msol/cli.hpp"

#include "msol/config.hpp"
#include "msol/llm_client.hpp"
#include "msol/printer.hpp"
#include "msol/report.hpp"
#include "msol/static_summary.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace msol {

namespace {

struct RunOptions {
    std::string config_path;
    std::string out_dir = ".";
    std::string metrics_fixture;
    std::string llm_endpoint;
    std::string llm_model;
    std::string cassette;
    std::string temperatures;
    std::string producers;
    bool producers_set = false;
    double energy_a = -1;
    double energy_b = -1;
    int energy_cap = -1;
    int base_energy = -1;
    int64_t seed = -1;
    int64_t executions = -1;
    double time_budget = -1;
    bool stop_on_first_bug = false;
};

std::vector<double> parse_temperatures(const std::string& list) {
    std::vector<double> out;
    std::istringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

void apply_overrides(CampaignConfig& config, const RunOptions& opt) {
    if (!opt.metrics_fixture.empty()) {
        config.metrics_fixture = opt.metrics_fixture;
        config.use_provider = false;
    }
    if (!opt.llm_endpoint.empty()) {
        config.use_provider = true;
        config.provider.endpoint = opt.llm_endpoint;
        config.metrics_fixture.clear();
    }
    if (!opt.llm_model.empty()) config.provider.model = opt.llm_model;
    if (!opt.cassette.empty()) config.cassette = opt.cassette;
    if (!opt.temperatures.empty())
        config.provider.temperatures = parse_temperatures(opt.temperatures);
    if (opt.producers_set) config.energy.enabled = parse_producers(opt.producers);
    if (opt.energy_a >= 0) config.energy.exponent_base = opt.energy_a;
    if (opt.energy_b >= 0) config.energy.offset = opt.energy_b;
    if (opt.energy_cap >= 0) config.energy.cap = opt.energy_cap;
    if (opt.base_energy >= 0) config.energy.base_energy = opt.base_energy;
    if (opt.seed >= 0) config.seed = static_cast<uint64_t>(opt.seed);
    if (opt.executions >= 0) config.execution_budget = static_cast<uint64_t>(opt.executions);
    if (opt.time_budget >= 0) config.time_budget_seconds = opt.time_budget;
    if (opt.stop_on_first_bug) config.stop_on_first_bug = true;
}

std::unique_ptr<LlmClient> make_client(const CampaignConfig& config) {
    if (!config.cassette.empty()) return std::make_unique<CassettePlayer>(config.cassette);
    if (!std::getenv(config.provider.api_key_env.c_str()))
        throw std::invalid_argument("API key environment variable " +
                                    config.provider.api_key_env + " is not set");
    return std::make_unique<HttpLlmClient>(config.provider);
}

// Loads fixture metrics, queries the provider, or returns an empty bundle
// when no metrics source is configured (baseline).
std::pair<MetricsBundle, bool> resolve_metrics(const CampaignConfig& config,
                                               const Program& prog) {
    if (!config.metrics_fixture.empty())
        return {load_metrics_file(config.metrics_fixture, prog), false};
    if (config.use_provider) {
        auto client = make_client(config);
        FetchOutcome outcome =
            fetch_metrics(prog, config.invariants, *client, config.provider,
                          config.token_budget);
        for (const std::string& w : outcome.warnings) std::cerr << "warning: " << w << "\n";
        return {std::move(outcome.bundle), outcome.degraded};
    }
    MetricsBundle empty;
    empty.provenance = "none";
    return {empty, false};
}

int cmd_run(const RunOptions& opt) {
    CampaignConfig config = load_campaign_config(opt.config_path);
    apply_overrides(config, opt);
    config.validate();

    Program prog{parse(config.source_text)};
    std::string started = iso8601_utc_now();
    auto [bundle, degraded] = resolve_metrics(config, prog);
    if (bundle.provenance.empty())
        bundle.provenance = config.metrics_fixture.empty() ? "none" : config.metrics_fixture;

    CampaignReport report = run_campaign(config, prog, bundle);
    std::string finished = iso8601_utc_now();

    std::filesystem::create_directories(opt.out_dir);
    std::filesystem::path out(opt.out_dir);
    write_text_file((out / "report.json").string(),
                    report_json(report, config, prog).dump(2) + "\n");
    write_text_file((out / "coverage.csv").string(), coverage_csv(report));
    write_text_file((out / "manifest.json").string(),
                    manifest_json(config, bundle.provenance, started, finished).dump(2) + "\n");

    std::cout << "executions: " << report.executions << "  corpus: " << report.corpus_size
              << "  blocks: " << report.blocks_covered << "  edges: " << report.edges_covered
              << "  detections: " << report.detections.size() << "\n";
    for (const Detection& d : report.detections)
        std::cout << "  " << d.oracle << " at execution " << d.executions << "\n";
    (void)degraded;
    return report.stopped_on_first_bug ? kExitBugFound : kExitOk;
}

struct FetchOptions {
    std::string config_path;
    std::string out_path = "metrics.json";
    std::string metrics_fixture;
    std::string llm_endpoint;
    std::string llm_model;
    std::string temperatures;
    std::string cassette;
    std::string record_cassette;
};

int cmd_fetch_metrics(const FetchOptions& opt) {
    CampaignConfig config = load_campaign_config(opt.config_path);
    if (!opt.metrics_fixture.empty()) {
        config.metrics_fixture = opt.metrics_fixture;
        config.use_provider = false;
    }
    if (!opt.llm_endpoint.empty()) {
        config.use_provider = true;
        config.provider.endpoint = opt.llm_endpoint;
        config.metrics_fixture.clear();
    }
    if (!opt.llm_model.empty()) config.provider.model = opt.llm_model;
    if (!opt.temperatures.empty())
        config.provider.temperatures = parse_temperatures(opt.temperatures);
    if (!opt.cassette.empty()) config.cassette = opt.cassette;

    Program prog{parse(config.source_text)};

    auto print_coverage = [&](const MetricsBundle& bundle) {
        size_t public_count = prog.public_functions().size();
        std::cout << "complexity: " << bundle.complexity.size() << "/" << public_count
                  << " functions scored\n";
        std::cout << "vuln: " << bundle.vuln.size() << "/" << public_count
                  << " functions scored\n";
        for (const auto& [id, scores] : bundle.invariants)
            std::cout << "invariant " << id << ": " << scores.size() << "/" << public_count
                      << " functions scored\n";
        std::cout << "sequences: " << bundle.sequences.size() << " suggestions\n";
    };

    if (!config.metrics_fixture.empty()) {
        MetricsBundle bundle = load_metrics_file(config.metrics_fixture, prog);
        print_coverage(bundle);
        std::cout << "fixture " << config.metrics_fixture << " is valid\n";
        return kExitOk;
    }
    if (!config.use_provider)
        throw std::invalid_argument("fetch-metrics needs --metrics-fixture or --llm-endpoint");

    std::unique_ptr<LlmClient> client = make_client(config);
    if (!opt.record_cassette.empty())
        client = std::make_unique<CassetteRecorder>(std::move(client), opt.record_cassette);
    FetchOutcome outcome =
        fetch_metrics(prog, config.invariants, *client, config.provider, config.token_budget);
    for (const std::string& w : outcome.warnings) std::cerr << "warning: " << w << "\n";
    save_metrics_file(opt.out_path, outcome.bundle);
    print_coverage(outcome.bundle);
    std::cout << "wrote " << opt.out_path << "\n";
    return outcome.degraded ? kExitPartialMetrics : kExitOk;
}

struct StaticOptions {
    std::vector<std::string> sources;
    bool dump = false;
    std::string out_path;
};

int cmd_static(const StaticOptions& opt) {
    std::string text;
    for (const std::string& path : opt.sources) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot read source file " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text += buf.str();
        text += "\n";
    }
    Program prog{parse(text)};
    if (opt.dump || !opt.out_path.empty()) {
        std::string dumped = static_summary_json(prog).dump(2) + "\n";
        if (opt.out_path.empty())
            std::cout << dumped;
        else
            write_text_file(opt.out_path, dumped);
    } else {
        std::cout << prog.functions().size() << " functions, " << prog.total_blocks()
                  << " blocks\n";
    }
    return kExitOk;
}

}  // namespace

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return cli_main(args);
}

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"LLM-metric guided coverage fuzzer for MiniSol contracts"};
    app.require_subcommand(1);

    RunOptions run_opt;
    CLI::App* run = app.add_subcommand("run", "run a fuzzing campaign");
    run->add_option("--config", run_opt.config_path, "campaign config file")->required();
    run->add_option("--out", run_opt.out_dir, "output directory");
    run->add_option("--seed", run_opt.seed, "RNG seed override");
    run->add_option("--executions", run_opt.executions, "execution budget override");
    run->add_option("--time-budget", run_opt.time_budget, "wall clock budget (seconds)");
    run->add_option("--metrics-fixture", run_opt.metrics_fixture, "metrics fixture file");
    run->add_option("--llm-endpoint", run_opt.llm_endpoint, "chat completions endpoint");
    run->add_option("--llm-model", run_opt.llm_model, "model name");
    run->add_option("--llm-cassette", run_opt.cassette, "replay cassette for LLM queries");
    run->add_option("--temperatures", run_opt.temperatures, "comma-separated temperatures");
    run->add_option("--producers", run_opt.producers,
                    "comma-separated producer subset; empty = baseline")
        ->trigger_on_parse()
        ->each([&run_opt](const std::string&) { run_opt.producers_set = true; });
    run->add_option("--energy-A", run_opt.energy_a, "exponent base A");
    run->add_option("--energy-B", run_opt.energy_b, "offset B");
    run->add_option("--energy-cap", run_opt.energy_cap, "energy cap multiplier");
    run->add_option("--base-energy", run_opt.base_energy, "base mutations per visit");
    run->add_flag("--stop-on-first-bug", run_opt.stop_on_first_bug, "stop on first oracle event");

    FetchOptions fetch_opt;
    CLI::App* fetch = app.add_subcommand("fetch-metrics", "query producers or validate a fixture");
    fetch->add_option("--config", fetch_opt.config_path, "campaign config file")->required();
    fetch->add_option("--out", fetch_opt.out_path, "output metrics file");
    fetch->add_option("--metrics-fixture", fetch_opt.metrics_fixture, "fixture to validate");
    fetch->add_option("--llm-endpoint", fetch_opt.llm_endpoint, "chat completions endpoint");
    fetch->add_option("--llm-model", fetch_opt.llm_model, "model name");
    fetch->add_option("--temperatures", fetch_opt.temperatures, "comma-separated temperatures");
    fetch->add_option("--llm-cassette", fetch_opt.cassette, "replay cassette");
    fetch->add_option("--record-cassette", fetch_opt.record_cassette, "record cassette here");

    StaticOptions static_opt;
    CLI::App* static_cmd = app.add_subcommand("static", "parse sources and dump static analysis");
    static_cmd->add_option("sources", static_opt.sources, "MiniSol source files")->required();
    static_cmd->add_flag("--dump-static", static_opt.dump, "emit the static summary JSON");
    static_cmd->add_option("-o,--output", static_opt.out_path, "summary output path");

    try {
        std::vector<const char*> argv;
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (run->parsed()) return cmd_run(run_opt);
        if (fetch->parsed()) return cmd_fetch_metrics(fetch_opt);
        if (static_cmd->parsed()) return cmd_static(static_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitConfigError;
}

}  // namespace msol
