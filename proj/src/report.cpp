#include "msol/report.hpp"

#include "msol/config.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

namespace msol {

namespace {

nlohmann::json config_echo(const CampaignConfig& config) {
    nlohmann::json j;
    j["sources"] = config.source_files;
    j["seed"] = config.seed;
    if (config.execution_budget)
        j["execution_budget"] = *config.execution_budget;
    else
        j["execution_budget"] = nullptr;
    j["time_budget_seconds"] = config.time_budget_seconds;
    j["tick_every"] = config.tick_every;
    j["stop_on_first_bug"] = config.stop_on_first_bug;
    j["producers"] = producer_names(config.energy.enabled);
    j["energy_A"] = config.energy.exponent_base;
    j["energy_B"] = config.energy.offset;
    j["energy_cap"] = config.energy.cap;
    j["base_energy"] = config.energy.base_energy;
    j["rarity_min"] = config.energy.rarity_min;
    j["rarity_max"] = config.energy.rarity_max;
    j["normalizer_window"] = config.energy.normalizer_window;
    j["token_budget"] = config.token_budget;
    auto invariants = nlohmann::json::array();
    for (const InvariantDef& inv : config.invariants)
        invariants.push_back({{"id", inv.id}, {"text", inv.text}, {"site", inv.site}});
    j["invariants"] = std::move(invariants);
    return j;
}

}  // namespace

nlohmann::json test_case_json(const TestCase& t, const Program& prog) {
    auto calls = nlohmann::json::array();
    for (const Call& c : t.calls) {
        nlohmann::json cj;
        const FunctionInfo& f = prog.function(c.function);
        cj["function"] = f.signature;
        auto args = nlohmann::json::array();
        for (const Value& a : c.args) {
            switch (a.type) {
                case Type::Uint: args.push_back({{"uint", a.raw}}); break;
                case Type::Bool: args.push_back({{"bool", a.raw != 0}}); break;
                case Type::Address:
                    args.push_back({{"address", "@" + std::to_string(a.raw)}});
                    break;
                case Type::Map: break;
            }
        }
        cj["args"] = std::move(args);
        cj["sender"] = "@" + std::to_string(c.sender);
        cj["value"] = c.value;
        calls.push_back(std::move(cj));
    }
    return nlohmann::json{{"calls", std::move(calls)}};
}

nlohmann::json report_json(const CampaignReport& report, const CampaignConfig& config,
                           const Program& prog) {
    nlohmann::json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["config"] = config_echo(config);
    j["totals"] = {{"executions", report.executions},
                   {"corpus", report.corpus_size},
                   {"statements", report.statements_covered},
                   {"blocks", report.blocks_covered},
                   {"edges", report.edges_covered}};
    j["stopped_on_first_bug"] = report.stopped_on_first_bug;
    auto detections = nlohmann::json::array();
    for (const Detection& d : report.detections) {
        detections.push_back({{"oracle", d.oracle},
                              {"executions", d.executions},
                              {"elapsed_ms", d.elapsed_ms},
                              {"test_case", test_case_json(d.test_case, prog)}});
    }
    j["detections"] = std::move(detections);
    auto series = nlohmann::json::array();
    for (const CoveragePoint& p : report.series) {
        series.push_back({{"elapsed_ms", p.elapsed_ms},
                          {"executions", p.executions},
                          {"statements", p.statements},
                          {"blocks", p.blocks},
                          {"edges", p.edges}});
    }
    j["coverage_series"] = std::move(series);
    return j;
}

std::string coverage_csv(const CampaignReport& report) {
    std::ostringstream out;
    out << "elapsed_ms,executions,blocks,edges\n";
    for (const CoveragePoint& p : report.series)
        out << p.elapsed_ms << "," << p.executions << "," << p.blocks << "," << p.edges << "\n";
    return out.str();
}

nlohmann::json manifest_json(const CampaignConfig& config, const std::string& metrics_provenance,
                             const std::string& started_at, const std::string& finished_at) {
    nlohmann::json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["config"] = config_echo(config);
    j["seed"] = config.seed;
    j["metrics_provenance"] = metrics_provenance;
    j["metrics_fixture"] = config.metrics_fixture;
    j["started_at"] = started_at;
    j["finished_at"] = finished_at;
    return j;
}

std::string iso8601_utc_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace msol
