#include "msol/config.hpp"

#include "msol/toml_lite.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace msol {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read source file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int address_index(const std::string& key) {
    if (key.size() == 2 && key[0] == '@' && key[1] >= '0' && key[1] <= '7') return key[1] - '0';
    throw std::runtime_error("genesis balance key '" + key + "' is not @0..@7");
}

}  // namespace

std::array<bool, kNumProducers> parse_producers(const std::string& list) {
    std::array<bool, kNumProducers> out{false, false, false, false};
    std::istringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        size_t e = item.find_last_not_of(" \t");
        std::string name = item.substr(b, e - b + 1);
        if (name == "complexity")
            out[static_cast<size_t>(Producer::Complexity)] = true;
        else if (name == "vuln")
            out[static_cast<size_t>(Producer::Vuln)] = true;
        else if (name == "seq")
            out[static_cast<size_t>(Producer::Seq)] = true;
        else if (name == "invariant")
            out[static_cast<size_t>(Producer::Invariant)] = true;
        else
            throw std::invalid_argument("unknown producer '" + name + "'");
    }
    return out;
}

std::vector<std::string> producer_names(const std::array<bool, kNumProducers>& enabled) {
    std::vector<std::string> out;
    if (enabled[static_cast<size_t>(Producer::Complexity)]) out.push_back("complexity");
    if (enabled[static_cast<size_t>(Producer::Vuln)]) out.push_back("vuln");
    if (enabled[static_cast<size_t>(Producer::Seq)]) out.push_back("seq");
    if (enabled[static_cast<size_t>(Producer::Invariant)]) out.push_back("invariant");
    return out;
}

CampaignConfig load_campaign_config(const std::string& path) {
    toml_lite::Table doc = toml_lite::parse_file(path);
    std::filesystem::path base = std::filesystem::path(path).parent_path();

    CampaignConfig config;
    for (const std::string& src : doc.get_string_array("sources")) {
        std::filesystem::path p = src;
        if (p.is_relative()) p = base / p;
        config.source_files.push_back(src);
        config.source_text += read_file(p.string());
        config.source_text += "\n";
    }
    if (config.source_files.empty())
        throw std::runtime_error(path + ": 'sources' must list at least one .msol file");

    if (doc.has("execution_budget"))
        config.execution_budget = doc.get_uint("execution_budget", 0);
    config.time_budget_seconds = doc.get_double("time_budget_seconds", 0.0);
    config.seed = doc.get_uint("seed", 0);
    config.tick_every = doc.get_uint("tick_every", 1000);
    config.stop_on_first_bug = doc.get_bool("stop_on_first_bug", false);

    EnergyParams& e = config.energy;
    e.exponent_base = doc.get_double("energy.A", e.exponent_base);
    e.offset = doc.get_double("energy.B", e.offset);
    e.cap = static_cast<int>(doc.get_uint("energy.cap", static_cast<uint64_t>(e.cap)));
    e.base_energy =
        static_cast<int>(doc.get_uint("energy.base", static_cast<uint64_t>(e.base_energy)));
    e.rarity_min = doc.get_double("energy.rarity_min", e.rarity_min);
    e.rarity_max = doc.get_double("energy.rarity_max", e.rarity_max);
    e.normalizer_window = static_cast<int>(
        doc.get_uint("energy.window", static_cast<uint64_t>(e.normalizer_window)));
    if (doc.has("energy.producers")) {
        std::string joined;
        for (const std::string& p : doc.get_string_array("energy.producers")) {
            if (!joined.empty()) joined += ",";
            joined += p;
        }
        e.enabled = parse_producers(joined);
    }

    config.token_budget =
        static_cast<int>(doc.get_uint("metrics.token_budget", kDefaultTokenBudget));
    std::string fixture = doc.get_string("metrics.fixture");
    if (!fixture.empty()) {
        std::filesystem::path p = fixture;
        if (p.is_relative()) p = base / p;
        config.metrics_fixture = p.string();
    }
    std::string endpoint = doc.get_string("metrics.endpoint");
    if (!endpoint.empty()) {
        config.use_provider = true;
        config.provider.endpoint = endpoint;
        config.provider.model = doc.get_string("metrics.model");
        config.provider.api_key_env =
            doc.get_string("metrics.api_key_env", config.provider.api_key_env);
        auto temps = doc.get_double_array("metrics.temperatures");
        if (!temps.empty()) config.provider.temperatures = temps;
        config.provider.retries = static_cast<int>(
            doc.get_uint("metrics.retries", static_cast<uint64_t>(config.provider.retries)));
        config.provider.timeout_seconds = static_cast<int>(doc.get_uint(
            "metrics.timeout_seconds", static_cast<uint64_t>(config.provider.timeout_seconds)));
    }
    std::string cassette = doc.get_string("metrics.cassette");
    if (!cassette.empty()) {
        std::filesystem::path p = cassette;
        if (p.is_relative()) p = base / p;
        config.cassette = p.string();
    }

    config.genesis.default_balance =
        doc.get_uint("genesis.default_balance", config.genesis.default_balance);
    for (const auto& [key, value] : doc.entries_under("genesis.balances"))
        config.genesis.balances[address_index(key)] = value.integer;
    for (const auto& [key, value] : doc.entries_under("genesis.storage")) {
        auto dot = key.find('.');
        if (dot == std::string::npos)
            throw std::runtime_error("genesis.storage entries look like Contract.var");
        uint64_t raw = value.kind == toml_lite::Value::Kind::Bool
                           ? (value.boolean ? 1 : 0)
                           : value.integer;
        config.genesis.storage[key.substr(0, dot)][key.substr(dot + 1)] = raw;
    }

    auto invariants = doc.arrays.find("invariants");
    if (invariants != doc.arrays.end()) {
        for (const toml_lite::Table& t : invariants->second) {
            InvariantDef inv;
            inv.id = t.get_string("id");
            inv.text = t.get_string("text");
            inv.site = t.get_string("site");
            config.invariants.push_back(std::move(inv));
        }
    }
    return config;
}

}  // namespace msol
