#include "msol/metrics.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace msol {

namespace {

void check_score(double v, const std::string& where) {
    if (!(v >= 0.0 && v <= 100.0))
        throw std::runtime_error("metrics: score out of range [0,100] at " + where);
}

void check_signature(const Program& prog, const std::string& sig, const std::string& where) {
    if (prog.find_by_signature(sig) < 0)
        throw std::runtime_error("metrics: unknown function signature '" + sig + "' at " + where);
}

std::map<std::string, double> score_map_from_json(const nlohmann::json& j, const Program& prog,
                                                  const std::string& where) {
    std::map<std::string, double> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        double v = it.value().get<double>();
        check_signature(prog, it.key(), where + "." + it.key());
        check_score(v, where + "." + it.key());
        out[it.key()] = v;
    }
    return out;
}

}  // namespace

nlohmann::json metrics_to_json(const MetricsBundle& bundle) {
    nlohmann::json j;
    j["complexity"] = bundle.complexity;
    j["vuln"] = bundle.vuln;
    j["invariants"] = bundle.invariants;
    auto seqs = nlohmann::json::array();
    for (const auto& s : bundle.sequences)
        seqs.push_back({{"calls", s.signatures}, {"score", s.score}});
    j["sequences"] = std::move(seqs);
    j["provenance"] = bundle.provenance;
    return j;
}

MetricsBundle metrics_from_json(const nlohmann::json& j, const Program& prog) {
    MetricsBundle out;
    if (j.contains("complexity"))
        out.complexity = score_map_from_json(j.at("complexity"), prog, "complexity");
    if (j.contains("vuln")) out.vuln = score_map_from_json(j.at("vuln"), prog, "vuln");
    if (j.contains("invariants")) {
        for (auto it = j.at("invariants").begin(); it != j.at("invariants").end(); ++it)
            out.invariants[it.key()] =
                score_map_from_json(it.value(), prog, "invariants." + it.key());
    }
    if (j.contains("sequences")) {
        for (size_t i = 0; i < j.at("sequences").size(); ++i) {
            const auto& sj = j.at("sequences")[i];
            SequenceSuggestion s;
            std::string where = "sequences[" + std::to_string(i) + "]";
            for (const auto& sig : sj.at("calls")) {
                std::string text = sig.get<std::string>();
                check_signature(prog, text, where);
                s.signatures.push_back(text);
            }
            if (s.signatures.size() < 2)
                throw std::runtime_error("metrics: sequence shorter than 2 at " + where);
            s.score = sj.at("score").get<double>();
            check_score(s.score, where);
            out.sequences.push_back(std::move(s));
        }
    }
    out.provenance = j.value("provenance", "");
    return out;
}

MetricsBundle load_metrics_file(const std::string& path, const Program& prog) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open metrics file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("metrics file " + path + ": " + e.what());
    }
    return metrics_from_json(j, prog);
}

void save_metrics_file(const std::string& path, const MetricsBundle& bundle) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write metrics file " + path);
    out << metrics_to_json(bundle).dump(2) << "\n";
}

BlockScores blockify(const MetricsBundle& bundle, const Program& prog) {
    BlockScores out;
    size_t n = static_cast<size_t>(prog.total_blocks());
    out.complexity.assign(n, 0.0);
    out.vuln.assign(n, 0.0);
    for (const auto& [id, _] : bundle.invariants) out.invariants[id].assign(n, 0.0);

    auto broadcast = [&](const std::map<std::string, double>& scores, std::vector<double>& dst) {
        for (const auto& [sig, score] : scores) {
            const FunctionInfo& f = prog.function(prog.find_by_signature(sig));
            for (const auto& b : f.cfg.blocks)
                dst[static_cast<size_t>(f.block_offset + b.id)] = score;
        }
    };
    broadcast(bundle.complexity, out.complexity);
    broadcast(bundle.vuln, out.vuln);
    for (const auto& [id, scores] : bundle.invariants) broadcast(scores, out.invariants[id]);
    return out;
}

}  // namespace msol
