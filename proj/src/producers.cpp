#include "msol/producers.hpp"

#include "msol/replies.hpp"

namespace msol {

namespace {

// Queries one batch at every temperature and averages the parsed lists.
// Returns false (and leaves `out` untouched) when every temperature failed.
bool score_batch(const Prompt& prompt, LlmClient& client, const ProviderConfig& provider,
                 std::map<std::string, double>& out, const Program& prog,
                 std::vector<std::string>& warnings) {
    std::vector<std::vector<int>> parsed;
    for (double t : provider.temperatures) {
        auto reply = client.complete(prompt.text, t);
        if (!reply) {
            warnings.push_back("query failed (temperature " + std::to_string(t) + ")");
            continue;
        }
        try {
            parsed.push_back(
                parse_scores(*reply, static_cast<int>(prompt.functions.size()), &warnings));
        } catch (const MalformedResponse& e) {
            warnings.push_back(std::string("discarded reply: ") + e.what());
        }
    }
    if (parsed.empty()) return false;
    std::vector<double> means = aggregate_scores(parsed);
    for (size_t i = 0; i < prompt.functions.size(); ++i)
        out[prog.function(prompt.functions[i]).signature] = means[i];
    return true;
}

}  // namespace

FetchOutcome fetch_metrics(const Program& prog, const std::vector<InvariantDef>& invariants,
                           LlmClient& client, const ProviderConfig& provider, int token_budget) {
    FetchOutcome outcome;
    std::vector<int> public_fns = prog.public_functions();

    struct ScoreProducer {
        std::string name;
        std::string instruction;
        std::string invariant_text;  // empty for complexity/vuln
        std::map<std::string, double>* target;
    };
    std::vector<ScoreProducer> producers = {
        {"complexity", kComplexityInstruction, "", &outcome.bundle.complexity},
        {"vuln", kVulnInstruction, "", &outcome.bundle.vuln},
    };
    for (const InvariantDef& inv : invariants)
        producers.push_back({"invariant " + inv.id, instantiate_invariant_instruction(inv.text),
                             inv.text, &outcome.bundle.invariants[inv.id]});

    for (const ScoreProducer& p : producers) {
        auto batches = chunk_functions(prog, public_fns, p.instruction, token_budget);
        for (const auto& batch : batches) {
            Prompt prompt;
            try {
                if (!p.invariant_text.empty())
                    prompt = build_invariant_prompt(p.invariant_text, prog, batch, token_budget);
                else if (p.name == "complexity")
                    prompt = build_complexity_prompt(prog, batch, token_budget);
                else
                    prompt = build_vuln_prompt(prog, batch, token_budget);
            } catch (const BudgetExceeded& e) {
                outcome.warnings.push_back(p.name + ": " + e.what());
                outcome.degraded = true;
                continue;
            }
            if (!score_batch(prompt, client, provider, *p.target, prog, outcome.warnings))
                outcome.degraded = true;  // those functions stay at fallback 0
        }
    }

    // Sequence producer: one prompt over all public functions, chunked only
    // when the budget forces it; suggestion lists merge across chunks.
    std::vector<std::vector<SequenceSuggestion>> parsed_sequences;
    for (const auto& batch : chunk_functions(prog, public_fns, kSeqInstruction, token_budget)) {
        Prompt prompt;
        try {
            prompt = build_seq_prompt(prog, batch, token_budget);
        } catch (const BudgetExceeded& e) {
            outcome.warnings.push_back(std::string("seq: ") + e.what());
            outcome.degraded = true;
            continue;
        }
        std::vector<std::vector<SequenceSuggestion>> per_temperature;
        for (double t : provider.temperatures) {
            auto reply = client.complete(prompt.text, t);
            if (!reply) {
                outcome.warnings.push_back("seq query failed (temperature " + std::to_string(t) +
                                           ")");
                continue;
            }
            try {
                per_temperature.push_back(parse_sequences(*reply, prog, &outcome.warnings));
            } catch (const MalformedResponse& e) {
                outcome.warnings.push_back(std::string("discarded seq reply: ") + e.what());
            }
        }
        if (per_temperature.empty()) {
            outcome.degraded = true;
            continue;
        }
        parsed_sequences.push_back(aggregate_sequences(per_temperature));
    }
    for (auto& chunk : parsed_sequences)
        outcome.bundle.sequences.insert(outcome.bundle.sequences.end(), chunk.begin(),
                                        chunk.end());

    outcome.bundle.provenance = "endpoint:" + provider.endpoint + " model:" + provider.model;
    return outcome;
}

}  // namespace msol
