#include "msol/engine.hpp"

#include <chrono>
#include <set>
#include <stdexcept>

namespace msol {

void CampaignConfig::validate() const {
    if (source_text.empty()) throw std::invalid_argument("no sources configured");
    if (!execution_budget.has_value() && time_budget_seconds <= 0)
        throw std::invalid_argument("set an execution budget and/or a time budget");
    if (tick_every == 0) throw std::invalid_argument("tick_every must be >= 1");
    energy.validate();
    if (use_provider) provider.validate();
    for (const InvariantDef& inv : invariants) {
        if (inv.id.empty() || inv.text.empty() || inv.site.empty())
            throw std::invalid_argument("invariant needs id, text, and site");
    }
}

InvariantBindings bind_invariants(const Program& prog, const std::vector<InvariantDef>& defs) {
    InvariantBindings out;
    for (const InvariantDef& inv : defs) {
        // site = Contract.fn#k
        auto hash = inv.site.rfind('#');
        auto dot = inv.site.find('.');
        if (hash == std::string::npos || dot == std::string::npos || dot > hash)
            throw std::invalid_argument("invariant site '" + inv.site +
                                        "' is not Contract.fn#index");
        std::string contract = inv.site.substr(0, dot);
        std::string fn_name = inv.site.substr(dot + 1, hash - dot - 1);
        int assert_index = std::stoi(inv.site.substr(hash + 1));
        int fn = prog.find_function(contract, fn_name);
        if (fn < 0)
            throw std::invalid_argument("invariant site references unknown function " +
                                        contract + "." + fn_name);
        if (assert_index < 0 || assert_index >= prog.function(fn).decl->num_asserts)
            throw std::invalid_argument("invariant site assert index out of range in " +
                                        inv.site);
        out[{fn, assert_index}] = inv.id;
    }
    return out;
}

namespace {

class Campaign {
  public:
    Campaign(const CampaignConfig& config, const Program& prog, const MetricsBundle& bundle)
        : config_(config),
          prog_(prog),
          genesis_(make_genesis(prog, config.genesis)),
          bindings_(bind_invariants(prog, config.invariants)),
          corpus_(config.energy),
          rng_(config.seed) {
        const EnergyParams& e = config.energy;
        if (e.enabled[static_cast<size_t>(Producer::Complexity)] ||
            e.enabled[static_cast<size_t>(Producer::Vuln)] ||
            e.enabled[static_cast<size_t>(Producer::Invariant)])
            scaled_ = scale_block_scores(blockify(bundle, prog), e);
        ctx_.prog = &prog;
        ctx_.public_fns = prog.public_functions();
        if (e.enabled[static_cast<size_t>(Producer::Seq)])
            ctx_.suggestions = resolve_suggestions(bundle.sequences, prog);
    }

    CampaignReport run() {
        auto wall_start = std::chrono::steady_clock::now();
        auto wall_exhausted = [&] {
            if (config_.time_budget_seconds <= 0) return false;
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - wall_start;
            return elapsed.count() >= config_.time_budget_seconds;
        };

        for (const TestCase& seed : seed_corpus(prog_)) {
            ExecResult r = run_one(seed);
            map_.record(r);
            admit(seed, r);
            if (stopped_) break;
        }

        auto exec_budget_exhausted = [&] {
            return config_.execution_budget.has_value() &&
                   executions_ >= *config_.execution_budget;
        };
        while (!stopped_ && !exec_budget_exhausted() && !wall_exhausted()) {
            CorpusEntry& selected = corpus_.select(map_, executions_);
            // Admissions may reallocate the corpus; keep a copy to mutate.
            TestCase parent = selected.tc;
            uint64_t energy = selected.energy;
            for (uint64_t i = 0; i < energy; ++i) {
                if (stopped_ || exec_budget_exhausted()) break;
                if ((executions_ & 63) == 0 && wall_exhausted()) break;
                TestCase mutant = mutate(parent, rng_, ctx_);
                ExecResult r = run_one(mutant);
                if (map_.record(r)) admit(mutant, r);
            }
        }

        emit_tick(/*force=*/true);
        report_.executions = executions_;
        report_.corpus_size = corpus_.size();
        report_.statements_covered = map_.statement_count();
        report_.blocks_covered = map_.block_count();
        report_.edges_covered = map_.edge_count();
        report_.stopped_on_first_bug = stopped_;
        return std::move(report_);
    }

  private:
    ExecResult run_one(const TestCase& t) {
        ExecResult r = execute(prog_, genesis_, t, &bindings_);
        ++executions_;
        for (const OracleEvent& ev : r.events) {
            std::string oracle = ev.oracle_id();
            if (seen_oracles_.insert(oracle).second)
                report_.detections.push_back(
                    {oracle, executions_, virtual_ms(executions_), t});
            if (config_.stop_on_first_bug && ev.kind != OracleEvent::Kind::Timeout)
                stopped_ = true;
        }
        emit_tick(/*force=*/false);
        return r;
    }

    void admit(const TestCase& tc, const ExecResult& r) {
        CorpusEntry entry;
        entry.tc = tc;
        for (const Call& c : tc.calls) entry.call_sequence.push_back(c.function);
        entry.blocks = r.blocks;
        for (const auto& [edge, _] : r.edges) entry.edges.push_back(edge);
        entry.functions = r.functions;

        const EnergyParams& e = config_.energy;
        if (e.enabled[static_cast<size_t>(Producer::Complexity)])
            entry.k[static_cast<size_t>(Producer::Complexity)] =
                k_complexity(entry.blocks, scaled_.complexity, prog_);
        if (e.enabled[static_cast<size_t>(Producer::Vuln)])
            entry.k[static_cast<size_t>(Producer::Vuln)] =
                k_vuln(entry.functions, scaled_.vuln, prog_);
        if (e.enabled[static_cast<size_t>(Producer::Seq)])
            entry.k[static_cast<size_t>(Producer::Seq)] =
                k_seq(entry.call_sequence, ctx_.suggestions);
        if (e.enabled[static_cast<size_t>(Producer::Invariant)]) {
            double best = 0.0;
            for (const auto& [_, scores] : scaled_.invariants)
                best = std::max(best, k_invariant(entry.blocks, scores, prog_));
            entry.k[static_cast<size_t>(Producer::Invariant)] = best;
        }
        corpus_.add(std::move(entry), executions_);
    }

    void emit_tick(bool force) {
        bool due = force || executions_ % config_.tick_every == 0;
        if (!due) return;
        if (!report_.series.empty() && report_.series.back().executions == executions_) return;
        report_.series.push_back({virtual_ms(executions_), executions_, map_.statement_count(),
                                  map_.block_count(), map_.edge_count()});
    }

    const CampaignConfig& config_;
    const Program& prog_;
    VmState genesis_;
    InvariantBindings bindings_;
    ScaledScores scaled_;
    MutationContext ctx_;
    CoverageMap map_;
    Corpus corpus_;
    Rng rng_;
    CampaignReport report_;
    std::set<std::string> seen_oracles_;
    uint64_t executions_ = 0;
    bool stopped_ = false;
};

}  // namespace

CampaignReport run_campaign(const CampaignConfig& config, const Program& prog,
                            const MetricsBundle& bundle) {
    config.validate();
    return Campaign(config, prog, bundle).run();
}

}  // namespace msol
