#include "msol/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace msol {

void EnergyParams::validate() const {
    if (!(exponent_base > 1.0)) throw std::invalid_argument("energy A must be > 1");
    if (offset < 0.0) throw std::invalid_argument("energy B must be >= 0");
    if (cap < 1) throw std::invalid_argument("energy cap must be >= 1");
    if (base_energy < 1) throw std::invalid_argument("base energy must be >= 1");
    if (!(rarity_min >= 1.0 && rarity_max >= rarity_min))
        throw std::invalid_argument("rarity clamp must satisfy 1 <= min <= max");
    if (normalizer_window < 1) throw std::invalid_argument("normalizer window must be >= 1");
}

double scale_score(double score, const EnergyParams& p) {
    return std::pow(p.exponent_base, score) + p.offset;
}

ScaledScores scale_block_scores(const BlockScores& raw, const EnergyParams& p) {
    auto scale_vec = [&](const std::vector<double>& in) {
        std::vector<double> out(in.size(), 0.0);
        for (size_t i = 0; i < in.size(); ++i)
            if (in[i] > 0.0) out[i] = scale_score(in[i], p);
        return out;
    };
    ScaledScores out;
    out.complexity = scale_vec(raw.complexity);
    out.vuln = scale_vec(raw.vuln);
    for (const auto& [id, scores] : raw.invariants) out.invariants[id] = scale_vec(scores);
    return out;
}

std::vector<ResolvedSuggestion> resolve_suggestions(const std::vector<SequenceSuggestion>& s,
                                                    const Program& prog) {
    std::vector<ResolvedSuggestion> out;
    for (const SequenceSuggestion& suggestion : s) {
        ResolvedSuggestion r;
        r.score = suggestion.score;
        for (const std::string& sig : suggestion.signatures) {
            int fn = prog.find_by_signature(sig);
            if (fn < 0) throw std::invalid_argument("suggestion references unknown " + sig);
            r.functions.push_back(fn);
        }
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

double neighbor_mean(const std::set<int>& covered_blocks, const std::vector<double>& block_scores,
                     const Program& prog) {
    if (covered_blocks.empty()) return 0.0;
    double sum = 0.0;
    for (int b : covered_blocks)
        for (int n : prog.block_neighbors(b)) sum += block_scores[static_cast<size_t>(n)];
    return sum / static_cast<double>(covered_blocks.size());
}

}  // namespace

double k_complexity(const std::set<int>& covered_blocks, const std::vector<double>& block_scores,
                    const Program& prog) {
    return neighbor_mean(covered_blocks, block_scores, prog);
}

double k_invariant(const std::set<int>& covered_blocks, const std::vector<double>& block_scores,
                   const Program& prog) {
    return neighbor_mean(covered_blocks, block_scores, prog);
}

double k_vuln(const std::vector<int>& functions_entered, const std::vector<double>& block_scores,
              const Program& prog) {
    double sum = 0.0;
    for (int fn : functions_entered) {
        const FunctionInfo& f = prog.function(fn);
        for (const auto& b : f.cfg.blocks)
            sum += block_scores[static_cast<size_t>(f.block_offset + b.id)];
    }
    return sum;
}

bool is_subsequence(const std::vector<int>& needle, const std::vector<int>& haystack) {
    size_t i = 0;
    for (int x : haystack) {
        if (i < needle.size() && needle[i] == x) ++i;
        if (i == needle.size()) return true;
    }
    return i == needle.size();
}

double k_seq(const std::vector<int>& call_sequence,
             const std::vector<ResolvedSuggestion>& suggestions) {
    double sum = 0.0;
    for (const ResolvedSuggestion& s : suggestions)
        if (is_subsequence(s.functions, call_sequence)) sum += s.score;
    return sum;
}

uint64_t base_energy(const CorpusEntry& entry, const CoverageMap& map, const EnergyParams& p) {
    double ratio = 1.0;
    if (!entry.edges.empty() && map.edge_count() > 0) {
        uint64_t min_hits = 0;
        bool first = true;
        for (const auto& e : entry.edges) {
            uint64_t h = map.hits(e);
            if (h == 0) continue;  // unseen edges cannot define rarity
            if (first || h < min_hits) min_hits = h;
            first = false;
        }
        if (!first && min_hits > 0) ratio = map.mean_hit_count() / static_cast<double>(min_hits);
    }
    ratio = std::clamp(ratio, p.rarity_min, p.rarity_max);
    auto e = static_cast<uint64_t>(std::llround(static_cast<double>(p.base_energy) * ratio));
    return std::max<uint64_t>(e, 1);
}

uint64_t combine_energy(uint64_t base, const std::array<double, kNumProducers>& k,
                        const std::array<double, kNumProducers>& z, const EnergyParams& p) {
    double e = static_cast<double>(base);
    double sum = e;
    for (size_t i = 0; i < kNumProducers; ++i) {
        if (!p.enabled[i]) continue;
        if (k[i] <= 0.0 || z[i] <= 0.0) continue;
        sum += e * (k[i] / z[i]);
    }
    double capped = std::min(sum, static_cast<double>(p.cap) * e);
    auto rounded = static_cast<uint64_t>(std::llround(capped));
    return std::max<uint64_t>(rounded, 1);
}

bool Corpus::add(CorpusEntry entry, uint64_t exec_no) {
    for (const CorpusEntry& existing : entries_)
        if (existing.call_sequence == entry.call_sequence && existing.tc == entry.tc)
            return false;
    entry.insert_seq = next_seq_++;
    for (size_t i = 0; i < kNumProducers; ++i)
        if (params_.enabled[i] && entry.k[i] > 0.0) windows_[i].push_back({exec_no, entry.k[i]});
    entries_.push_back(std::move(entry));
    return true;
}

std::array<double, kNumProducers> Corpus::normalizers(uint64_t exec_no) const {
    std::array<double, kNumProducers> z{1.0, 1.0, 1.0, 1.0};
    uint64_t horizon =
        exec_no > static_cast<uint64_t>(params_.normalizer_window)
            ? exec_no - static_cast<uint64_t>(params_.normalizer_window)
            : 0;
    for (size_t i = 0; i < kNumProducers; ++i) {
        auto& window = windows_[i];
        // Keep at least the most recent observation so Z never resets to the
        // 1.0 sentinel once a nonzero K has been seen.
        while (window.size() > 1 && window.front().first < horizon) window.pop_front();
        if (window.empty()) continue;
        std::vector<double> values;
        values.reserve(window.size());
        for (const auto& [_, v] : window) values.push_back(v);
        auto mid = values.begin() + static_cast<long>(values.size() / 2);
        std::nth_element(values.begin(), mid, values.end());
        z[i] = *mid;
    }
    return z;
}

CorpusEntry& Corpus::select(const CoverageMap& map, uint64_t exec_no) {
    if (entries_.empty()) throw std::logic_error("select on empty corpus");
    if (cursor_ >= entries_.size()) cursor_ = 0;
    CorpusEntry& entry = entries_[cursor_];
    ++cursor_;
    uint64_t base = base_energy(entry, map, params_);
    entry.energy = params_.any_enabled()
                       ? combine_energy(base, entry.k, normalizers(exec_no), params_)
                       : base;
    return entry;
}

}  // namespace msol
