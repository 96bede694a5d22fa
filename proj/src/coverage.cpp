#include "msol/coverage.hpp"

namespace msol {

int hit_bucket(uint32_t count) {
    if (count <= 3) return static_cast<int>(count) - 1;
    if (count <= 7) return 3;
    if (count <= 15) return 4;
    if (count <= 31) return 5;
    if (count <= 127) return 6;
    return 7;
}

bool CoverageMap::record(const ExecResult& r) {
    bool interesting = false;
    for (const auto& [edge, count] : r.edges) {
        auto [it, inserted] = edges_.try_emplace(edge);
        uint8_t bit = static_cast<uint8_t>(1u << hit_bucket(count));
        if (inserted || !(it->second.bucket_mask & bit)) interesting = true;
        it->second.bucket_mask |= bit;
        it->second.total += count;
        total_hits_ += count;
    }
    blocks_.insert(r.blocks.begin(), r.blocks.end());
    statements_.insert(r.statements.begin(), r.statements.end());
    return interesting;
}

uint64_t CoverageMap::hits(const std::pair<int, int>& edge) const {
    auto it = edges_.find(edge);
    return it == edges_.end() ? 0 : it->second.total;
}

void CoverageMap::merge(const CoverageMap& other) {
    for (const auto& [edge, stats] : other.edges_) {
        EdgeStats& mine = edges_[edge];
        mine.total += stats.total;
        mine.bucket_mask |= stats.bucket_mask;
    }
    blocks_.insert(other.blocks_.begin(), other.blocks_.end());
    statements_.insert(other.statements_.begin(), other.statements_.end());
    total_hits_ += other.total_hits_;
}

}  // namespace msol
