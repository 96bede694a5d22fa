#pragma once

#include "msol/vm.hpp"

#include <cstdint>
#include <map>
#include <set>

namespace msol {

// AFL-style hit-count bucket index: counts 1,2,3,4-7,8-15,16-31,32-127,128+
// map to 0..7.
int hit_bucket(uint32_t count);

struct EdgeStats {
    uint64_t total = 0;      // cumulative hits over the campaign
    uint8_t bucket_mask = 0; // per-execution buckets seen so far
};

// Global edge coverage for a campaign. An execution is interesting when it
// covers a new edge or hits a known edge a bucketized-new number of times;
// recording the result and deciding are one atomic step.
class CoverageMap {
  public:
    bool record(const ExecResult& r);

    size_t edge_count() const { return edges_.size(); }
    size_t block_count() const { return blocks_.size(); }
    size_t statement_count() const { return statements_.size(); }
    uint64_t total_hits() const { return total_hits_; }

    double mean_hit_count() const {
        return edges_.empty() ? 0.0
                              : static_cast<double>(total_hits_) / static_cast<double>(edges_.size());
    }
    // Cumulative hits of one edge; 0 when never seen.
    uint64_t hits(const std::pair<int, int>& edge) const;

    // Union with another worker's map (campaigns are single-worker today).
    void merge(const CoverageMap& other);

  private:
    std::map<std::pair<int, int>, EdgeStats> edges_;
    std::set<int> blocks_;
    std::set<int> statements_;
    uint64_t total_hits_ = 0;
};

}  // namespace msol
