#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "simrank/metrics.hpp"
#include "simrank/normalization.hpp"

namespace simrank {

struct RankingEntry {
    std::size_t rank = 0;  // 1-based
    std::string player;
    double distance = 0.0;

    friend bool operator==(const RankingEntry&, const RankingEntry&) = default;
};

/// Every non-target player ordered by ascending distance to the target.
/// Equal distances are ordered by player name.
struct SimilarityRanking {
    std::string target;
    MetricChoice metric;
    std::vector<RankingEntry> entries;

    friend bool operator==(const SimilarityRanking&, const SimilarityRanking&) = default;
};

SimilarityRanking rank_by_similarity(const NormalizedMatrix& matrix, std::string_view target,
                                     MetricChoice metric = MetricChoice::manhattan());

/// First k entries of rank_by_similarity. Throws KOutOfRange unless
/// 1 <= k <= player count - 1.
std::vector<RankingEntry> nearest_k(const NormalizedMatrix& matrix, std::string_view target, std::size_t k,
                                    MetricChoice metric = MetricChoice::manhattan());

}  // namespace simrank
