#include "simrank/ranking.hpp"

#include <algorithm>

#include "simrank/errors.hpp"

namespace simrank {

SimilarityRanking rank_by_similarity(const NormalizedMatrix& matrix, std::string_view target, MetricChoice metric) {
    const auto distances = distance_to_target(matrix, target, metric);

    SimilarityRanking ranking{std::string(target), metric, {}};
    ranking.entries.reserve(distances.size());
    for (const auto& [player, d] : distances) ranking.entries.push_back({0, player, d});

    std::sort(ranking.entries.begin(), ranking.entries.end(), [](const RankingEntry& a, const RankingEntry& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        return a.player < b.player;
    });
    for (std::size_t i = 0; i < ranking.entries.size(); ++i) ranking.entries[i].rank = i + 1;
    return ranking;
}

std::vector<RankingEntry> nearest_k(const NormalizedMatrix& matrix, std::string_view target, std::size_t k,
                                    MetricChoice metric) {
    if (!matrix.player_index(target)) throw UnknownPlayer(std::string(target));
    const std::size_t max_k = matrix.rows() - 1;
    if (k < 1 || k > max_k) throw KOutOfRange(k, max_k);

    auto ranking = rank_by_similarity(matrix, target, metric);
    ranking.entries.resize(k);
    return std::move(ranking.entries);
}

}  // namespace simrank
