#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simrank/normalization.hpp"

namespace simrank {

/// Minkowski exponent p, restricted to finite p >= 1 so the triangle
/// inequality holds. p = 1 is Manhattan, p = 2 Euclidean.
class MetricChoice {
public:
    /// Throws InvalidMetric for p < 1 or non-finite p.
    explicit MetricChoice(double p = 1.0);

    static MetricChoice manhattan() { return MetricChoice(1.0); }
    static MetricChoice euclidean() { return MetricChoice(2.0); }

    double p() const noexcept { return p_; }
    bool is_manhattan() const noexcept { return p_ == 1.0; }

    friend bool operator==(const MetricChoice&, const MetricChoice&) = default;

private:
    double p_;
};

struct PlayerVector {
    std::string player;
    std::vector<double> coords;
};

/// (sum_k |a_k - b_k|^p)^(1/p), accumulated with compensated summation in
/// coordinate order. Throws DimensionMismatch.
double minkowski_distance(std::span<const double> a, std::span<const double> b, MetricChoice metric);
double minkowski_distance(const PlayerVector& a, const PlayerVector& b, MetricChoice metric);

/// sum_k |a_k - b_k| without the pow/root round trip. Bit-identical to
/// minkowski_distance with p = 1.
double manhattan_distance(std::span<const double> a, std::span<const double> b);
double manhattan_distance(const PlayerVector& a, const PlayerVector& b);

/// The normalized row of one player; throws UnknownPlayer.
PlayerVector player_vector(const NormalizedMatrix& matrix, std::string_view player);

/// Distance from the target to every other player (target excluded).
std::map<std::string, double> distance_to_target(const NormalizedMatrix& matrix, std::string_view target,
                                                 MetricChoice metric);

}  // namespace simrank
