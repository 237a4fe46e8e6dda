#include "simrank/metrics.hpp"

#include <cmath>

#include "simrank/errors.hpp"

namespace simrank {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

void check_dims(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
}

}  // namespace

MetricChoice::MetricChoice(double p) : p_(p) {
    if (!std::isfinite(p) || p < 1.0) {
        throw InvalidMetric("Minkowski exponent must be finite and >= 1");
    }
}

double manhattan_distance(std::span<const double> a, std::span<const double> b) {
    check_dims(a, b);
    CompensatedSum sum;
    for (std::size_t k = 0; k < a.size(); ++k) sum.add(std::fabs(a[k] - b[k]));
    return sum.value();
}

double manhattan_distance(const PlayerVector& a, const PlayerVector& b) {
    return manhattan_distance(a.coords, b.coords);
}

double minkowski_distance(std::span<const double> a, std::span<const double> b, MetricChoice metric) {
    if (metric.is_manhattan()) return manhattan_distance(a, b);
    check_dims(a, b);
    const double p = metric.p();
    CompensatedSum sum;
    if (p == 2.0) {
        for (std::size_t k = 0; k < a.size(); ++k) sum.add((a[k] - b[k]) * (a[k] - b[k]));
        return std::sqrt(sum.value());
    }
    for (std::size_t k = 0; k < a.size(); ++k) sum.add(std::pow(std::fabs(a[k] - b[k]), p));
    return std::pow(sum.value(), 1.0 / p);
}

double minkowski_distance(const PlayerVector& a, const PlayerVector& b, MetricChoice metric) {
    return minkowski_distance(a.coords, b.coords, metric);
}

PlayerVector player_vector(const NormalizedMatrix& matrix, std::string_view player) {
    const auto idx = matrix.player_index(player);
    if (!idx) throw UnknownPlayer(std::string(player));
    const auto row = matrix.row(*idx);
    return {std::string(player), std::vector<double>(row.begin(), row.end())};
}

std::map<std::string, double> distance_to_target(const NormalizedMatrix& matrix, std::string_view target,
                                                 MetricChoice metric) {
    const auto t = matrix.player_index(target);
    if (!t) throw UnknownPlayer(std::string(target));

    std::map<std::string, double> out;
    const auto target_row = matrix.row(*t);
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        if (i == *t) continue;
        out.emplace(matrix.players()[i], minkowski_distance(target_row, matrix.row(i), metric));
    }
    return out;
}

}  // namespace simrank
