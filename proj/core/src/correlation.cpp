#include "simrank/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "simrank/errors.hpp"
#include "simrank/student_t.hpp"

namespace simrank {

namespace {

struct Moments {
    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
    double mean_x = 0.0;
    double mean_y = 0.0;
};

Moments centered_moments(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw LengthMismatch(xs.size(), ys.size());
    const auto n = static_cast<double>(xs.size());
    Moments m;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        m.mean_x += xs[i];
        m.mean_y += ys[i];
    }
    m.mean_x /= n;
    m.mean_y /= n;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - m.mean_x;
        const double dy = ys[i] - m.mean_y;
        m.sxx += dx * dx;
        m.syy += dy * dy;
        m.sxy += dx * dy;
    }
    return m;
}

}  // namespace

double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw LengthMismatch(xs.size(), ys.size());
    if (xs.size() < 3) throw InsufficientSamples(static_cast<long long>(xs.size()));
    const auto m = centered_moments(xs, ys);
    if (m.sxx == 0.0 || m.syy == 0.0) throw ConstantColumn();
    return std::clamp(m.sxy / std::sqrt(m.sxx * m.syy), -1.0, 1.0);
}

double two_tailed_p_value(double rho, long long n) {
    if (n < 3) throw InsufficientSamples(n);
    if (std::isnan(rho) || std::fabs(rho) > 1.0) throw Error("correlation must lie in [-1, 1]");
    const double r = std::fabs(rho);
    if (r == 1.0) return 0.0;
    const auto df = static_cast<double>(n - 2);
    const double t = r * std::sqrt(df / ((1.0 - r) * (1.0 + r)));
    return std::clamp(student_t_two_sided(t, df), 0.0, 1.0);
}

std::string_view significance_stars(double p_value) noexcept {
    if (p_value <= 0.01) return "***";
    if (p_value <= 0.05) return "**";
    if (p_value <= 0.10) return "*";
    return "";
}

CorrelationMatrix::CorrelationMatrix(std::vector<std::string> criteria, std::size_t samples,
                                     std::vector<CorrelationCell> cells)
    : criteria_(std::move(criteria)), samples_(samples), cells_(std::move(cells)) {
    if (cells_.size() != criteria_.size() * criteria_.size()) {
        throw DimensionMismatch(cells_.size(), criteria_.size() * criteria_.size());
    }
}

const CorrelationCell& CorrelationMatrix::at(std::string_view a, std::string_view b) const {
    auto index_of = [this](std::string_view name) {
        auto it = std::find(criteria_.begin(), criteria_.end(), name);
        if (it == criteria_.end()) throw UnknownCriterion(std::string(name));
        return static_cast<std::size_t>(it - criteria_.begin());
    };
    return at(index_of(a), index_of(b));
}

CorrelationMatrix correlation_matrix(const Dataset& dataset) {
    const std::size_t m = dataset.criterion_count();
    const std::size_t n = dataset.player_count();
    if (n < 3) throw InsufficientSamples(static_cast<long long>(n));

    std::vector<std::vector<double>> columns;
    columns.reserve(m);
    for (std::size_t c = 0; c < m; ++c) columns.push_back(dataset.column(c));

    const auto& names = dataset.criteria();
    std::vector<CorrelationCell> cells(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            CorrelationCell cell{names[i], names[j], 0.0, 1.0, "", true};
            try {
                if (i == j) {
                    static_cast<void>(pearson(columns[i], columns[i]));
                    cell.rho = 1.0;
                    cell.p_value = 0.0;
                } else {
                    cell.rho = pearson(columns[i], columns[j]);
                    cell.p_value = two_tailed_p_value(cell.rho, static_cast<long long>(n));
                }
                cell.stars = significance_stars(cell.p_value);
            } catch (const ConstantColumn&) {
                cell.defined = false;
                cell.rho = std::nan("");
                cell.p_value = std::nan("");
            }
            cells[i * m + j] = cell;
            std::swap(cell.criterion_a, cell.criterion_b);
            cells[j * m + i] = std::move(cell);
        }
    }
    return CorrelationMatrix(names, n, std::move(cells));
}

std::vector<CorrelationCell> top_correlated_pairs(const CorrelationMatrix& matrix, std::size_t k) {
    const std::size_t m = matrix.size();
    const std::size_t pairs = m * (m - (m > 0 ? 1 : 0)) / 2;
    if (k > pairs) throw KOutOfRange(k, pairs);

    std::vector<CorrelationCell> candidates;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (matrix.at(i, j).defined) candidates.push_back(matrix.at(i, j));
        }
    }
    if (k > candidates.size()) throw KOutOfRange(k, candidates.size());

    std::sort(candidates.begin(), candidates.end(), [](const CorrelationCell& x, const CorrelationCell& y) {
        const double ax = std::fabs(x.rho);
        const double ay = std::fabs(y.rho);
        if (ax != ay) return ax > ay;
        return std::tie(x.criterion_a, x.criterion_b) < std::tie(y.criterion_a, y.criterion_b);
    });
    candidates.resize(k);
    return candidates;
}

LinearFit least_squares_line(std::span<const double> xs, std::span<const double> ys) {
    const auto m = centered_moments(xs, ys);
    if (xs.empty() || m.sxx == 0.0) throw ConstantColumn();
    LinearFit fit;
    fit.slope = m.sxy / m.sxx;
    fit.intercept = m.mean_y - fit.slope * m.mean_x;
    return fit;
}

}  // namespace simrank
