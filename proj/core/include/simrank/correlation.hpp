#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simrank/dataset.hpp"

namespace simrank {

/// Sample Pearson correlation. Throws LengthMismatch, InsufficientSamples
/// (fewer than 3 points) or ConstantColumn.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// Two-tailed p-value of a sample correlation under H0: rho = 0, using
/// t = rho * sqrt((n - 2) / (1 - rho^2)) with n - 2 degrees of freedom.
/// |rho| = 1 gives 0. Throws InsufficientSamples for n < 3.
double two_tailed_p_value(double rho, long long n);

/// "***" for p <= 0.01, "**" for p <= 0.05, "*" for p <= 0.10, else "".
std::string_view significance_stars(double p_value) noexcept;

struct CorrelationCell {
    std::string criterion_a;
    std::string criterion_b;
    double rho = 0.0;
    double p_value = 1.0;
    std::string stars;
    bool defined = true;  // false when either column is constant

    friend bool operator==(const CorrelationCell&, const CorrelationCell&) = default;
};

class CorrelationMatrix {
public:
    CorrelationMatrix(std::vector<std::string> criteria, std::size_t samples, std::vector<CorrelationCell> cells);

    const std::vector<std::string>& criteria() const noexcept { return criteria_; }
    std::size_t size() const noexcept { return criteria_.size(); }
    std::size_t samples() const noexcept { return samples_; }

    const CorrelationCell& at(std::size_t i, std::size_t j) const { return cells_[i * size() + j]; }
    /// Throws UnknownCriterion.
    const CorrelationCell& at(std::string_view a, std::string_view b) const;

private:
    std::vector<std::string> criteria_;
    std::size_t samples_;
    std::vector<CorrelationCell> cells_;
};

/// Correlations over the raw values of every included criterion pair.
CorrelationMatrix correlation_matrix(const Dataset& dataset);

/// The k off-diagonal pairs with the largest |rho|, each pair once, in
/// criterion order. Ties go to the lexicographically smaller (a, b).
/// Undefined cells never qualify. Throws KOutOfRange.
std::vector<CorrelationCell> top_correlated_pairs(const CorrelationMatrix& matrix, std::size_t k);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
/// Throws LengthMismatch, or ConstantColumn when x has no spread.
LinearFit least_squares_line(std::span<const double> xs, std::span<const double> ys);

}  // namespace simrank
