#pragma once

namespace simrank {

/// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1],
/// evaluated by the modified Lentz continued fraction on whichever side
/// of the mean a / (a + b) converges fastest.
double regularized_incomplete_beta(double a, double b, double x);

/// Student-t cumulative distribution with df > 0 degrees of freedom.
double student_t_cdf(double t, double df);

/// P(|T| >= |t|) for T ~ t(df).
double student_t_two_sided(double t, double df);

}  // namespace simrank
