#include "simrank/student_t.hpp"

#include <cmath>
#include <limits>

#include "simrank/errors.hpp"

namespace simrank {

namespace {

constexpr int kMaxIterations = 500;
constexpr double kEpsilon = 1e-15;
constexpr double kTiny = 1e-300;

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Continued fraction for I_x(a, b) (without the x^a (1-x)^b / (a B(a,b))
// prefactor); converges rapidly for x < (a + 1) / (a + b + 2).
double beta_continued_fraction(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;

    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;

    for (int m = 1; m <= kMaxIterations; ++m) {
        const double m2 = 2.0 * m;

        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;

        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEpsilon) return h;
    }
    throw Error("incomplete beta continued fraction did not converge");
}

// I_x(a, b) given both x and its complement y = 1 - x, so callers that
// know y exactly avoid the cancellation in 1 - x.
double incomplete_beta(double a, double b, double x, double y) {
    if (x <= 0.0) return 0.0;
    if (y <= 0.0) return 1.0;
    const double log_front = a * std::log(x) + b * std::log(y) - log_beta(a, b);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return std::exp(log_front) * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - std::exp(log_front) * beta_continued_fraction(b, a, y) / b;
}

// P(T > |t|) = I_{df/(df+t^2)}(df/2, 1/2) / 2
double upper_tail(double t, double df) {
    if (std::isinf(t)) return 0.0;
    const double t2 = t * t;
    const double x = df / (df + t2);
    const double y = t2 / (df + t2);
    return 0.5 * incomplete_beta(0.5 * df, 0.5, x, y);
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw Error("incomplete beta needs a > 0 and b > 0");
    if (!(x >= 0.0 && x <= 1.0)) throw Error("incomplete beta needs x in [0, 1]");
    return incomplete_beta(a, b, x, 1.0 - x);
}

double student_t_cdf(double t, double df) {
    if (!(df > 0.0)) throw Error("Student-t needs df > 0");
    if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
    const double tail = upper_tail(t, df);
    return t >= 0.0 ? 1.0 - tail : tail;
}

double student_t_two_sided(double t, double df) {
    if (!(df > 0.0)) throw Error("Student-t needs df > 0");
    if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
    return 2.0 * upper_tail(t, df);
}

}  // namespace simrank
