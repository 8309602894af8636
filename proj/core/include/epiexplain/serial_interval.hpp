#pragma once

#include <vector>

namespace epi {

// Gamma distribution in shape/scale form. Mean = shape*scale,
// variance = shape*scale^2.
struct GammaParams {
    double shape = 0.0;
    double scale = 0.0;

    double mean() const { return shape * scale; }
    double variance() const { return shape * scale * scale; }
};

// Moment-matched Gamma: shape = mean^2/sd^2, scale = sd^2/mean.
// Throws std::invalid_argument on non-positive inputs.
GammaParams gamma_from_mean_sd(double mean, double sd);

// P(T <= x) for T ~ Gamma(params), evaluated through the regularized lower
// incomplete gamma function (series / continued fraction, abs tol 1e-12).
// Throws std::invalid_argument for x < 0 or invalid params.
double gamma_cdf(const GammaParams& params, double x);

// Daily probability mass of the serial interval. weights[0] is g_1, the
// mass on day 1; weight(s) gives the 1-based view.
struct DiscretizedSerialInterval {
    std::vector<double> weights;

    int horizon() const { return static_cast<int>(weights.size()); }
    double weight(int day_lag) const; // 1-based; 0 outside [1, horizon]
    double total_mass() const;
};

// g_1 = cdf(1.5) (lower limit 0), g_s = cdf(s+0.5) - cdf(s-0.5) for s >= 2.
// Throws std::invalid_argument for horizon < 1.
DiscretizedSerialInterval discretize(const GammaParams& params, int horizon);

} // namespace epi
