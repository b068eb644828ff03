#pragma once

namespace subdif {

// 1/Gamma(y) for real y, zero at the poles y = 0, -1, -2, ...
double reciprocal_gamma(double y);

struct MLParams {
    double alpha = 0.5;
    double beta = 1.0;
    int asymptotic_terms = 10;  // cap for the large-argument expansion
};

// Mittag-Leffler function E_{alpha,beta}(x) on the nonpositive real axis.
//
// Evaluation switches between the power series (small |x|), a real
// Hankel-contour integral (mid range, with pole residues for alpha > 1),
// and the large-argument asymptotic expansion. alpha = 1 is handled by
// closed forms / a Kummer-transformed confluent series.
//
// Throws std::invalid_argument unless 0 < alpha < 2 and x <= 0.
double mittag_leffler(double alpha, double beta, double x);
double mittag_leffler(const MLParams& p, double x);

// Region switch points, exposed for the continuity tests.
inline constexpr double kMlSeriesMax = 5.0;
inline constexpr double kMlAsymptoticMin = 50.0;

}  // namespace subdif
