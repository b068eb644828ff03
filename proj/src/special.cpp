#include "subdif/special.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace subdif {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Power series sum_{k>=0} x^k / Gamma(alpha k + beta), Kahan-compensated.
double ml_series(double alpha, double beta, double x) {
    double sum = 0.0, comp = 0.0, pw = 1.0;
    for (int k = 0; k < 500; ++k) {
        const double term = pw * reciprocal_gamma(alpha * k + beta);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        pw *= x;
        if (k > 2 && std::abs(term) < kEps * std::abs(sum) && std::abs(pw) < std::abs(sum))
            break;
    }
    return sum;
}

// Large-argument expansion -sum_{k>=1} x^{-k} / Gamma(beta - alpha k),
// truncated at the smallest term (or max_terms).
double ml_asymptotic(double alpha, double beta, double x, int max_terms) {
    double sum = 0.0;
    double last = std::numeric_limits<double>::max();
    double zp = 1.0;  // x^{-k}
    for (int k = 1; k <= max_terms; ++k) {
        zp /= x;
        const double term = -zp * reciprocal_gamma(beta - alpha * k);
        if (std::abs(term) > last) break;  // divergent tail reached
        sum += term;
        last = std::abs(term);
        if (std::abs(term) < kEps * std::abs(sum)) break;
    }
    return sum;
}

// Hankel-contour integral along the negative real axis,
//   (1/pi) int_0^inf e^{-u} u^{alpha-beta}
//       (u^alpha sin(pi beta) + x sin(pi(alpha-beta))) / D(u) du,
// D(u) = u^{2 alpha} - 2 u^alpha x cos(pi alpha) + x^2, valid for x < 0 and
// beta < 1 + alpha. For alpha > 1 the pair of branch-point poles adds a
// residue term.
double ml_integral(double alpha, double beta, double x) {
    const double sb = std::sin(kPi * beta);
    const double sab = std::sin(kPi * (alpha - beta));
    const double ca = std::cos(kPi * alpha);
    const auto f = [&](double u) {
        const double ua = std::pow(u, alpha);
        const double den = ua * ua - 2.0 * ua * x * ca + x * x;
        return std::exp(-u) * std::pow(u, alpha - beta) * (ua * sb + x * sab) / (kPi * den);
    };
    boost::math::quadrature::tanh_sinh<double> quad;
    const double ax = -x;
    const double u_peak = std::pow(ax, 1.0 / alpha);
    const double u_cut = std::max(42.0, std::min(1.5 * u_peak, 200.0));
    double val = quad.integrate(f, 0.0, 1.0, 1e-13) + quad.integrate(f, 1.0, u_cut, 1e-13);

    if (alpha > 1.0) {
        const double r = std::pow(ax, 1.0 / alpha);
        const double phi = kPi / alpha;
        val += (2.0 / alpha) * std::pow(ax, (1.0 - beta) / alpha) *
               std::exp(r * std::cos(phi)) *
               std::cos(r * std::sin(phi) + phi * (1.0 - beta));
    }
    return val;
}

// Reduce beta below 1 + alpha via E_{a,b}(x) = (E_{a,b-a}(x) - 1/Gamma(b-a)) / x.
double ml_integral_reduced(double alpha, double beta, double x) {
    if (beta < 1.0 + alpha - 1e-12) return ml_integral(alpha, beta, x);
    return (ml_integral_reduced(alpha, beta - alpha, x) - reciprocal_gamma(beta - alpha)) / x;
}

// alpha = 1: E_{1,beta}(x) = e^x M(beta-1, beta, -x) / Gamma(beta) by the
// Kummer transformation; the transformed series has no catastrophic
// cancellation for x < 0.
double ml_alpha_one(double beta, double x) {
    if (beta == 1.0) return std::exp(x);
    const double y = -x;
    double sum = 0.0, comp = 0.0, t = 1.0;  // t = y^k / k!
    for (int k = 0; k < 2000; ++k) {
        const double term = t * (beta - 1.0) / (beta - 1.0 + k);
        const double yk = term - comp;
        const double s = sum + yk;
        comp = (s - sum) - yk;
        sum = s;
        t *= y / (k + 1);
        if (k > 4 && std::abs(term) < kEps * std::abs(sum) && t < std::abs(sum)) break;
    }
    return std::exp(x) * sum * reciprocal_gamma(beta);
}

}  // namespace

double reciprocal_gamma(double y) {
    if (y > 0.0) return std::exp(-std::lgamma(y));
    if (y == std::floor(y)) return 0.0;  // poles of Gamma
    // reflection: 1/Gamma(y) = Gamma(1-y) sin(pi y) / pi
    return std::exp(std::lgamma(1.0 - y)) * std::sin(kPi * y) / kPi;
}

double mittag_leffler(double alpha, double beta, double x) {
    return mittag_leffler(MLParams{alpha, beta, 60}, x);
}

double mittag_leffler(const MLParams& p, double x) {
    const double alpha = p.alpha;
    const double beta = p.beta;
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::invalid_argument("mittag_leffler: alpha must lie in (0,2)");
    if (x > 0.0)
        throw std::invalid_argument("mittag_leffler: only x <= 0 is supported");
    if (x == 0.0) return reciprocal_gamma(beta);
    if (alpha == 1.0) {
        if (beta == 1.0 || -x <= kMlAsymptoticMin) return ml_alpha_one(beta, x);
        return ml_asymptotic(alpha, beta, x, p.asymptotic_terms);
    }
    const double ax = -x;
    if (ax <= kMlSeriesMax) return ml_series(alpha, beta, x);
    if (ax >= kMlAsymptoticMin) return ml_asymptotic(alpha, beta, x, p.asymptotic_terms);
    return ml_integral_reduced(alpha, beta, x);
}

}  // namespace subdif
