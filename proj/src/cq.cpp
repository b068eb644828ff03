#include "subdif/cq.hpp"

#include <cmath>
#include <stdexcept>

namespace subdif {

CQWeights cq_weights(double alpha, int N, double tau) {
    if (N <= 0) throw std::invalid_argument("cq_weights: N must be positive");
    if (!(alpha > 0.0 && alpha < 1.0) && alpha != 1.0)
        throw std::invalid_argument("cq_weights: alpha must lie in (0,1]");
    if (tau <= 0.0) throw std::invalid_argument("cq_weights: tau must be positive");
    CQWeights w;
    w.alpha = alpha;
    w.tau = tau;
    w.omega.resize(N + 1);
    const double scale = std::pow(tau, -alpha);
    double b = 1.0;
    w.omega[0] = scale;
    for (int j = 1; j <= N; ++j) {
        b *= (j - 1.0 - alpha) / j;
        w.omega[j] = scale * b;
    }
    return w;
}

std::vector<double> caputo_apply(const CQWeights& w, const std::vector<double>& u) {
    if (u.size() > w.omega.size())
        throw std::invalid_argument("caputo_apply: history longer than weight table");
    const double u0 = u.empty() ? 0.0 : u[0];
    std::vector<double> d(u.size(), 0.0);
    for (std::size_t n = 0; n < u.size(); ++n) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= n; ++j) acc += w.omega[j] * (u[n - j] - u0);
        d[n] = acc;
    }
    return d;
}

std::vector<double> backward_rl_apply(const CQWeights& w, const std::vector<double>& v) {
    if (v.size() > w.omega.size())
        throw std::invalid_argument("backward_rl_apply: history longer than weight table");
    const std::size_t N = v.size();
    std::vector<double> d(N, 0.0);
    for (std::size_t m = 0; m < N; ++m) {
        double acc = 0.0;
        for (std::size_t j = 0; m + j < N; ++j) acc += w.omega[j] * v[m + j];
        d[m] = acc;
    }
    return d;
}

double duality_gap(const std::vector<double>& w_seq, const std::vector<double>& v_seq,
                   const CQWeights& w, double terminal_moment) {
    if (w_seq.size() != v_seq.size())
        throw std::invalid_argument("duality_gap: sequence length mismatch");
    if (!w_seq.empty() && w_seq[0] != 0.0)
        throw std::invalid_argument("duality_gap: w^0 must vanish");
    const auto dw = caputo_apply(w, w_seq);
    const auto dv = backward_rl_apply(w, v_seq);
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t n = 0; n < w_seq.size(); ++n) {
        lhs += v_seq[n] * dw[n];
        rhs += w_seq[n] * dv[n];
    }
    const double boundary = w_seq.empty() ? 0.0 : w_seq.back() * terminal_moment;
    return std::abs(lhs * w.tau - boundary - rhs * w.tau);
}

}  // namespace subdif
