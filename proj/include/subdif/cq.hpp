#pragma once

#include <vector>

namespace subdif {

// Backward Euler convolution quadrature weights for the order-alpha
// fractional derivative: omega_j = tau^{-alpha} b_j with b_j the binomial
// coefficients of (1 - zeta)^alpha.
struct CQWeights {
    double alpha = 0.5;
    double tau = 0.0;
    std::vector<double> omega;  // omega_0 .. omega_N

    int steps() const { return static_cast<int>(omega.size()) - 1; }
};

CQWeights cq_weights(double alpha, int N, double tau);

// Discrete Caputo derivative of a scalar history:
//   (d^alpha u)^n = sum_{j=0}^{n} omega_j (u^{n-j} - u^0).
// The shift by u^0 makes the rule exact on constants.
std::vector<double> caputo_apply(const CQWeights& w, const std::vector<double>& u);

// Transposed (time-reversed) rule, the discrete backward Riemann-Liouville
// derivative: (D v)^m = sum_{j=0}^{N-m} omega_j v^{m+j}.
std::vector<double> backward_rl_apply(const CQWeights& w, const std::vector<double>& v);

// Defect of the discrete fractional integration-by-parts identity
//   sum_n v^n (d^alpha u)^n tau = [w Jv]_0^T + sum_n w^n (Dv)^n tau
// for w with w^0 = 0. terminal_moment models a nonzero discrete
// J_{T-}^{1-alpha} v(T); it must be zero for the identity to hold.
double duality_gap(const std::vector<double>& w_seq, const std::vector<double>& v_seq,
                   const CQWeights& w, double terminal_moment = 0.0);

}  // namespace subdif
