#pragma once

#include <vector>

namespace subdif {

// Uniform time grid on [0, T] with N steps, t_n = n tau. An optional
// geometrically graded prefix grid toward t = 0 supplies sample times for
// the small-time order fit; it never participates in the CQ recursion.
struct TimeGrid {
    double T = 1.0;
    int N = 100;
    double tau = 0.01;
    std::vector<double> graded_prefix;  // strictly increasing, all >= 1e-12

    double time(int n) const { return n * tau; }
};

TimeGrid make_uniform_grid(double T, int N);

// Geometric grading: count points from t_first up to t_last (inclusive),
// ratio chosen to fit. Used to sample (0, t0] down to t0 ~ 1e-9.
std::vector<double> graded_times(double t_first, double t_last, int count);

TimeGrid with_graded_prefix(TimeGrid grid, double t_first, double t_last, int count);

}  // namespace subdif
