#include "subdif/time_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace subdif {

TimeGrid make_uniform_grid(double T, int N) {
    if (T <= 0.0 || N <= 0) throw std::invalid_argument("make_uniform_grid: need T > 0, N > 0");
    TimeGrid g;
    g.T = T;
    g.N = N;
    g.tau = T / N;
    return g;
}

std::vector<double> graded_times(double t_first, double t_last, int count) {
    if (!(t_first >= 1e-12 && t_last > t_first && count >= 2))
        throw std::invalid_argument("graded_times: need 1e-12 <= t_first < t_last, count >= 2");
    std::vector<double> t(count);
    const double ratio = std::pow(t_last / t_first, 1.0 / (count - 1));
    double v = t_first;
    for (int i = 0; i < count; ++i) {
        t[i] = v;
        v *= ratio;
    }
    t.back() = t_last;
    return t;
}

TimeGrid with_graded_prefix(TimeGrid grid, double t_first, double t_last, int count) {
    grid.graded_prefix = graded_times(t_first, t_last, count);
    return grid;
}

}  // namespace subdif
