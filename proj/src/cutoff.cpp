#include "besov_inflate/cutoff.hpp"

#include <cmath>

namespace besov {

double smooth_step(double t, double sharpness) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-sharpness / t);
    const double b = std::exp(-sharpness / (1.0 - t));
    return a / (a + b);
}

double CutoffPair::chi(double xi) const {
    // plateau up to 3/4, support up to 4/3
    constexpr double lo = 0.75, hi = 4.0 / 3.0;
    return smooth_step((hi - std::abs(xi)) / (hi - lo), sharpness_);
}

double CutoffPair::phi(double xi) const { return chi(0.5 * xi) - chi(xi); }

CutoffPair make_cutoff(double transition_profile) {
    return CutoffPair(transition_profile);
}

} // namespace besov
