#pragma once

#include <functional>
#include <optional>

namespace besov {

struct OscillatoryNorm {
    // ||cos(omega x) g(x)||_{L^p} by quadrature resolving the carrier;
    // absent when the carrier would exceed the sample budget.
    std::optional<double> finite_omega_value;
    // Riemann-lemma limit: (mean_theta |cos theta|^p)^{1/p} ||g||_p for
    // finite p, ||g||_inf for p = infinity.
    double limit_value = 0.0;
};

// Mean of |cos theta|^p over one period.
double cos_abs_moment(double p);

// envelope g supported (to tabulated decay) in |x| <= half_width.
// strict = true converts a blown budget into QuadratureBudgetError.
OscillatoryNorm oscillatory_lp_norm(const std::function<double(double)>& g,
                                    double half_width, double omega, double p,
                                    std::size_t sample_budget = (std::size_t(1) << 25),
                                    bool strict = false);

// Same limit machinery for a product of two independent fast carriers,
// ||cos(a x) cos(b x) g||_p as a, b -> infinity with a/b far from 1.
double two_carrier_limit(const std::function<double(double)>& g,
                         double half_width, double p);

} // namespace besov
