#include "besov_inflate/oscillatory.hpp"

#include <cmath>
#include <numbers>

#include "besov_inflate/errors.hpp"

namespace besov {

namespace {
constexpr std::size_t kBaseSamples = 1 << 16;
constexpr double kSamplesPerPeriod = 16.0;

double envelope_lp(const std::function<double(double)>& g, double half_width,
                   double p, std::size_t samples) {
    const double dx = 2.0 * half_width / static_cast<double>(samples);
    if (std::isinf(p)) {
        double m = 0.0;
        for (std::size_t i = 0; i < samples; ++i)
            m = std::max(m, std::abs(g(-half_width + (i + 0.5) * dx)));
        return m;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < samples; ++i)
        acc += std::pow(std::abs(g(-half_width + (i + 0.5) * dx)), p);
    return std::pow(acc * dx, 1.0 / p);
}
} // namespace

double cos_abs_moment(double p) {
    // Gauss-type midpoint rule over a quarter period, symmetric integrand.
    const std::size_t n = 1 << 14;
    const double h = (std::numbers::pi / 2.0) / static_cast<double>(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += std::pow(std::cos((i + 0.5) * h), p);
    return acc * h / (std::numbers::pi / 2.0);
}

OscillatoryNorm oscillatory_lp_norm(const std::function<double(double)>& g,
                                    double half_width, double omega, double p,
                                    std::size_t sample_budget, bool strict) {
    OscillatoryNorm out;
    if (std::isinf(p))
        out.limit_value = envelope_lp(g, half_width, p, kBaseSamples);
    else
        out.limit_value = std::pow(cos_abs_moment(p), 1.0 / p) *
                          envelope_lp(g, half_width, p, kBaseSamples);

    const double periods = omega * half_width / std::numbers::pi;
    const double want = std::max<double>(kBaseSamples, kSamplesPerPeriod * periods);
    if (want > static_cast<double>(sample_budget)) {
        if (strict)
            throw QuadratureBudgetError("oscillatory_lp_norm: carrier needs " +
                                        std::to_string(want) + " samples");
        return out;
    }
    const auto samples = static_cast<std::size_t>(want);
    auto mod = [&](double x) { return std::cos(omega * x) * g(x); };
    out.finite_omega_value = envelope_lp(mod, half_width, p, samples);
    return out;
}

double two_carrier_limit(const std::function<double(double)>& g,
                         double half_width, double p) {
    if (std::isinf(p)) return envelope_lp(g, half_width, p, kBaseSamples);
    const double m = cos_abs_moment(p);
    return std::pow(m * m, 1.0 / p) * envelope_lp(g, half_width, p, kBaseSamples);
}

} // namespace besov
