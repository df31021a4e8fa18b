#include "besov_inflate/data_cutoff.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "besov_inflate/cutoff.hpp"
#include "besov_inflate/fft.hpp"

namespace besov {

namespace {
constexpr double kTabSpacing = 1.0e-3;
constexpr std::size_t kTabFft = std::size_t(1) << 22;
constexpr double kTabRange = 200.0;
} // namespace

double DataCutoff::chi_d(double xi) const {
    // plateau 1/4, support 1/2
    return smooth_step((0.5 - std::abs(xi)) / 0.25);
}

DataCutoff::DataCutoff() {
    dx_ = kTabSpacing;
    range_ = kTabRange;
    const double period = kTabSpacing * static_cast<double>(kTabFft);
    const double dxi = 2.0 * std::numbers::pi / period;

    // Fine trapezoid of the inverse transform == FFT of sampled chi_d; the
    // quadrature error is the periodization at distance ~period, negligible.
    std::vector<std::complex<double>> spec(kTabFft / 2 + 1, {0.0, 0.0});
    std::vector<std::complex<double>> dspec(kTabFft / 2 + 1, {0.0, 0.0});
    const double scale = dxi / (2.0 * std::numbers::pi) * static_cast<double>(kTabFft);
    for (std::size_t k = 0; k < spec.size(); ++k) {
        const double xi = dxi * static_cast<double>(k);
        const double c = chi_d(xi);
        if (c == 0.0 && xi > 0.6) break;
        spec[k] = {c * scale, 0.0};
        dspec[k] = {0.0, xi * c * scale};
    }
    std::vector<double> full(kTabFft), dfull(kTabFft);
    fft::inverse(spec, full, kTabFft);
    fft::inverse(dspec, dfull, kTabFft);

    const std::size_t keep = static_cast<std::size_t>(range_ / dx_) + 8;
    values_.assign(full.begin(), full.begin() + keep);
    deriv_.assign(dfull.begin(), dfull.begin() + keep);
    peak_ = values_[0];

    l1_ = std::abs(values_[0]) * dx_;
    for (std::size_t m = 1; m < keep; ++m) l1_ += 2.0 * std::abs(values_[m]) * dx_;
}

const DataCutoff& DataCutoff::instance() {
    static const DataCutoff tab;
    return tab;
}

double DataCutoff::interp(const std::vector<double>& tab, double xa) const {
    const double u = xa / dx_;
    std::size_t i = static_cast<std::size_t>(u);
    if (i < 1) i = 1;
    if (i + 2 >= tab.size()) return 0.0;
    const double t = u - static_cast<double>(i);
    // 4-point Lagrange on uniform nodes i-1..i+2
    const double f0 = tab[i - 1], f1 = tab[i], f2 = tab[i + 1], f3 = tab[i + 2];
    const double a = -t * (t - 1.0) * (t - 2.0) / 6.0;
    const double b = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
    const double c = -(t + 1.0) * t * (t - 2.0) / 2.0;
    const double d = (t + 1.0) * t * (t - 1.0) / 6.0;
    return a * f0 + b * f1 + c * f2 + d * f3;
}

double DataCutoff::chi_check(double x) const {
    const double xa = std::abs(x);
    if (xa > range_) return 0.0;
    if (xa < dx_) {
        // symmetric stencil across the origin
        const double t = xa / dx_;
        const double f0 = values_[1], f1 = values_[0], f2 = values_[1], f3 = values_[2];
        const double a = -t * (t - 1.0) * (t - 2.0) / 6.0;
        const double b = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
        const double c = -(t + 1.0) * t * (t - 2.0) / 2.0;
        const double d = (t + 1.0) * t * (t - 1.0) / 6.0;
        return a * f0 + b * f1 + c * f2 + d * f3;
    }
    return interp(values_, xa);
}

double DataCutoff::chi_check_dx(double x) const {
    const double xa = std::abs(x);
    if (xa > range_) return 0.0;
    const double sign = x < 0.0 ? -1.0 : 1.0;
    if (xa < dx_) {
        const double t = xa / dx_;
        // derivative is odd: value at -dx is -deriv_[1]
        const double f0 = -deriv_[1], f1 = 0.0, f2 = deriv_[1], f3 = deriv_[2];
        const double a = -t * (t - 1.0) * (t - 2.0) / 6.0;
        const double b = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
        const double c = -(t + 1.0) * t * (t - 2.0) / 2.0;
        const double d = (t + 1.0) * t * (t - 1.0) / 6.0;
        return sign * (a * f0 + b * f1 + c * f2 + d * f3);
    }
    return sign * interp(deriv_, xa);
}

double DataCutoff::linf() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

double DataCutoff::lp(double p) const {
    if (std::isinf(p)) return linf();
    double acc = std::pow(std::abs(values_[0]), p) * dx_;
    for (std::size_t m = 1; m < values_.size(); ++m)
        acc += 2.0 * std::pow(std::abs(values_[m]), p) * dx_;
    return std::pow(acc, 1.0 / p);
}

double DataCutoff::decay_constant(double M) const {
    double c = 0.0;
    for (std::size_t m = 0; m < values_.size(); ++m) {
        const double x = dx_ * static_cast<double>(m);
        c = std::max(c, std::abs(values_[m]) * std::pow(1.0 + x, M));
    }
    return c;
}

double DataCutoff::relative_tail(double r) const {
    double m = 0.0;
    for (std::size_t i = static_cast<std::size_t>(r / dx_); i < values_.size(); ++i)
        m = std::max(m, std::abs(values_[i]));
    return m / peak_;
}

} // namespace besov
