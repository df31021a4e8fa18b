#include "besov_inflate/field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "besov_inflate/errors.hpp"
#include "besov_inflate/fft.hpp"

namespace besov {

namespace {
// Alternating sign (-1)^k accounts for the grid origin at x = -L/2.
inline double origin_sign(std::size_t k) { return (k & 1u) ? -1.0 : 1.0; }
} // namespace

Field Field::from_samples(const GridSpec& grid, std::vector<double> samples) {
    if (samples.size() != grid.point_count)
        throw GridMismatchError("Field::from_samples: sample count != grid size");
    for (double v : samples)
        if (!std::isfinite(v))
            throw InvalidParamError("Field::from_samples: non-finite sample");
    Field f;
    f.grid_ = grid;
    f.samples_ = std::move(samples);
    return f;
}

Field Field::from_spectrum(const GridSpec& grid,
                           std::vector<std::complex<double>> spectrum) {
    if (spectrum.size() != grid.spectrum_size())
        throw GridMismatchError("Field::from_spectrum: spectrum size mismatch");
    const std::size_t n = grid.point_count;
    const double inv_dx = 1.0 / grid.spacing();
    std::vector<std::complex<double>> tmp(spectrum.size());
    for (std::size_t k = 0; k < spectrum.size(); ++k)
        tmp[k] = spectrum[k] * (origin_sign(k) * inv_dx);
    Field f;
    f.grid_ = grid;
    f.samples_.resize(n);
    fft::inverse(tmp, f.samples_, n);
    f.spectrum_ = std::make_shared<const std::vector<std::complex<double>>>(
        std::move(spectrum));
    return f;
}

Field Field::zeros(const GridSpec& grid) {
    return from_samples(grid, std::vector<double>(grid.point_count, 0.0));
}

Field Field::sample(const GridSpec& grid, const std::function<double(double)>& f) {
    std::vector<double> s(grid.point_count);
    for (std::size_t i = 0; i < grid.point_count; ++i) s[i] = f(grid.node(i));
    return from_samples(grid, std::move(s));
}

const std::vector<std::complex<double>>& Field::spectrum() const {
    std::lock_guard lock(*mtx_);
    if (!spectrum_) {
        std::vector<std::complex<double>> spec(grid_.spectrum_size());
        fft::forward(samples_, spec);
        const double dx = grid_.spacing();
        for (std::size_t k = 0; k < spec.size(); ++k) spec[k] *= origin_sign(k) * dx;
        spectrum_ = std::make_shared<const std::vector<std::complex<double>>>(
            std::move(spec));
    }
    return *spectrum_;
}

bool Field::spectrum_cached() const {
    std::lock_guard lock(*mtx_);
    return spectrum_ != nullptr;
}

Field Field::multiplier(const std::function<double(double)>& m) const {
    const auto& spec = spectrum();
    std::vector<std::complex<double>> out(spec.size());
    for (std::size_t k = 0; k < spec.size(); ++k) out[k] = spec[k] * m(grid_.freq(k));
    return from_spectrum(grid_, std::move(out));
}

Field Field::derivative() const {
    const auto& spec = spectrum();
    std::vector<std::complex<double>> out(spec.size());
    for (std::size_t k = 0; k < spec.size(); ++k)
        out[k] = spec[k] * std::complex<double>(0.0, grid_.freq(k));
    // the (unpaired) Nyquist mode of an odd multiplier must stay real-safe
    out.back() = {0.0, 0.0};
    return from_spectrum(grid_, std::move(out));
}

Field Field::operator+(const Field& o) const {
    require_same_grid(*this, o, "Field::operator+");
    std::vector<double> s(samples_.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = samples_[i] + o.samples_[i];
    return from_samples(grid_, std::move(s));
}

Field Field::operator-(const Field& o) const {
    require_same_grid(*this, o, "Field::operator-");
    std::vector<double> s(samples_.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = samples_[i] - o.samples_[i];
    return from_samples(grid_, std::move(s));
}

Field Field::scaled(double a) const {
    std::vector<double> s(samples_.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = a * samples_[i];
    return from_samples(grid_, std::move(s));
}

double Field::max_abs() const {
    double m = 0.0;
    for (double v : samples_) m = std::max(m, std::abs(v));
    return m;
}

double Field::tail_energy_fraction(double frac) const {
    const auto& spec = spectrum();
    const double cut = frac * grid_.nyquist();
    double total = 0.0, tail = 0.0;
    for (std::size_t k = 0; k < spec.size(); ++k) {
        const double e = std::norm(spec[k]) * (k == 0 || k + 1 == spec.size() ? 1.0 : 2.0);
        total += e;
        if (grid_.freq(k) > cut) tail += e;
    }
    return total > 0.0 ? tail / total : 0.0;
}

Field multiply_dealiased(const Field& a, const Field& b) {
    require_same_grid(a, b, "multiply_dealiased");
    const GridSpec& g = a.grid();
    const std::size_t n = g.point_count;
    const std::size_t m = 3 * n / 2; // padded size, alias-free for quadratics
    const double len = g.length;
    const double dxm = len / static_cast<double>(m);

    auto upsample = [&](const Field& f) {
        const auto& spec = f.spectrum();
        std::vector<std::complex<double>> pad(m / 2 + 1, {0.0, 0.0});
        for (std::size_t k = 0; k < spec.size(); ++k)
            pad[k] = spec[k] * (origin_sign(k) / dxm);
        std::vector<double> vals(m);
        fft::inverse(pad, vals, m);
        return vals;
    };

    std::vector<double> va = upsample(a);
    std::vector<double> vb = upsample(b);
    for (std::size_t i = 0; i < m; ++i) va[i] *= vb[i];

    std::vector<std::complex<double>> prod(m / 2 + 1);
    fft::forward(va, prod);
    std::vector<std::complex<double>> out(g.spectrum_size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = prod[k] * (origin_sign(k) * dxm);
    return Field::from_spectrum(g, std::move(out));
}

double lebesgue_norm(const Field& f, double p) {
    if (std::isinf(p)) return f.max_abs();
    if (p < 1.0) throw InvalidParamError("lebesgue_norm: p must be >= 1");
    double acc = 0.0;
    for (double v : f.samples()) acc += std::pow(std::abs(v), p);
    return std::pow(acc * f.grid().spacing(), 1.0 / p);
}

double lipschitz_norm(const Field& f) {
    return f.max_abs() + f.derivative().max_abs();
}

void require_same_grid(const Field& a, const Field& b, const char* what) {
    if (!(a.grid() == b.grid()))
        throw GridMismatchError(std::string(what) + ": fields on different grids");
}

} // namespace besov
