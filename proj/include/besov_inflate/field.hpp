#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "besov_inflate/grid.hpp"

namespace besov {

// Real-valued function sampled on a periodic grid, with a lazily cached
// half-spectrum under the convention
//   hat f(xi_k) = dx * sum_m f(x_m) e^{-i x_m xi_k},   xi_k = 2 pi k / L,
// i.e. the rectangle-rule approximation of int e^{-i x xi} f(x) dx.
class Field {
  public:
    Field() = default;

    static Field from_samples(const GridSpec& grid, std::vector<double> samples);
    static Field from_spectrum(const GridSpec& grid,
                               std::vector<std::complex<double>> spectrum);
    static Field zeros(const GridSpec& grid);
    static Field sample(const GridSpec& grid,
                        const std::function<double(double)>& f);

    const GridSpec& grid() const { return grid_; }
    const std::vector<double>& samples() const { return samples_; }

    // Cached half-spectrum (size N/2+1); computed on first use, thread-safe.
    const std::vector<std::complex<double>>& spectrum() const;
    bool spectrum_cached() const;

    // Apply a real multiplier m(xi) on the spectrum; returns a new Field.
    Field multiplier(const std::function<double(double)>& m) const;
    Field derivative() const;

    Field operator+(const Field& o) const;
    Field operator-(const Field& o) const;
    Field scaled(double a) const;

    double max_abs() const;
    // Fraction of spectral energy in |xi| > frac * nyquist.
    double tail_energy_fraction(double frac = 0.875) const;

  private:
    GridSpec grid_;
    std::vector<double> samples_;
    mutable std::shared_ptr<const std::vector<std::complex<double>>> spectrum_;
    mutable std::shared_ptr<std::mutex> mtx_ = std::make_shared<std::mutex>();
};

// Pointwise product computed with zero-padded transforms (2/3-rule style
// padding to 3N/2) so quadratic interactions of resolved modes are alias-free.
Field multiply_dealiased(const Field& a, const Field& b);

// L^p norm by rectangle rule; p = infinity gives the max of |samples|.
double lebesgue_norm(const Field& f, double p);
double lipschitz_norm(const Field& f);

void require_same_grid(const Field& a, const Field& b, const char* what);

} // namespace besov
