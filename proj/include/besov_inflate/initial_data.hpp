#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "besov_inflate/data_cutoff.hpp"
#include "besov_inflate/field.hpp"

namespace besov {

struct ConstructionParams {
    int n = 16;                  // construction scale, in 16N
    double gamma = 17.0 / 24.0;  // fixed by the construction
    double p = 4.0;              // Lebesgue exponent, must be > 2

    static ConstructionParams make(int n, double p = 4.0);
    double prefactor() const;    // 2^{-n} n^{-1/2} log n
};

// N(n) = {k in 8N : n/4 <= k <= n/2}
std::vector<int> freq_set(int n);

// Grid used for the n = 16 experiments: the carrier ~ 2^16 gamma needs
// N = 2^22 points over L = 200 after recentering.
GridSpec inflation_grid();

// Translation that brings the single n = 16 bump to the origin; 0 when the
// construction has several bumps.
double recenter_offset(const ConstructionParams& params);

// Samples u0(x + recenter) pointwise from the closed form, periodized over
// the grid length. Throws when the grid cannot resolve the carrier or a bump
// center sits within 50 decay lengths of the boundary.
Field build_u0(const ConstructionParams& params, const GridSpec& grid,
               double recenter = 0.0);

// Closed-form Fourier transform of u0 at a single frequency.
std::complex<double> u0_hat(double xi, const ConstructionParams& params);

// I_1 of the Lemma 3.2 proof, evaluated as printed (I_{1,1}+I_{1,2}+I_{1,3},
// scaled by n^{-1} log^2 n), at the paper's coordinate x.
double i1_closed_form(const ConstructionParams& params, int j, double x);

struct Lemma31Norms {
    double linf_u0 = 0.0;
    double linf_dxu0 = 0.0;
    double besov_b1p1 = 0.0;  // via the L^p interpolation bound
    double l1_u0 = 0.0;
};

// Grid evaluation for n = 16 when a grid is supplied; closed-form /
// oscillatory-limit evaluation otherwise (mandatory for n > 16).
Lemma31Norms lemma31_norms(const ConstructionParams& params,
                           const std::optional<GridSpec>& grid = std::nullopt);

struct Lemma32Result {
    double value = 0.0;                        // restricted block sum
    double log2n_ratio = 0.0;                  // value / log^2 n
    std::vector<std::pair<int, double>> per_block;
};

Lemma32Result lemma32_lower(const ConstructionParams& params,
                            const std::optional<GridSpec>& grid = std::nullopt);

} // namespace besov
