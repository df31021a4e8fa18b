#pragma once

#include <vector>

namespace besov {

// The data-construction cutoff: chi_d == 1 on |xi| <= 1/4, == 0 on |xi| >= 1/2
// (distinct from the Littlewood-Paley chi), together with a tabulation of its
// inverse Fourier transform chi_check and the derivative. The tabulation is
// built once by a fine FFT and shared immutably.
class DataCutoff {
  public:
    static const DataCutoff& instance();

    double chi_d(double xi) const;

    // chi_check(x) = (1/2pi) int chi_d(xi) e^{i x xi} dxi, cubic interpolation
    // on the tabulation, zero outside |x| > range().
    double chi_check(double x) const;
    double chi_check_dx(double x) const;

    double range() const { return range_; }
    double peak() const { return peak_; }           // chi_check(0)
    double linf() const;                            // max |chi_check|
    double l1() const { return l1_; }               // int |chi_check|
    double lp(double p) const;                      // ||chi_check||_{L^p}

    // Fitted constant for |chi_check(x)| <= C (1+|x|)^{-M} on the tabulation.
    double decay_constant(double M = 20.0) const;
    // Relative envelope amplitude at |x| = r.
    double relative_tail(double r) const;

    const std::vector<double>& table() const { return values_; }
    double table_spacing() const { return dx_; }

  private:
    DataCutoff();
    double interp(const std::vector<double>& tab, double xa) const;

    double dx_ = 0.0;
    double range_ = 0.0;
    double peak_ = 0.0;
    double l1_ = 0.0;
    std::vector<double> values_;  // chi_check on [0, range]
    std::vector<double> deriv_;   // d/dx chi_check on [0, range]
};

} // namespace besov
