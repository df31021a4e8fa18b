#include <cmath>
#include <random>

#include "doctest.h"

#include "besov_inflate/cutoff.hpp"
#include "besov_inflate/data_cutoff.hpp"

using namespace besov;

TEST_CASE("smooth step endpoints and monotonicity") {
    CHECK(smooth_step(-1.0) == 0.0);
    CHECK(smooth_step(0.0) == 0.0);
    CHECK(smooth_step(1.0) == 1.0);
    CHECK(smooth_step(2.0) == 1.0);
    double prev = 0.0;
    for (int i = 1; i < 100; ++i) {
        const double v = smooth_step(i / 100.0);
        CHECK(v >= prev);
        prev = v;
    }
    CHECK(smooth_step(0.5) == doctest::Approx(0.5));
}

TEST_CASE("low-pass plateau and support") {
    const CutoffPair c = make_cutoff();
    CHECK(c.chi(0.5) == 1.0);
    CHECK(c.chi(0.75) == 1.0);
    CHECK(c.chi(2.0) == 0.0);
    CHECK(c.chi(4.0 / 3.0) == 0.0);
    CHECK(c.chi(-0.5) == 1.0);
    // monotone non-increasing in |xi|
    double prev = 1.0;
    for (int i = 0; i <= 200; ++i) {
        const double v = c.chi(2.0 * i / 200.0);
        CHECK(v <= prev + 1e-15);
        prev = v;
    }
}

TEST_CASE("annular bump plateau") {
    const CutoffPair c = make_cutoff();
    for (int i = 0; i < 1000; ++i) {
        const double xi = 4.0 / 3.0 + (1.5 - 4.0 / 3.0) * i / 999.0;
        CHECK(c.phi(xi) == doctest::Approx(1.0).epsilon(1e-13));
    }
    CHECK(c.phi(0.5) == 0.0);
    CHECK(c.phi(3.0) == 0.0);
}

TEST_CASE("partition of unity over random frequencies") {
    const CutoffPair c = make_cutoff();
    std::mt19937 rng(991);
    std::uniform_real_distribution<double> dist(-1.0e5, 1.0e5);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double xi = dist(rng);
        double sum = c.chi(xi);
        for (int j = 0; j <= 40; ++j) sum += c.phi(std::ldexp(xi, -j));
        worst = std::max(worst, std::abs(sum - 1.0));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("data cutoff plateau, support and normalization") {
    const DataCutoff& tab = DataCutoff::instance();
    CHECK(tab.chi_d(0.0) == 1.0);
    CHECK(tab.chi_d(0.25) == 1.0);
    CHECK(tab.chi_d(0.5) == 0.0);
    CHECK(tab.chi_d(-0.3) == tab.chi_d(0.3));

    // int chi_check dx = chi_d(0) = 1
    const double dx = 1.0e-2;
    double integral = 0.0;
    for (double x = -tab.range(); x <= tab.range(); x += dx)
        integral += tab.chi_check(x) * dx;
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-4));  // trapezoid at dx = 1e-2

    // even envelope, odd derivative
    CHECK(tab.chi_check(3.7) == doctest::Approx(tab.chi_check(-3.7)).epsilon(1e-12));
    CHECK(tab.chi_check_dx(3.7) == doctest::Approx(-tab.chi_check_dx(-3.7)).epsilon(1e-12));
    CHECK(tab.chi_check_dx(0.0) == doctest::Approx(0.0).epsilon(1e-12));

    CHECK(tab.peak() == doctest::Approx(0.1193662).epsilon(1e-5));
    CHECK(tab.linf() == doctest::Approx(tab.peak()).epsilon(1e-12));
}

TEST_CASE("data cutoff envelope decay") {
    const DataCutoff& tab = DataCutoff::instance();
    // |chi_check(x)| <= C (1 + |x|)^{-20} with a finite fitted C
    CHECK(std::isfinite(tab.decay_constant(20.0)));
    CHECK(tab.decay_constant(20.0) > 0.0);
    // tail is small but measurably nonzero: the envelope is Gevrey, not
    // compactly supported
    CHECK(tab.relative_tail(100.0) < 1e-3);
    CHECK(tab.relative_tail(100.0) > 0.0);
}
