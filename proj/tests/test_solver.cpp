#include <cmath>
#include <numbers>

#include "doctest.h"

#include "besov_inflate/errors.hpp"
#include "besov_inflate/solver.hpp"

using namespace besov;

namespace {
const GridSpec kGrid = GridSpec::make(2.0 * std::numbers::pi, 256);

double max_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.samples().size(); ++i)
        m = std::max(m, std::abs(a.samples()[i] - b.samples()[i]));
    return m;
}
} // namespace

TEST_CASE("helmholtz inverse on single modes") {
    const Field c1 = Field::sample(kGrid, [](double x) { return std::cos(x); });
    const Field c2 = Field::sample(kGrid, [](double x) { return std::cos(2.0 * x); });
    const Field one = Field::sample(kGrid, [](double) { return 1.0; });

    CHECK(max_diff(helmholtz_solve(c1), c1.scaled(0.5)) <= 1e-14);
    CHECK(max_diff(helmholtz_solve(c2), c2.scaled(0.2)) <= 1e-14);
    CHECK(max_diff(helmholtz_solve(one), one) <= 1e-14);
}

TEST_CASE("right-hand side oracles") {
    SUBCASE("constants are stationary") {
        const Field c = Field::sample(kGrid, [](double) { return 0.7; });
        CHECK(ch_rhs(c).max_abs() <= 1e-14);
    }
    SUBCASE("single cosine mode") {
        const Field u = Field::sample(kGrid, [](double x) { return std::cos(x); });
        const Field ref =
            Field::sample(kGrid, [](double x) { return 0.6 * std::sin(2.0 * x); });
        CHECK(max_diff(ch_rhs(u), ref) <= 1e-12);
    }
    SUBCASE("resolution warning fires on a saw-like spectrum") {
        // content right at the grid tail
        std::vector<std::complex<double>> spec(kGrid.spectrum_size(), {0.0, 0.0});
        spec[kGrid.spectrum_size() - 2] = {1.0, 0.0};
        const Field bad = Field::from_spectrum(kGrid, std::move(spec));
        bool warn = false;
        ch_rhs(bad, &warn);
        CHECK(warn);
        warn = false;
        const Field good = Field::sample(kGrid, [](double x) { return std::cos(x); });
        ch_rhs(good, &warn);
        CHECK_FALSE(warn);
    }
}

TEST_CASE("energy functional") {
    CHECK(h1_energy(Field::zeros(kGrid)) == 0.0);
    const Field c = Field::sample(kGrid, [](double x) { return std::cos(x); });
    CHECK(h1_energy(c) == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-13));
}

TEST_CASE("integration") {
    SUBCASE("zero data stays zero") {
        SolverConfig cfg{kGrid, 1e-2, 0.1};
        const auto traj = integrate(Field::zeros(kGrid), cfg);
        CHECK(traj.times.size() == 11);
        for (const auto& s : traj.states) CHECK(s.max_abs() == 0.0);
    }
    SUBCASE("energy conservation on a smooth run") {
        SolverConfig cfg{kGrid, 1e-3, 0.2};
        cfg.store_states = false;
        const Field u0 = Field::sample(kGrid, [](double x) { return 0.1 * std::cos(x); });
        double e_end = 0.0;
        integrate(u0, cfg, [&](std::size_t, double, const Field& s) {
            e_end = h1_energy(s);
        });
        CHECK(std::abs(e_end - h1_energy(u0)) / h1_energy(u0) <= 1e-9);
    }
    SUBCASE("fourth-order accuracy in dt") {
        const Field u0 = Field::sample(kGrid, [](double x) { return 0.2 * std::cos(x); });
        auto end_state = [&](double dt) {
            SolverConfig cfg{kGrid, dt, 0.5};
            cfg.store_states = false;
            Field end = u0;
            integrate(u0, cfg, [&](std::size_t, double, const Field& s) { end = s; });
            return end;
        };
        const Field ref = end_state(1.0 / 3200.0);
        const double e1 = max_diff(end_state(1.0 / 100.0), ref);
        const double e2 = max_diff(end_state(1.0 / 200.0), ref);
        CHECK(e1 / e2 >= 12.0);
        CHECK(e1 / e2 <= 20.0);
    }
    SUBCASE("time reversal returns the data") {
        const Field u0 = Field::sample(kGrid, [](double x) { return 0.1 * std::cos(x); });
        SolverConfig cfg{kGrid, 1e-3, 0.3};
        cfg.store_states = false;
        Field end = u0;
        integrate(u0, cfg, [&](std::size_t, double, const Field& s) { end = s; });
        Field back = end.scaled(-1.0);
        integrate(back, cfg, [&](std::size_t, double, const Field& s) { back = s; });
        CHECK(max_diff(back.scaled(-1.0), u0) <= 1e-10);
    }
    SUBCASE("guards") {
        SolverConfig cfg{kGrid, 10.0, 20.0};   // CFL hopeless
        const Field u0 = Field::sample(kGrid, [](double x) { return std::cos(x); });
        CHECK_THROWS_AS(integrate(u0, cfg), BlowupError);

        SolverConfig cfg2{kGrid, 1e-3, 0.5};
        cfg2.slope_ceiling = 1e-3;             // triggers immediately
        CHECK_THROWS_AS(integrate(u0, cfg2), BlowupError);

        SolverConfig bad{kGrid, -1.0, 1.0};
        CHECK_THROWS_AS(bad.validate(), InvalidParamError);
    }
}
