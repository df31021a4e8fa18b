#include "besov_inflate/solver.hpp"

#include <cmath>

#include "besov_inflate/errors.hpp"

namespace besov {

Field helmholtz_solve(const Field& f) {
    return f.multiplier([](double xi) { return 1.0 / (1.0 + xi * xi); });
}

Field ch_rhs(const Field& u, bool* resolution_warning) {
    if (resolution_warning)
        *resolution_warning = u.tail_energy_fraction() > 1.0e-8;
    const Field du = u.derivative();
    const Field u2 = multiply_dealiased(u, u);
    const Field du2 = multiply_dealiased(du, du);
    // -u u_x = -(1/2) dx u^2
    const Field advect = u2.derivative().scaled(-0.5);
    const Field source = helmholtz_solve(u2 + du2.scaled(0.5)).derivative().scaled(-1.0);
    return advect + source;
}

double h1_energy(const Field& u) {
    const Field du = u.derivative();
    double acc = 0.0;
    const auto& us = u.samples();
    const auto& ds = du.samples();
    for (std::size_t i = 0; i < us.size(); ++i)
        acc += us[i] * us[i] + ds[i] * ds[i];
    return acc * u.grid().spacing();
}

void SolverConfig::validate() const {
    if (dt <= 0.0) throw InvalidParamError("SolverConfig: dt must be positive");
    if (cfl_guard > 0.5) throw InvalidParamError("SolverConfig: cfl_guard must be <= 0.5");
    if (t_end < 0.0) throw InvalidParamError("SolverConfig: t_end must be >= 0");
}

Rk4Stages ch_rk4_step(const Field& u, double dt) {
    Rk4Stages s;
    s.u1 = u;
    const Field k1 = ch_rhs(s.u1);
    s.u2 = u + k1.scaled(0.5 * dt);
    const Field k2 = ch_rhs(s.u2);
    s.u3 = u + k2.scaled(0.5 * dt);
    const Field k3 = ch_rhs(s.u3);
    s.u4 = u + k3.scaled(dt);
    const Field k4 = ch_rhs(s.u4);
    s.next = u + (k1 + k2.scaled(2.0) + k3.scaled(2.0) + k4).scaled(dt / 6.0);
    return s;
}

Trajectory integrate(const Field& u0, const SolverConfig& cfg, const Observer& observer) {
    cfg.validate();
    if (!(u0.grid() == cfg.grid))
        throw GridMismatchError("integrate: u0 not on the configured grid");

    auto check_guards = [&](const Field& u, double t) {
        const double cfl = u.max_abs() * cfg.dt / cfg.grid.spacing();
        if (cfl > cfg.cfl_guard)
            throw BlowupError("integrate: CFL guard violated at t = " + std::to_string(t));
        if (u.derivative().max_abs() > cfg.slope_ceiling)
            throw BlowupError("integrate: slope ceiling hit at t = " + std::to_string(t) +
                              " (approaching wave breaking)");
    };

    Trajectory traj;
    Field u = u0;
    double t = 0.0;
    check_guards(u, t);
    traj.times.push_back(t);
    if (cfg.store_states) traj.states.push_back(u);

    const auto steps = static_cast<std::size_t>(std::llround(cfg.t_end / cfg.dt));
    for (std::size_t s = 0; s < steps; ++s) {
        u = ch_rk4_step(u, cfg.dt).next;
        t = cfg.dt * static_cast<double>(s + 1);
        check_guards(u, t);
        traj.times.push_back(t);
        if (cfg.store_states) traj.states.push_back(u);
        if (observer) observer(s + 1, t, u);
    }
    return traj;
}

} // namespace besov
