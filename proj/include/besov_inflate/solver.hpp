#pragma once

#include <functional>
#include <vector>

#include "besov_inflate/field.hpp"

namespace besov {

// Camassa-Holm in nonlocal transport form:
//   dt u + u dx u = -dx (1 - dx^2)^{-1} (u^2 + (dx u)^2 / 2)

// (1 - dx^2)^{-1}: multiplier 1/(1 + xi^2).
Field helmholtz_solve(const Field& f);

// Right-hand side du/dt; products dealiased. resolution_warning (optional out)
// is set when the spectral tail of u carries more than 1e-8 of the energy.
Field ch_rhs(const Field& u, bool* resolution_warning = nullptr);

double h1_energy(const Field& u);

struct SolverConfig {
    GridSpec grid;
    double dt = 1.0e-3;
    double t_end = 1.0;
    bool dealias = true;            // fixed on; kept for the config surface
    double cfl_guard = 0.5;         // max allowed |u|_inf dt / dx
    double slope_ceiling = 1.0e6;   // wave-breaking abort on |dx u|_inf
    bool store_states = true;       // keep every state (small grids only)

    void validate() const;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Field> states;      // empty when streaming
};

// observer(step_index, t, state) runs after every accepted step.
using Observer = std::function<void(std::size_t, double, const Field&)>;

Trajectory integrate(const Field& u0, const SolverConfig& cfg,
                     const Observer& observer = {});

// One RK4 step; exposes the stage states and stage times so a Lagrangian
// flow can be advanced through the same stages.
struct Rk4Stages {
    Field u1, u2, u3, u4;   // stage states
    Field next;             // accepted state at t + dt
};
Rk4Stages ch_rk4_step(const Field& u, double dt);

} // namespace besov
