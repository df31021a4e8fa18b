#pragma once

#include <functional>
#include <vector>

#include "besov_inflate/field.hpp"

namespace besov {

// Lagrangian flow phi(t, .) sampled at grid nodes; the displacement
// phi(t, x) - x is stored (periodic, zero at t = 0).
class FlowState {
  public:
    static FlowState identity(const GridSpec& grid);
    static FlowState from_displacement(const GridSpec& grid,
                                       std::vector<double> displacement);

    const GridSpec& grid() const { return grid_; }
    const std::vector<double>& displacement() const { return disp_; }
    // dx phi = 1 + spectral derivative of the displacement
    std::vector<double> jacobian() const;
    double jacobian_min() const;
    double jacobian_max() const;

    // Throws JacobianBoundError outside the hard window [1/4, 4].
    void check_jacobian_window() const;

  private:
    GridSpec grid_;
    std::vector<double> disp_;
};

// f(phi(x)) at every node via band-limited interpolation of f. Constant
// displacements use the exact spectral shift; small displacements relative
// to f's bandwidth use a spectrally convergent Taylor expansion; otherwise
// high-order Lagrange interpolation on an 8x oversampled grid.
Field compose(const Field& f, const FlowState& state);

// One RK4 step of dphi/dt = u(t, phi) through four stage velocity fields
// (u at t, two stages at t + dt/2, u at t + dt).
FlowState flow_rk4_step(const FlowState& state, const Field& u1, const Field& u2,
                        const Field& u3, const Field& u4, double dt);

// Convenience wrapper taking a time interpolant for u.
using VelocityAt = std::function<Field(double)>;
FlowState advance_flow(const FlowState& state, const VelocityAt& u_at, double t,
                       double dt);

// Residual of Delta_j v o phi = Delta_j v0 + int R_j o phi + int Delta_j P o phi
// at stored step `index`, with trapezoid time integrals. v must solve
// dt v + u dx v = P along the supplied trajectories.
Field transported_block_identity_residual(const std::vector<double>& times,
                                          const std::vector<Field>& u_traj,
                                          const std::vector<Field>& v_traj,
                                          const std::vector<Field>& p_traj,
                                          const std::vector<FlowState>& flow_traj,
                                          int j, std::size_t index);

} // namespace besov
