#include "besov_inflate/experiment.hpp"

#include <cmath>

#include "besov_inflate/errors.hpp"
#include "besov_inflate/lp.hpp"

namespace besov {

Field compute_F(const Field& u) {
    return helmholtz_solve(multiply_dealiased(u, u)).derivative().scaled(-1.0);
}

Field compute_E(const Field& u) {
    const Field du = u.derivative();
    return helmholtz_solve(multiply_dealiased(du, du)).derivative().scaled(-0.5);
}

Field compute_G(const Field& u) {
    const Field du = u.derivative();
    const Field u2 = multiply_dealiased(u, u);
    const Field du2 = multiply_dealiased(du, du);
    const Field u3 = multiply_dealiased(u2, u);
    const Field term1 = u3.scaled(1.0 / 3.0);
    const Field term2 = multiply_dealiased(u, helmholtz_solve(du2)).scaled(-0.5);
    const Field inner = u3.scaled(1.0 / 3.0) - multiply_dealiased(u, du2).scaled(0.5) -
                        multiply_dealiased(du, helmholtz_solve(u2 + du2.scaled(0.5)))
                            .derivative();
    return term1 + term2 - helmholtz_solve(inner);
}

SourceTerms compute_sources(const Field& u) {
    return SourceTerms{compute_E(u), compute_F(u), compute_G(u)};
}

double block_sum_E0(const ConstructionParams& params, const GridSpec& grid) {
    const Field u0 = build_u0(params, grid, recenter_offset(params));
    const Field e0 = compute_E(u0);
    double acc = 0.0;
    for (int j : freq_set(params.n))
        acc += std::ldexp(lebesgue_norm(lp::dyadic_block(e0, j), params.p), j);
    return acc;
}

namespace {

Field accumulate(const Field& acc, const Field& prev, const Field& cur, double dt) {
    return acc + (prev + cur).scaled(0.5 * dt);
}

} // namespace

ExperimentReport run_inflation(const ConstructionParams& params,
                               const InflationConfig& cfg) {
    const auto blocks = freq_set(params.n);
    const double p = params.p;
    const double t_end = cfg.t_end.value_or(1.0 / std::log(double(params.n)));
    const GridSpec grid = cfg.grid;
    const double dt = cfg.dt;

    ExperimentReport report;
    report.params = params;

    Field u = build_u0(params, grid, recenter_offset(params));
    FlowState flow = FlowState::identity(grid);

    // frozen t = 0 pieces per block
    std::vector<Field> e0_blocks, u0_blocks;
    {
        const Field e0 = compute_E(u);
        for (int j : blocks) {
            e0_blocks.push_back(lp::dyadic_block(e0, j));
            u0_blocks.push_back(lp::dyadic_block(u, j));
        }
    }
    for (std::size_t b = 0; b < blocks.size(); ++b)
        report.block_sum_E0_value +=
            std::ldexp(lebesgue_norm(e0_blocks[b], p), blocks[b]);

    // trapezoid accumulators per block: R^1_j, Delta_j F, (Delta_j E o phi - E0_j),
    // and the Step-2 integrand [u, Delta_j] dx E o phi + Delta_j G o phi
    struct BlockAcc {
        Field R, F, Edrift, step2;
    };
    struct BlockIntegrand {
        Field R, F, Ecomp, step2;
    };

    auto integrands = [&](const Field& uu, const FlowState& fl) {
        const Field du = uu.derivative();
        const Field u2 = multiply_dealiased(uu, uu);
        const Field du2 = multiply_dealiased(du, du);
        const Field Fh = helmholtz_solve(u2).derivative().scaled(-1.0);
        const Field Eh = helmholtz_solve(du2).derivative().scaled(-0.5);
        const Field G = compute_G(uu);
        const Field dE = Eh.derivative();
        const Field u_dudx = u2.derivative().scaled(0.5); // u dx u
        const Field u_dEdx = multiply_dealiased(uu, dE);
        std::vector<BlockIntegrand> out;
        out.reserve(blocks.size());
        for (int j : blocks) {
            // R^1_j = u Delta_j dx u - Delta_j (u dx u)
            const Field r1 = multiply_dealiased(uu, lp::dyadic_block(du, j)) -
                             lp::dyadic_block(u_dudx, j);
            const Field commE = multiply_dealiased(uu, lp::dyadic_block(dE, j)) -
                                lp::dyadic_block(u_dEdx, j);
            out.push_back(BlockIntegrand{
                compose(r1, fl), compose(lp::dyadic_block(Fh, j), fl),
                compose(lp::dyadic_block(Eh, j), fl),
                compose(commE, fl) + compose(lp::dyadic_block(G, j), fl)});
        }
        return out;
    };

    std::vector<BlockAcc> acc;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        acc.push_back(BlockAcc{Field::zeros(grid), Field::zeros(grid),
                               Field::zeros(grid), Field::zeros(grid)});
    std::vector<BlockIntegrand> prev = integrands(u, flow);

    auto emit_row = [&](double t) {
        ReportRow row;
        row.t = t;
        row.besov = lp::besov_norm(u, lp::BesovIndex{1.0, p, 1.0});
        row.lipschitz = lipschitz_norm(u);
        row.energy = h1_energy(u);
        row.jacobian_min = flow.jacobian_min();
        row.jacobian_max = flow.jacobian_max();
        row.ledger_tE0 = t * report.block_sum_E0_value;

        // boundary-zone amplitude relative to peak (periodic-truncation monitor)
        const auto& us = u.samples();
        const std::size_t edge = grid.point_count / 64;
        double near_edge = 0.0;
        for (std::size_t i = 0; i < edge; ++i) {
            near_edge = std::max(near_edge, std::abs(us[i]));
            near_edge = std::max(near_edge, std::abs(us[us.size() - 1 - i]));
        }
        row.boundary_amplitude = near_edge / std::max(u.max_abs(), 1.0e-300);

        double resid_num = 0.0, resid_den = 0.0, comp_num = 0.0, comp_den = 0.0;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const int j = blocks[b];
            const Field bj = lp::dyadic_block(u, j);
            const Field measured = compose(bj, flow);
            row.block_sum += std::ldexp(lebesgue_norm(measured, p), j);
            comp_num += lebesgue_norm(measured, p);
            comp_den += lebesgue_norm(bj, p);

            row.ledger_u0 += std::ldexp(lebesgue_norm(u0_blocks[b], p), j);
            row.ledger_R += std::ldexp(lebesgue_norm(acc[b].R, p), j);
            row.ledger_F += std::ldexp(lebesgue_norm(acc[b].F, p), j);
            row.ledger_Edrift += std::ldexp(lebesgue_norm(acc[b].Edrift, p), j);

            const Field ledger_sum = u0_blocks[b] + acc[b].R + acc[b].F +
                                     acc[b].Edrift + e0_blocks[b].scaled(t);
            resid_num += lebesgue_norm(measured - ledger_sum, p);
            resid_den += lebesgue_norm(measured, p);

            // Step-2 cross-check: LHS directly, RHS from the accumulator
            const Field e_now = lp::dyadic_block(compute_E(u), j);
            const Field drift = compose(e_now, flow) - e0_blocks[b];
            row.step2_lhs += std::ldexp(lebesgue_norm(drift, p), j);
            row.step2_rhs += std::ldexp(lebesgue_norm(acc[b].step2, p), j);
        }
        row.closure_residual = resid_den > 0.0 ? resid_num / resid_den : 0.0;
        row.composition_ratio = comp_den > 0.0 ? comp_num / comp_den : 1.0;
        report.rows.push_back(row);
    };

    emit_row(0.0);

    const auto steps = static_cast<std::size_t>(std::llround(t_end / dt));
    double t = 0.0;
    for (std::size_t s = 0; s < steps; ++s) {
        if (u.max_abs() * dt / grid.spacing() > cfg.cfl_guard)
            throw BlowupError("run_inflation: CFL guard violated");
        if (u.derivative().max_abs() > cfg.slope_ceiling)
            throw BlowupError("run_inflation: slope ceiling (wave breaking guard)");

        const Rk4Stages st = ch_rk4_step(u, dt);
        flow = flow_rk4_step(flow, st.u1, st.u2, st.u3, st.u4, dt);
        u = st.next;
        t = dt * static_cast<double>(s + 1);

        std::vector<BlockIntegrand> cur = integrands(u, flow);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            acc[b].R = accumulate(acc[b].R, prev[b].R, cur[b].R, dt);
            acc[b].F = accumulate(acc[b].F, prev[b].F, cur[b].F, dt);
            acc[b].Edrift = accumulate(acc[b].Edrift, prev[b].Ecomp - e0_blocks[b],
                                       cur[b].Ecomp - e0_blocks[b], dt);
            acc[b].step2 = accumulate(acc[b].step2, prev[b].step2, cur[b].step2, dt);
        }
        prev = std::move(cur);

        if ((s + 1) % cfg.report_stride == 0 || s + 1 == steps) emit_row(t);
    }
    return report;
}

std::vector<Step2Point> step2_drift(const std::vector<double>& times,
                                    const std::vector<Field>& u_traj,
                                    const std::vector<FlowState>& flow_traj,
                                    int j, double p) {
    if (times.size() != u_traj.size() || times.size() != flow_traj.size())
        throw GridMismatchError("step2_drift: trajectory length mismatch");
    const GridSpec& g = u_traj.front().grid();
    const Field e0_j = lp::dyadic_block(compute_E(u_traj.front()), j);

    auto integrand = [&](std::size_t s) {
        const Field& uu = u_traj[s];
        const Field e = compute_E(uu);
        const Field comm = lp::commutator(uu, e, j);
        const Field gj = lp::dyadic_block(compute_G(uu), j);
        return compose(comm, flow_traj[s]) + compose(gj, flow_traj[s]);
    };

    std::vector<Step2Point> out;
    Field acc = Field::zeros(g);
    Field prev = integrand(0);
    out.push_back({times[0], 0.0, 0.0});
    for (std::size_t s = 1; s < times.size(); ++s) {
        Field cur = integrand(s);
        acc = acc + (prev + cur).scaled(0.5 * (times[s] - times[s - 1]));
        prev = std::move(cur);
        const Field drift =
            compose(lp::dyadic_block(compute_E(u_traj[s]), j), flow_traj[s]) - e0_j;
        out.push_back({times[s], std::ldexp(lebesgue_norm(drift, p), j),
                       std::ldexp(lebesgue_norm(acc, p), j)});
    }
    return out;
}

} // namespace besov
