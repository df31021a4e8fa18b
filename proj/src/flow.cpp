#include "besov_inflate/flow.hpp"

#include <cmath>
#include <complex>

#include "besov_inflate/errors.hpp"
#include "besov_inflate/fft.hpp"
#include "besov_inflate/lp.hpp"

namespace besov {

namespace {
inline double origin_sign(std::size_t k) { return (k & 1u) ? -1.0 : 1.0; }

// highest frequency actually present in f (relative threshold on |hat f|)
double content_bandwidth(const Field& f) {
    const auto& spec = f.spectrum();
    double peak = 0.0;
    for (const auto& c : spec) peak = std::max(peak, std::abs(c));
    if (peak == 0.0) return 0.0;
    for (std::size_t k = spec.size(); k-- > 0;)
        if (std::abs(spec[k]) > 1.0e-13 * peak) return f.grid().freq(k);
    return 0.0;
}
} // namespace

FlowState FlowState::identity(const GridSpec& grid) {
    FlowState s;
    s.grid_ = grid;
    s.disp_.assign(grid.point_count, 0.0);
    return s;
}

FlowState FlowState::from_displacement(const GridSpec& grid,
                                       std::vector<double> displacement) {
    if (displacement.size() != grid.point_count)
        throw GridMismatchError("FlowState: displacement size mismatch");
    FlowState s;
    s.grid_ = grid;
    s.disp_ = std::move(displacement);
    return s;
}

std::vector<double> FlowState::jacobian() const {
    const Field d = Field::from_samples(grid_, disp_);
    std::vector<double> jac = d.derivative().samples();
    for (double& v : jac) v += 1.0;
    return jac;
}

double FlowState::jacobian_min() const {
    double m = 1.0e300;
    for (double v : jacobian()) m = std::min(m, v);
    return m;
}

double FlowState::jacobian_max() const {
    double m = -1.0e300;
    for (double v : jacobian()) m = std::max(m, v);
    return m;
}

void FlowState::check_jacobian_window() const {
    const double lo = jacobian_min(), hi = jacobian_max();
    if (lo < 0.25 || hi > 4.0)
        throw JacobianBoundError("flow jacobian left [1/4, 4]: [" +
                                 std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

namespace {

Field compose_shift(const Field& f, double a) {
    const auto& spec = f.spectrum();
    std::vector<std::complex<double>> out(spec.size());
    for (std::size_t k = 0; k < spec.size(); ++k)
        out[k] = spec[k] * std::polar(1.0, a * f.grid().freq(k));
    return Field::from_spectrum(f.grid(), std::move(out));
}

Field compose_taylor(const Field& f, const std::vector<double>& d, double bound) {
    // order from B^m / m! < 1e-14
    int order = 1;
    double term = bound;
    while (term > 1.0e-14 && order < 24) {
        ++order;
        term *= bound / order;
    }
    const GridSpec& g = f.grid();

    // Differentiate a noise-filtered spectrum in place. Iterating
    // Field::derivative() through sample space would re-amplify FFT roundoff
    // in the top bins by a factor ~N/2 per order, swamping the series.
    const auto& spec = f.spectrum();
    double peak = 0.0;
    for (const auto& c : spec) peak = std::max(peak, std::abs(c));
    std::vector<std::complex<double>> dspec(spec.size());
    for (std::size_t k = 0; k < spec.size(); ++k)
        dspec[k] = std::abs(spec[k]) > 1.0e-13 * peak ? spec[k]
                                                      : std::complex<double>{0.0, 0.0};
    dspec.back() = {0.0, 0.0};

    std::vector<double> out = f.samples();
    std::vector<double> coeff(g.point_count, 1.0);
    for (int m = 1; m <= order; ++m) {
        for (std::size_t k = 0; k < dspec.size(); ++k)
            dspec[k] *= std::complex<double>(0.0, g.freq(k));
        const Field deriv =
            Field::from_spectrum(g, std::vector<std::complex<double>>(dspec));
        const auto& ds = deriv.samples();
        for (std::size_t i = 0; i < g.point_count; ++i) {
            coeff[i] *= d[i] / static_cast<double>(m);
            out[i] += coeff[i] * ds[i];
        }
    }
    return Field::from_samples(g, std::move(out));
}

Field compose_lagrange(const Field& f, const std::vector<double>& d) {
    const GridSpec& g = f.grid();
    const std::size_t n = g.point_count;
    const std::size_t os = 8;
    const std::size_t m = os * n;
    const double dxm = g.length / static_cast<double>(m);

    const auto& spec = f.spectrum();
    std::vector<std::complex<double>> pad(m / 2 + 1, {0.0, 0.0});
    for (std::size_t k = 0; k < spec.size(); ++k)
        pad[k] = spec[k] * (origin_sign(k) / dxm);
    std::vector<double> fine(m);
    fft::inverse(pad, fine, m);

    constexpr int kHalf = 6; // 12-point Lagrange
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        // target point in fine-grid units
        double pos = (g.node(i) + d[i] + 0.5 * g.length) / dxm;
        pos -= std::floor(pos / static_cast<double>(m)) * static_cast<double>(m);
        const auto base = static_cast<long>(std::floor(pos));
        const double t = pos - static_cast<double>(base);
        double acc = 0.0;
        for (int s = -kHalf + 1; s <= kHalf; ++s) {
            double w = 1.0;
            for (int r = -kHalf + 1; r <= kHalf; ++r) {
                if (r == s) continue;
                w *= (t - r) / static_cast<double>(s - r);
            }
            const long mm = static_cast<long>(m);
            const long idx = ((base + s) % mm + mm) % mm;
            acc += w * fine[static_cast<std::size_t>(idx)];
        }
        out[i] = acc;
    }
    return Field::from_samples(g, std::move(out));
}

} // namespace

Field compose(const Field& f, const FlowState& state) {
    if (!(f.grid() == state.grid()))
        throw GridMismatchError("compose: field and flow on different grids");
    const auto& d = state.displacement();
    double dmin = d[0], dmax = d[0];
    for (double v : d) {
        dmin = std::min(dmin, v);
        dmax = std::max(dmax, v);
    }
    if (dmax - dmin < 1.0e-15 * (1.0 + std::abs(dmax)))
        return compose_shift(f, 0.5 * (dmin + dmax));
    const double band = content_bandwidth(f);
    const double bound = std::max(std::abs(dmin), std::abs(dmax)) * band;
    if (bound < 0.9) return compose_taylor(f, d, bound);
    return compose_lagrange(f, d);
}

FlowState flow_rk4_step(const FlowState& state, const Field& u1, const Field& u2,
                        const Field& u3, const Field& u4, double dt) {
    const GridSpec& g = state.grid();
    const std::size_t n = g.point_count;
    const auto& d = state.displacement();

    auto eval = [&](const Field& u, const std::vector<double>& disp) {
        return compose(u, FlowState::from_displacement(g, disp)).samples();
    };
    auto shifted = [&](const std::vector<double>& k, double a) {
        std::vector<double> nd(n);
        for (std::size_t i = 0; i < n; ++i) nd[i] = d[i] + a * k[i];
        return nd;
    };

    const std::vector<double> k1 = eval(u1, d);
    const std::vector<double> k2 = eval(u2, shifted(k1, 0.5 * dt));
    const std::vector<double> k3 = eval(u3, shifted(k2, 0.5 * dt));
    const std::vector<double> k4 = eval(u4, shifted(k3, dt));

    std::vector<double> nd(n);
    for (std::size_t i = 0; i < n; ++i)
        nd[i] = d[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    FlowState out = FlowState::from_displacement(g, std::move(nd));
    out.check_jacobian_window();
    return out;
}

FlowState advance_flow(const FlowState& state, const VelocityAt& u_at, double t,
                       double dt) {
    const Field u1 = u_at(t);
    const Field uh = u_at(t + 0.5 * dt);
    const Field u4 = u_at(t + dt);
    return flow_rk4_step(state, u1, uh, uh, u4, dt);
}

Field transported_block_identity_residual(const std::vector<double>& times,
                                          const std::vector<Field>& u_traj,
                                          const std::vector<Field>& v_traj,
                                          const std::vector<Field>& p_traj,
                                          const std::vector<FlowState>& flow_traj,
                                          int j, std::size_t index) {
    const std::size_t m = times.size();
    if (u_traj.size() != m || v_traj.size() != m || p_traj.size() != m ||
        flow_traj.size() != m || index >= m)
        throw GridMismatchError("transported_block_identity_residual: trajectory mismatch");

    const GridSpec& g = v_traj.front().grid();
    auto integrand = [&](std::size_t s) {
        const Field rj = lp::commutator(u_traj[s], v_traj[s], j);
        const Field pj = lp::dyadic_block(p_traj[s], j);
        return compose(rj, flow_traj[s]) + compose(pj, flow_traj[s]);
    };

    Field acc = Field::zeros(g);
    Field prev = integrand(0);
    for (std::size_t s = 1; s <= index; ++s) {
        Field cur = integrand(s);
        acc = acc + (prev + cur).scaled(0.5 * (times[s] - times[s - 1]));
        prev = cur;
    }
    const Field lhs = compose(lp::dyadic_block(v_traj[index], j), flow_traj[index]);
    const Field rhs = lp::dyadic_block(v_traj.front(), j) + acc;
    return lhs - rhs;
}

} // namespace besov
