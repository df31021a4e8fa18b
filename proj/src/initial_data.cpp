#include "besov_inflate/initial_data.hpp"

#include <cmath>

#include "besov_inflate/errors.hpp"
#include "besov_inflate/lp.hpp"
#include "besov_inflate/oscillatory.hpp"

namespace besov {

ConstructionParams ConstructionParams::make(int n, double p) {
    if (n < 16 || n % 16 != 0)
        throw InvalidParamError("ConstructionParams: n must be a positive multiple of 16");
    if (!(p > 2.0))
        throw InvalidParamError("ConstructionParams: p must be > 2");
    ConstructionParams out;
    out.n = n;
    out.p = p;
    return out;
}

double ConstructionParams::prefactor() const {
    return std::ldexp(1.0, -n) / std::sqrt(static_cast<double>(n)) *
           std::log(static_cast<double>(n));
}

std::vector<int> freq_set(int n) {
    if (n < 16 || n % 16 != 0)
        throw InvalidParamError("freq_set: n must be a positive multiple of 16");
    std::vector<int> out;
    for (int k = 8; k <= n / 2; k += 8)
        if (4 * k >= n) out.push_back(k);
    return out;
}

GridSpec inflation_grid() { return GridSpec::make(200.0, std::size_t(1) << 22); }

double recenter_offset(const ConstructionParams& params) {
    const auto set = freq_set(params.n);
    if (set.size() != 1) return 0.0;
    return -std::ldexp(params.gamma, set.front() + 1);
}

Field build_u0(const ConstructionParams& params, const GridSpec& grid,
               double recenter) {
    const auto set = freq_set(params.n);
    const double gam = params.gamma;
    const double carrier_top =
        std::ldexp(gam, params.n) + std::ldexp(gam, set.back()) + 0.5;
    if (grid.nyquist() <= carrier_top)
        throw UnresolvedBlockError("build_u0: grid Nyquist below the carrier band");

    const double L = grid.length;
    const DataCutoff& tab = DataCutoff::instance();
    constexpr double kBoundaryClearance = 50.0;  // decay lengths (unit scale)

    struct Bump {
        double center;   // grid coordinate of the envelope peak, wrapped
        double omega_p;
        double omega_m;
        double phase_ref; // 2^{l+1} gamma
    };
    std::vector<Bump> bumps;
    for (int l : set) {
        const double shift = std::ldexp(gam, l + 1);
        double center = -shift - recenter;
        center -= L * std::round(center / L);
        if (L / 2.0 - std::abs(center) < kBoundaryClearance)
            throw CoverageError("build_u0: bump center within 50 decay lengths of boundary");
        bumps.push_back({center, std::ldexp(gam, params.n) + std::ldexp(gam, l),
                         std::ldexp(gam, params.n) - std::ldexp(gam, l), shift});
    }

    const double pref = params.prefactor();
    std::vector<double> samples(grid.point_count, 0.0);
    const int images = static_cast<int>(std::ceil(tab.range() / L)) + 1;
    for (const auto& b : bumps) {
        for (std::size_t i = 0; i < grid.point_count; ++i) {
            const double x = grid.node(i);
            double acc = 0.0;
            for (int m = -images; m <= images; ++m) {
                // theta = (x + recenter) + 2^{l+1} gamma, periodized
                const double theta = x - b.center + m * L;
                if (std::abs(theta) > tab.range()) continue;
                acc += (std::cos(theta * b.omega_p) + std::cos(theta * b.omega_m)) *
                       tab.chi_check(theta);
            }
            samples[i] += pref * acc;
        }
    }
    return Field::from_samples(grid, std::move(samples));
}

std::complex<double> u0_hat(double xi, const ConstructionParams& params) {
    const DataCutoff& tab = DataCutoff::instance();
    const double gam = params.gamma;
    const double carrier = std::ldexp(gam, params.n);
    std::complex<double> acc{0.0, 0.0};
    for (int l : freq_set(params.n)) {
        const double side = std::ldexp(gam, l);
        const double win = tab.chi_d(xi - carrier - side) + tab.chi_d(xi - carrier + side) +
                           tab.chi_d(xi + carrier - side) + tab.chi_d(xi + carrier + side);
        if (win == 0.0) continue;
        const double phase = std::ldexp(gam, l + 1) * xi;
        acc += std::polar(win, phase);
    }
    return acc * (0.5 * params.prefactor());
}

double i1_closed_form(const ConstructionParams& params, int j, double x) {
    const DataCutoff& tab = DataCutoff::instance();
    const double gam = params.gamma;
    const double theta = x + std::ldexp(gam, j + 1);
    const double carrier = std::ldexp(gam, j + 1);
    const double cc = tab.chi_check(theta);
    const double dc = tab.chi_check_dx(theta);
    const double cosv = std::cos(theta * carrier);
    const double sinv = std::sin(theta * carrier);
    const double i11 =
        (1.0 - std::ldexp(1.0, 2 * j - 2 * params.n)) * gam * gam * cosv * cc * cc;
    const double i12 = std::ldexp(1.0, -2 * params.n) * cosv * dc * dc;
    const double i13 = -std::ldexp(gam, j - 2 * params.n) * sinv * cc * dc;
    const double n = params.n;
    return std::log(n) * std::log(n) / n * (i11 + i12 + i13);
}

Lemma31Norms lemma31_norms(const ConstructionParams& params,
                           const std::optional<GridSpec>& grid) {
    Lemma31Norms out;
    const double pref = params.prefactor();
    const double np = params.n;
    const double pw = std::isinf(params.p) ? 0.0 : 1.0 / params.p;
    if (grid) {
        const Field u0 = build_u0(params, *grid, recenter_offset(params));
        out.linf_u0 = u0.max_abs();
        out.linf_dxu0 = u0.derivative().max_abs();
        out.l1_u0 = lebesgue_norm(u0, 1.0);
    } else {
        const DataCutoff& tab = DataCutoff::instance();
        auto env = [&](double x) { return tab.chi_check(x); };
        const double bump_l1 = 2.0 * two_carrier_limit(env, tab.range(), 1.0);
        out.linf_u0 = 2.0 * pref * tab.linf();
        // slope is dominated by the fast carrier pair, combined frequency 2^{n+1} gamma
        out.linf_dxu0 = pref * 2.0 * std::ldexp(params.gamma, params.n) * tab.linf();
        out.l1_u0 = pref * static_cast<double>(freq_set(params.n).size()) * bump_l1;
    }
    // single-block norm, L^p by interpolation between L^1 and L^infinity
    const double lp_bound =
        std::pow(out.l1_u0, pw) * std::pow(out.linf_u0, 1.0 - pw);
    out.besov_b1p1 = std::ldexp(lp_bound, params.n - 1);
    (void)np;
    return out;
}

Lemma32Result lemma32_lower(const ConstructionParams& params,
                            const std::optional<GridSpec>& grid) {
    Lemma32Result out;
    const auto blocks = freq_set(params.n);
    const double n = params.n;
    const double logn = std::log(n);
    if (grid) {
        const Field u0 = build_u0(params, *grid, recenter_offset(params));
        const Field du = u0.derivative();
        const Field sq = multiply_dealiased(du, du);
        for (int j : blocks) {
            const double v = lebesgue_norm(lp::dyadic_block(sq, j), params.p);
            out.per_block.emplace_back(j, v);
            out.value += v;
        }
        out.log2n_ratio = out.value / (logn * logn);
        return out;
    }
    const DataCutoff& tab = DataCutoff::instance();
    for (int j : blocks) {
        const double omega = std::ldexp(params.gamma, j + 1);
        const double g2 = params.gamma * params.gamma;
        auto env11 = [&](double x) {
            const double c = tab.chi_check(x);
            return (1.0 - std::ldexp(1.0, 2 * j - 2 * params.n)) * g2 * c * c;
        };
        auto env12 = [&](double x) {
            const double d = tab.chi_check_dx(x);
            return std::ldexp(1.0, -2 * params.n) * d * d;
        };
        auto env13 = [&](double x) {
            return std::ldexp(params.gamma, j - 2 * params.n) *
                   tab.chi_check(x) * tab.chi_check_dx(x);
        };
        const auto n11 = oscillatory_lp_norm(env11, tab.range(), omega, params.p);
        const auto n12 = oscillatory_lp_norm(env12, tab.range(), omega, params.p);
        const auto n13 = oscillatory_lp_norm(env13, tab.range(), omega, params.p);
        auto value_of = [](const OscillatoryNorm& v) {
            return v.finite_omega_value.value_or(v.limit_value);
        };
        double block_val = value_of(n11) - value_of(n12) - value_of(n13);
        block_val *= logn * logn / n;
        out.per_block.emplace_back(j, block_val);
        out.value += block_val;
    }
    // I_2..I_5 remainder: C log^2 n 2^{-(1-1/p) n M / 2} with M = 20, C = 1
    const double pw = std::isinf(params.p) ? 0.0 : 1.0 / params.p;
    out.value -= 4.0 * logn * logn * std::pow(2.0, -(1.0 - pw) * n * 20.0 / 2.0);
    out.log2n_ratio = out.value / (logn * logn);
    return out;
}

} // namespace besov
