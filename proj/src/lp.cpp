#include "besov_inflate/lp.hpp"

#include <cmath>
#include <limits>

#include "besov_inflate/errors.hpp"

namespace besov::lp {

const CutoffPair& standard_cutoff() {
    static const CutoffPair pair = make_cutoff();
    return pair;
}

int max_resolved_block(const GridSpec& grid) {
    return static_cast<int>(std::floor(std::log2(grid.nyquist() * 3.0 / 8.0)));
}

int max_nonzero_block(const GridSpec& grid) {
    return static_cast<int>(std::floor(std::log2(grid.nyquist() * 4.0 / 3.0)));
}

Field dyadic_block(const Field& f, int j, bool strict) {
    const GridSpec& g = f.grid();
    if (j <= -2) return Field::zeros(g);
    const CutoffPair& c = standard_cutoff();
    if (j == -1) return f.multiplier([&](double xi) { return c.chi(xi); });
    if (strict && j > max_resolved_block(g))
        throw UnresolvedBlockError("dyadic_block: annulus of block " +
                                   std::to_string(j) + " exceeds Nyquist");
    const double scale = std::ldexp(1.0, -j);
    return f.multiplier([&](double xi) { return c.phi(scale * xi); });
}

double besov_norm(const Field& f, const BesovIndex& idx) {
    const int jmax = max_nonzero_block(f.grid());
    const bool sup = std::isinf(idx.r);
    double acc = 0.0;
    for (int j = -1; j <= jmax; ++j) {
        const double term =
            std::pow(2.0, idx.s * j) * lebesgue_norm(dyadic_block(f, j), idx.p);
        if (sup)
            acc = std::max(acc, term);
        else
            acc += std::pow(term, idx.r);
    }
    return sup ? acc : std::pow(acc, 1.0 / idx.r);
}

double besov_norm_restricted(const Field& f, double s, double p,
                             const std::set<int>& blocks) {
    double acc = 0.0;
    for (int j : blocks)
        acc += std::pow(2.0, s * j) * lebesgue_norm(dyadic_block(f, j), p);
    return acc;
}

Field commutator(const Field& u, const Field& v, int j) {
    require_same_grid(u, v, "commutator");
    const Field dv = v.derivative();
    const Field a = multiply_dealiased(u, dyadic_block(dv, j));
    const Field b = dyadic_block(multiply_dealiased(u, dv), j);
    return a - b;
}

BernsteinReport bernstein_report(const Field& f, int k, double p, double q,
                                 double lambda, SupportShape shape) {
    Field d = f;
    for (int i = 0; i < k; ++i) d = d.derivative();
    BernsteinReport rep;
    rep.lhs = lebesgue_norm(d, q);
    const double norm_p = lebesgue_norm(f, p);
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
    rep.rhs = std::pow(lambda, k + inv_p - inv_q) * norm_p;
    rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
    if (shape == SupportShape::annulus && p == q) {
        const double base = std::pow(lambda, k) * norm_p;
        rep.lower_ratio = base > 0.0 ? rep.lhs / base : 0.0;
    }
    return rep;
}

} // namespace besov::lp
