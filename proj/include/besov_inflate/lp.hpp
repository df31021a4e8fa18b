#pragma once

#include <set>
#include <vector>

#include "besov_inflate/cutoff.hpp"
#include "besov_inflate/field.hpp"

namespace besov::lp {

struct BesovIndex {
    double s = 0.0;
    double p = 2.0;   // Lebesgue exponent, > 2 in this artifact's scope
    double r = 1.0;   // summability, 1 or infinity
};

// Largest j whose annulus support 2^j * [3/4, 8/3] fits under the Nyquist
// frequency. Blocks above may still be nonzero on the grid when the field's
// actual content sits below Nyquist inside the (clipped) annulus.
int max_resolved_block(const GridSpec& grid);

// Largest j whose annulus intersects representable frequencies at all.
int max_nonzero_block(const GridSpec& grid);

// Inhomogeneous dyadic block Delta_j f. j <= -2 gives the zero field,
// j = -1 the low-pass chi(D) f, j >= 0 the annular phi(2^{-j} D) f.
// strict = true errors when the annulus is not fully resolved.
Field dyadic_block(const Field& f, int j, bool strict = false);

double besov_norm(const Field& f, const BesovIndex& idx);
double besov_norm_restricted(const Field& f, double s, double p,
                             const std::set<int>& blocks);

// R_j = [u, Delta_j] dx v = u Delta_j dx v - Delta_j (u dx v), dealiased.
Field commutator(const Field& u, const Field& v, int j);

enum class SupportShape { ball, annulus };

struct BernsteinReport {
    double lhs = 0.0;   // ||dx^k f||_{L^q}
    double rhs = 0.0;   // lambda^{k + 1/p - 1/q} ||f||_{L^p}
    double ratio = 0.0; // lhs / rhs, 0 for the zero field
    double lower_ratio = 0.0; // annulus only: lhs / (lambda^k ||f||_p)
};

// Measures both sides of the Lemma-2.1-type inequality for a field the
// caller asserts to be supported in lambda * (ball or annulus).
BernsteinReport bernstein_report(const Field& f, int k, double p, double q,
                                 double lambda, SupportShape shape);

const CutoffPair& standard_cutoff();

} // namespace besov::lp
