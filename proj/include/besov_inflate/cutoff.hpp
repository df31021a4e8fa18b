#pragma once

namespace besov {

// C^infinity step: 0 for t <= 0, 1 for t >= 1, strictly increasing between.
// sharpness scales the exponents; sharpness = 1 is the standard profile.
double smooth_step(double t, double sharpness = 1.0);

// Littlewood-Paley low-pass chi and annular bump phi(xi) = chi(xi/2) - chi(xi).
// chi == 1 on |xi| <= 3/4, == 0 on |xi| >= 4/3; phi == 1 on 4/3 <= |xi| <= 3/2.
class CutoffPair {
  public:
    explicit CutoffPair(double sharpness = 1.0) : sharpness_(sharpness) {}
    double chi(double xi) const;
    double phi(double xi) const;

  private:
    double sharpness_;
};

CutoffPair make_cutoff(double transition_profile = 1.0);

} // namespace besov
