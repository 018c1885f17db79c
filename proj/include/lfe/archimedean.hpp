#pragma once

#include <vector>

#include "lfe/gamma.hpp"
#include "lfe/model.hpp"

namespace lfe {

// Abscissa range on which every gamma argument of the completed-factor ratio
// keeps positive real part, so principal-branch logs are single-valued and
// continuous.  Evaluation never leaves this strip: the contour integrals are
// abscissa-independent inside it, and staying inside avoids branch tracking
// through the gamma-pole crossings that start at Re s = min_j(1/2 + Re mu_j).
struct EvaluationStrip {
    double sigma_min;
    double sigma_max;

    bool contains(double sigma) const { return sigma > sigma_min && sigma < sigma_max; }
};

// delta = 1e-3 keeps the gamma arguments' real parts bounded away from zero.
EvaluationStrip evaluation_strip(const LFunctionInstance& inst, double delta = 1e-3);

// log of the completed Archimedean factor: sum_j [ -(s/2) log pi
// + log Gamma((s + mu_j)/2) ].  Throws StripViolation if any gamma argument
// leaves the right half-plane.
Complex log_gamma_factor(Complex s, const ArchimedeanParams& arch,
                         const GammaAccuracy& acc = {});

// The square-root-normalized ratio of completed Archimedean factors,
// realized as exp of half the principal log-sum.  Single-valued and
// continuous on the strip; equals 1 at s = 0 by exact cancellation, which
// pins the branch.  Conjugation symmetry: conj(ratio(s, pi)) =
// ratio(conj s, contragredient pi).
Complex gamma_factor_ratio(Complex s, const LFunctionInstance& inst,
                           const GammaAccuracy& acc = {});

// Unit-modulus phase lambda = prod_j Gamma((1/2 + conj mu_j)/2)
//                                  / Gamma((1/2 + mu_j)/2).
// Exactly 1 when all mu_j are real.
Complex lambda_phase(const LFunctionInstance& inst, const GammaAccuracy& acc = {});

// Max over a t-grid of |C^{-s/2} ratio(s)| / (1+|s|)^{md sigma/2} at
// s = sigma + it.  Finiteness is the assertion; tests pin the empirical
// ceiling per fixture.  Exactly 1 on the critical abscissa sigma = 0.
struct GrowthSweepReport {
    double max_normalized;
    double t_at_max;
};

GrowthSweepReport vertical_growth_sweep(const LFunctionInstance& inst, double sigma,
                                        double t_max, int n_points);

// Deviation of the unit-circle point C^{-it/2} ratio(it) from 1, with the
// uniform small-shift bound c |t| eta^{-1} C^eps it is measured against.
struct SmallShiftReport {
    double deviation;
    double bound;
};

SmallShiftReport small_shift_deviation(const LFunctionInstance& inst, double t,
                                       double harness_constant = 10.0, double eps = 0.1);

}  // namespace lfe
