#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "lfe/archimedean.hpp"
#include "lfe/kernel.hpp"
#include "lfe/model.hpp"

namespace lfe {

// Vertical-line contour for the inverse Mellin integrals.  Uniform-step
// trapezoid: the integrand is analytic in a horizontal band and decays like
// a Gaussian in t, so the rule converges geometrically in both the step and
// the truncation half-width.  Two inequalities must hold:
//   tail:     exp(a (sigma^2 - T^2)) (1+T)^{md |sigma|/2} <= tol/10
//   aliasing: exp(-2 pi dist / step) small, dist = distance from the line to
//             the nearest singularity (the pole at s = 0, i.e. |sigma|).
struct ContourSpec {
    double sigma;
    double step;
    double half_width;
    double tol;

    // Default contour for an instance: abscissa min(1/(2(m^2+1)), strip
    // midpoint), step capped at 0.05 and tightened until the aliasing factor
    // is below tol/100, half-width from the tail inequality.
    static ContourSpec for_instance(const LFunctionInstance& inst, const KernelParams& kp,
                                    double tol = 1e-12);

    void validate(const LFunctionInstance& inst, const KernelParams& kp,
                  bool allow_zero_sigma) const;
};

struct CutoffEvaluation {
    Complex value;
    double quad_error_estimate;
    int nodes_used;
};

// Pointwise evaluator of the smooth cutoff f and its derivatives by
// trapezoid quadrature of the vertical-line integrals.  The x-independent
// integrand factors are tabulated once per (instance, kernel, contour);
// evaluations are memoized per point.  No interpolation table is ever built,
// so every reported value carries its own quadrature error estimate.
class CutoffFunction {
public:
    CutoffFunction(LFunctionInstance inst, KernelParams kp, ContourSpec cs);

    // f(x): the inverse Mellin transform of C^{-s/2} ratio(s) H(s) / s on
    // the contour abscissa, plus the residue 1 whenever sigma < 0.  Requires
    // sigma != 0 (simple pole with residue 1 at s = 0).
    CutoffEvaluation value(double x) const;

    // f^(k)(x), k >= 1; the 1/s pole cancels, so any strip abscissa works.
    CutoffEvaluation derivative(double x, int k) const;

    const ContourSpec& contour() const { return contour_; }
    const LFunctionInstance& instance() const { return instance_; }
    double analytic_conductor_value() const { return conductor_; }

private:
    CutoffEvaluation integrate(double x, int k) const;

    LFunctionInstance instance_;
    KernelParams kernel_;
    ContourSpec contour_;
    double conductor_;
    // node_s_[i] = sigma + i t_i;  node_w_[i] = C^{-s/2} ratio(s) H(s)
    //   * step/(2 pi), without the 1/s and x^{-s} factors.
    std::vector<Complex> node_s_;
    std::vector<Complex> node_w_;
    mutable std::mutex memo_mutex_;
    mutable std::map<std::pair<int, double>, CutoffEvaluation> memo_;
};

// Decay diagnostics on a grid: magnitudes, distance from the small-x limit 1,
// first derivative, and the local log-log slope of |f|.
struct DecayRow {
    double x;
    double abs_f;
    double abs_f_minus_1;
    double abs_f_prime;
    double loglog_slope;  // NaN at the grid ends
};

// Optional envelope assertion |g(x)| <= constant * x^{exponent} on the rows
// with x below/above the threshold; throws NumericalError when violated.
struct DecayEnvelope {
    double threshold_x;
    double exponent;
    double constant;
};

std::vector<DecayRow> decay_report(const LFunctionInstance& inst, const KernelParams& kp,
                                   const std::vector<double>& x_grid,
                                   std::optional<DecayEnvelope> small_x_envelope = {},
                                   std::optional<DecayEnvelope> large_x_envelope = {});

}  // namespace lfe
