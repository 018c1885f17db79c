#include "lfe/cutoff.hpp"

#include <cmath>
#include <limits>

#include "lfe/summation.hpp"

namespace lfe {

ContourSpec ContourSpec::for_instance(const LFunctionInstance& inst, const KernelParams& kp,
                                      double tol) {
    const EvaluationStrip strip = evaluation_strip(inst);
    const double inv = 1.0 / (static_cast<double>(inst.m) * inst.m + 1.0);
    const double sigma = std::min(inv / 2.0, strip.sigma_max / 2.0);
    // Aliasing factor exp(-2 pi sigma / step) <= tol/100.
    const double step = std::min(0.05, 2.0 * M_PI * sigma / std::log(100.0 / tol));
    // Tail inequality, solved with a little slack for the polynomial factor.
    const double md = static_cast<double>(inst.md());
    double T = std::sqrt((std::log(10.0 / tol) + kp.a * sigma * sigma) / kp.a) + 1.0;
    while (std::exp(kp.a * (sigma * sigma - T * T)) *
               std::pow(1.0 + T, md * std::abs(sigma) / 2.0) >
           tol / 10.0)
        T += 0.5;
    return {sigma, step, T, tol};
}

void ContourSpec::validate(const LFunctionInstance& inst, const KernelParams& kp,
                           bool allow_zero_sigma) const {
    if (!(step > 0.0) || !(half_width > 0.0) || !(tol > 0.0))
        throw ContourError("ContourSpec: step, half_width and tol must be positive");
    if (sigma == 0.0 && !allow_zero_sigma)
        throw ContourError("ContourSpec: abscissa 0 puts the contour on the pole at s = 0");
    const EvaluationStrip strip = evaluation_strip(inst);
    if (sigma != 0.0 && !strip.contains(sigma))
        throw StripViolation("ContourSpec: abscissa " + std::to_string(sigma) +
                             " outside the safe strip (" + std::to_string(strip.sigma_min) +
                             ", " + std::to_string(strip.sigma_max) + ")");
    const double md = static_cast<double>(inst.md());
    const double tail = std::exp(kp.a * (sigma * sigma - half_width * half_width)) *
                        std::pow(1.0 + half_width, md * std::abs(sigma) / 2.0);
    if (tail > tol / 10.0)
        throw ContourError(
            "ContourSpec: Gaussian tail bound " + std::to_string(tail) +
            " exceeds tol/10; enlarge half_width");
}

CutoffFunction::CutoffFunction(LFunctionInstance inst, KernelParams kp, ContourSpec cs)
    : instance_(std::move(inst)), kernel_(kp), contour_(cs) {
    kernel_.validate();
    validate_instance(instance_);
    contour_.validate(instance_, kernel_, /*allow_zero_sigma=*/true);
    conductor_ = analytic_conductor(instance_);

    // Symmetric grid with a node at t = 0 and an even step count per side,
    // so the coarse (doubled-step) sum reuses the even-indexed nodes.
    std::int64_t half_steps =
        static_cast<std::int64_t>(std::ceil(contour_.half_width / contour_.step));
    if (half_steps % 2 != 0) ++half_steps;
    const std::int64_t count = 2 * half_steps + 1;
    node_s_.resize(static_cast<std::size_t>(count));
    node_w_.resize(static_cast<std::size_t>(count));
    const double scale = contour_.step / (2.0 * M_PI);
    for (std::int64_t i = 0; i < count; ++i) {
        const double t = (i - half_steps) * contour_.step;
        const Complex s{contour_.sigma, t};
        node_s_[static_cast<std::size_t>(i)] = s;
        node_w_[static_cast<std::size_t>(i)] = std::pow(conductor_, -s / 2.0) *
                                               gamma_factor_ratio(s, instance_) *
                                               mellin_kernel(s, kernel_) * scale;
    }
}

CutoffEvaluation CutoffFunction::integrate(double x, int k) const {
    if (!(x > 0.0)) throw DomainError("cutoff: x must be positive");
    const double logx = std::log(x);
    const std::size_t n = node_s_.size();
    std::vector<Complex> terms(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Complex s = node_s_[i];
        Complex factor = k == 0 ? 1.0 / s : 1.0;
        for (int j = 1; j < k; ++j) factor *= s + static_cast<double>(j);
        terms[i] = node_w_[i] * std::exp(-logx * s) * factor;
    }
    Complex fine = pairwise_sum(std::span<const Complex>(terms));
    std::vector<Complex> coarse_terms;
    coarse_terms.reserve(n / 2 + 1);
    for (std::size_t i = 0; i < n; i += 2) coarse_terms.push_back(2.0 * terms[i]);
    Complex coarse = pairwise_sum(std::span<const Complex>(coarse_terms));

    // Tail estimate: boundary integrand magnitude times the remaining
    // Gaussian mass ~ 1/(2aT) of exp(-a(t^2 - T^2)).
    const double boundary = std::abs(terms.front()) + std::abs(terms.back());
    const double tail =
        boundary / (contour_.step * 2.0 * kernel_.a * contour_.half_width);
    const double err = std::abs(fine - coarse) + tail;

    Complex value = fine;
    if (k > 0) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        value *= sign * std::pow(x, -static_cast<double>(k));
    } else if (contour_.sigma < 0.0) {
        value += 1.0;  // residue of the simple pole at s = 0
    }
    return {value, err, static_cast<int>(n)};
}

CutoffEvaluation CutoffFunction::value(double x) const {
    if (contour_.sigma == 0.0)
        throw ContourError("cutoff value: abscissa 0 puts the contour on the pole at s = 0");
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find({0, x});
        if (it != memo_.end()) return it->second;
    }
    CutoffEvaluation eval = integrate(x, 0);
    std::lock_guard<std::mutex> lock(memo_mutex_);
    memo_.emplace(std::make_pair(0, x), eval);
    return eval;
}

CutoffEvaluation CutoffFunction::derivative(double x, int k) const {
    if (k < 1) throw ValidationError("cutoff derivative: order must be >= 1 (use value)");
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find({k, x});
        if (it != memo_.end()) return it->second;
    }
    CutoffEvaluation eval = integrate(x, k);
    std::lock_guard<std::mutex> lock(memo_mutex_);
    memo_.emplace(std::make_pair(k, x), eval);
    return eval;
}

std::vector<DecayRow> decay_report(const LFunctionInstance& inst, const KernelParams& kp,
                                   const std::vector<double>& x_grid,
                                   std::optional<DecayEnvelope> small_x_envelope,
                                   std::optional<DecayEnvelope> large_x_envelope) {
    for (std::size_t i = 1; i < x_grid.size(); ++i)
        if (!(x_grid[i - 1] < x_grid[i]))
            throw ValidationError("decay_report: x grid must be strictly increasing");
    const CutoffFunction cf(inst, kp, ContourSpec::for_instance(inst, kp));
    std::vector<DecayRow> rows;
    rows.reserve(x_grid.size());
    for (double x : x_grid) {
        const Complex f = cf.value(x).value;
        const Complex fp = cf.derivative(x, 1).value;
        rows.push_back({x, std::abs(f), std::abs(f - 1.0), std::abs(fp),
                        std::numeric_limits<double>::quiet_NaN()});
    }
    for (std::size_t i = 1; i + 1 < rows.size(); ++i)
        rows[i].loglog_slope = (std::log(rows[i + 1].abs_f) - std::log(rows[i - 1].abs_f)) /
                               (std::log(rows[i + 1].x) - std::log(rows[i - 1].x));
    if (small_x_envelope)
        for (const DecayRow& r : rows)
            if (r.x <= small_x_envelope->threshold_x &&
                r.abs_f_minus_1 >
                    small_x_envelope->constant * std::pow(r.x, small_x_envelope->exponent))
                throw NumericalError("decay_report: |f - 1| envelope violated at x = " +
                                     std::to_string(r.x));
    if (large_x_envelope)
        for (const DecayRow& r : rows)
            if (r.x >= large_x_envelope->threshold_x &&
                r.abs_f >
                    large_x_envelope->constant * std::pow(r.x, large_x_envelope->exponent))
                throw NumericalError("decay_report: |f| envelope violated at x = " +
                                     std::to_string(r.x));
    return rows;
}

}  // namespace lfe
