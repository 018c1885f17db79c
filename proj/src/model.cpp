#include "lfe/model.hpp"

#include <cmath>

#include "lfe/summation.hpp"

namespace lfe {

void validate_instance(const LFunctionInstance& inst, const AdmissibilityOptions& opts) {
    if (inst.m < 1 || inst.d < 1)
        throw AdmissibilityError("instance '" + inst.label + "': m and d must be positive");
    if (inst.conductor < 1)
        throw AdmissibilityError("instance '" + inst.label + "': conductor must be >= 1");
    if (std::abs(std::abs(inst.root_number) - 1.0) > 1e-12)
        throw AdmissibilityError("instance '" + inst.label +
                                 "': root number must be unitary (| |kappa|-1 | <= 1e-12)");
    if (static_cast<std::int64_t>(inst.arch.mu.size()) != inst.md())
        throw AdmissibilityError("instance '" + inst.label + "': expected " +
                                 std::to_string(inst.md()) + " spectral parameters, got " +
                                 std::to_string(inst.arch.mu.size()));
    const double theta = opts.theta_low(inst.m);
    for (std::size_t j = 0; j < inst.arch.mu.size(); ++j) {
        const Complex mu = inst.arch.mu[j];
        if (mu.real() < theta - 1e-12)
            throw AdmissibilityError(
                "instance '" + inst.label + "': Re mu_" + std::to_string(j + 1) + " = " +
                std::to_string(mu.real()) +
                " violates the Luo-Rudnick-Sarnak admissibility bound (requires >= " +
                std::to_string(theta) + ")");
        if (std::abs(mu - Complex{-0.5, 0.0}) < 1e-12)
            throw AdmissibilityError("instance '" + inst.label + "': mu_" +
                                     std::to_string(j + 1) +
                                     " = -1/2 puts a gamma pole at the central point");
    }
    if (!inst.coefficients)
        throw AdmissibilityError("instance '" + inst.label + "': coefficient source missing");
}

double analytic_conductor(const LFunctionInstance& inst) {
    double prod = static_cast<double>(inst.conductor) /
                  std::pow(M_PI, static_cast<double>(inst.md()));
    for (const Complex& mu : inst.arch.mu)
        prod *= std::abs(0.25 + mu / 2.0);
    return prod;
}

double eta_min(const LFunctionInstance& inst) {
    double best = std::abs(0.25 + inst.arch.mu.front() / 2.0);
    for (const Complex& mu : inst.arch.mu)
        best = std::min(best, std::abs(0.25 + mu / 2.0));
    return best;
}

LFunctionInstance contragredient(const LFunctionInstance& inst) {
    LFunctionInstance dual = inst;
    for (Complex& mu : dual.arch.mu) mu = std::conj(mu);
    dual.root_number = std::conj(inst.root_number);
    std::vector<Complex> a(static_cast<std::size_t>(inst.coefficients->declared_length()));
    for (std::int64_t n = 1; n <= inst.coefficients->declared_length(); ++n)
        a[static_cast<std::size_t>(n - 1)] = std::conj(inst.coefficients->at(n));
    dual.coefficients = std::make_shared<CoefficientSource>(std::move(a));
    return dual;
}

LFunctionInstance twist(const LFunctionInstance& inst, double t,
                        const AdmissibilityOptions& opts) {
    if (t == 0.0) return inst;
    LFunctionInstance out = inst;
    for (Complex& mu : out.arch.mu) mu += Complex{0.0, t};
    // Root number for data kept in the canonical gamma-factor shape: the
    // conductor and pi powers both shift, giving kappa * (pi^md / N)^{it}.
    const double phase =
        t * (static_cast<double>(inst.md()) * std::log(M_PI) -
             std::log(static_cast<double>(inst.conductor)));
    out.root_number = inst.root_number * std::polar(1.0, phase);
    validate_instance(out, opts);
    return out;
}

CoefficientGrowthReport coefficient_growth_diagnostic(const CoefficientSource& src,
                                                      std::int64_t x, double eps) {
    if (x < 0) throw DomainError("coefficient_growth_diagnostic: x must be nonnegative");
    if (x > src.declared_length())
        throw CoefficientExhaustion("coefficient_growth_diagnostic: x = " + std::to_string(x) +
                                    " beyond declared length " +
                                    std::to_string(src.declared_length()));
    std::vector<double> mags(static_cast<std::size_t>(x));
    for (std::int64_t n = 1; n <= x; ++n)
        mags[static_cast<std::size_t>(n - 1)] = std::abs(src.at(n));
    const double partial = pairwise_sum(std::span<const double>(mags));
    const double reference = x == 0 ? 0.0 : std::pow(static_cast<double>(x), 1.0 + eps);
    const double ratio = x == 0 ? 0.0 : partial / reference;
    return {partial, reference, ratio};
}

}  // namespace lfe
