#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lfe/errors.hpp"

namespace lfe {

using Complex = std::complex<double>;

// Admissibility floor for Re mu_j.  The unconditional default is the
// Luo-Rudnick-Sarnak bound 1/(m^2+1) - 1/2; the tempered option raises it
// to 0 (Ramanujan-Selberg).  The safe evaluation strip width depends on it.
struct AdmissibilityOptions {
    bool tempered = false;

    double theta_low(int m) const {
        return tempered ? 0.0 : 1.0 / (static_cast<double>(m) * m + 1.0) - 0.5;
    }
};

// Spectral parameters at the Archimedean places: md shifts appearing in the
// gamma factors.  Dimensionless.
struct ArchimedeanParams {
    std::vector<Complex> mu;
};

// Finite list of Dirichlet coefficients, indexed from n = 1 in the unitary
// (analytic) normalization: the functional equation is symmetric about
// s = 1/2 and the contragredient's coefficients are the conjugates.
// Requests beyond the declared length throw, never return zero.
class CoefficientSource {
public:
    explicit CoefficientSource(std::vector<Complex> a) : a_(std::move(a)) {}

    Complex at(std::int64_t n) const {
        if (n < 1 || n > declared_length())
            throw CoefficientExhaustion(
                "coefficient index " + std::to_string(n) + " beyond declared length " +
                std::to_string(declared_length()));
        return a_[static_cast<std::size_t>(n - 1)];
    }

    std::int64_t declared_length() const { return static_cast<std::int64_t>(a_.size()); }

private:
    std::vector<Complex> a_;
};

// One principal L-function: GL(m) over a degree-d field, integer conductor,
// unit-modulus root number, md spectral parameters, finite coefficient data.
// Immutable after construction; the coefficient list is shared.
struct LFunctionInstance {
    std::string label;
    int m = 1;
    int d = 1;
    std::int64_t conductor = 1;
    Complex root_number{1.0, 0.0};
    ArchimedeanParams arch;
    std::shared_ptr<const CoefficientSource> coefficients;

    std::int64_t md() const { return static_cast<std::int64_t>(m) * d; }
};

// Validates all instance invariants; throws AdmissibilityError naming the
// first violated one.
void validate_instance(const LFunctionInstance& inst, const AdmissibilityOptions& opts = {});

// C = (N / pi^md) prod_j |1/4 + mu_j/2|.  Equal for an instance and its
// contragredient.
double analytic_conductor(const LFunctionInstance& inst);

// min_j |1/4 + mu_j/2|: distance of the nearest central gamma argument from
// the origin.  Small values degrade the explicit-kernel error term.
double eta_min(const LFunctionInstance& inst);

// Contragredient data: conjugated spectral parameters, root number and
// coefficients.
LFunctionInstance contragredient(const LFunctionInstance& inst);

// Twist by the unitary character |det|^{it}.  Conductor unchanged; spectral
// parameters shift by it; the root number picks up (pi^md / N)^{it}; the
// coefficient list is untouched (evaluators reweight by n^{-it} themselves).
// t = 0 returns the instance unchanged, field for field.
LFunctionInstance twist(const LFunctionInstance& inst, double t,
                        const AdmissibilityOptions& opts = {});

// Average-growth diagnostic for the coefficients: compares sum_{n<=x} |a_n|
// with x^{1+eps}.  Reports only; never rejects an instance.
struct CoefficientGrowthReport {
    double partial_sum;
    double reference;
    double ratio;
};

CoefficientGrowthReport coefficient_growth_diagnostic(const CoefficientSource& src,
                                                      std::int64_t x, double eps);

}  // namespace lfe
