#pragma once

#include <cstdint>
#include <vector>

#include "lfe/model.hpp"

// Independent reference computations used by tests and fixtures: Dirichlet
// central values via Hurwitz zeta, root numbers via Gauss sums, Ramanujan
// tau coefficients via the eta product, and a classical incomplete-gamma
// smoothed sum.  Nothing here touches the contour-quadrature evaluator, so
// agreement between the two routes is meaningful.

namespace lfe::oracles {

struct DirichletCharacter {
    std::int64_t q;
    std::vector<Complex> values;  // values[a] for a = 0..q-1; 0 when gcd(a,q) > 1
    bool odd;                     // chi(-1) = -1

    Complex at(std::int64_t n) const {
        const std::int64_t r = ((n % q) + q) % q;
        return values[static_cast<std::size_t>(r)];
    }
};

// The real quadratic character of modulus q for q in {3,4,5,7,8,11} (odd
// primes via squares; the odd character mod 4; the even character mod 8).
DirichletCharacter quadratic_character(std::int64_t q);

// Completely multiplicative on the table, values roots of unity, primitive.
void validate_character(const DirichletCharacter& chi);
bool is_primitive(const DirichletCharacter& chi);
bool is_principal(const DirichletCharacter& chi);

// Hurwitz zeta by Euler-Maclaurin with Bernoulli tail correction.
// 1e-12 target for |s| <= 100, alpha in (0, 1].  s = 1 is the pole.
Complex hurwitz_zeta(Complex s, double alpha);

// L(s, chi) = q^{-s} sum_a chi(a) zeta(s, a/q); chi primitive non-principal.
Complex dirichlet_L(Complex s, const DirichletCharacter& chi);

// kappa = tau(chi) / (i^delta sqrt(q)), delta = 0/1 for even/odd chi.
Complex gauss_sum_root_number(const DirichletCharacter& chi);

// Ramanujan tau via exact integer expansion of the 24th power of the
// pentagonal-number series; returns a_n = tau(n) / n^{11/2}.
std::vector<std::int64_t> ramanujan_tau(std::int64_t n_max);
CoefficientSource ramanujan_coefficients(std::int64_t n_max);

// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x)/Gamma(a) for
// real a > 0, x >= 0 (series for x < a+1, continued fraction otherwise).
double upper_incomplete_gamma_reg(double a, double x);

// Classical central-value evaluation through the completed function: the two
// Dirichlet series reweighted by normalized upper-incomplete-gamma factors.
// Supports real spectral parameters in the two desk shapes: md = 1, and
// md = 2 with mu_2 = mu_1 + 1 (half-integral weight pair).  Algorithmically
// disjoint from the contour route: no Mellin kernel, no quadrature.
Complex incomplete_gamma_central_value(const LFunctionInstance& inst);

// Pinned fixture set: the six quadratic-character instances and the
// normalized weight-12 cusp form, plus optional unitary twists baked into
// the coefficient data so the twisted instance satisfies its own functional
// equation.
LFunctionInstance dirichlet_fixture(std::int64_t q, std::int64_t length, double twist_t = 0.0);
LFunctionInstance delta_fixture(std::int64_t length);

struct FixtureSpec {
    std::string name;
    std::int64_t default_length;
};
std::vector<FixtureSpec> builtin_fixture_names();

// name with optional parameters, e.g. "dirichlet-5", "delta:length=2000",
// "dirichlet-5:length=8000:twist=100".
LFunctionInstance builtin_fixture(const std::string& spec);

}  // namespace lfe::oracles
