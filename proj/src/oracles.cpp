#include "lfe/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lfe/summation.hpp"

namespace lfe::oracles {

namespace {

// B_{2j} / (2j)!, j = 1..20.
constexpr double kBernoulliFact[20] = {
    8.3333333333333333333e-02,
    -1.3888888888888888889e-03,
    3.3068783068783068783e-05,
    -8.2671957671957671958e-07,
    2.0876756987868098979e-08,
    -5.2841901386874931848e-10,
    1.3382536530684678833e-11,
    -3.3896802963225828668e-13,
    8.5860620562778445641e-15,
    -2.1748686985580618730e-16,
    5.5090028283602295152e-18,
    -1.3954464685812523341e-19,
    3.5347070396294674717e-21,
    -8.9535174270375468504e-23,
    2.2679524523376830603e-24,
    -5.7447906688722024453e-26,
    1.4551724756148649019e-27,
    -3.6859949406653101782e-29,
    9.3367342570950446720e-31,
    -2.3650224157006299346e-32,
};

}  // namespace

DirichletCharacter quadratic_character(std::int64_t q) {
    DirichletCharacter chi;
    chi.q = q;
    chi.values.assign(static_cast<std::size_t>(q), Complex{0.0, 0.0});
    if (q == 4) {
        chi.values[1] = 1.0;
        chi.values[3] = -1.0;
    } else if (q == 8) {
        chi.values[1] = 1.0;
        chi.values[3] = -1.0;
        chi.values[5] = -1.0;
        chi.values[7] = 1.0;
    } else {
        // odd prime: Legendre symbol via the set of nonzero squares
        std::vector<bool> is_square(static_cast<std::size_t>(q), false);
        for (std::int64_t x = 1; x < q; ++x)
            is_square[static_cast<std::size_t>((x * x) % q)] = true;
        for (std::int64_t a = 1; a < q; ++a)
            chi.values[static_cast<std::size_t>(a)] =
                is_square[static_cast<std::size_t>(a)] ? 1.0 : -1.0;
    }
    chi.odd = std::abs(chi.values[static_cast<std::size_t>(q - 1)] - Complex{-1.0, 0.0}) < 0.5;
    validate_character(chi);
    return chi;
}

void validate_character(const DirichletCharacter& chi) {
    const std::int64_t q = chi.q;
    if (q < 1 || static_cast<std::int64_t>(chi.values.size()) != q)
        throw ValidationError("character: table size must equal the modulus");
    for (std::int64_t a = 0; a < q; ++a) {
        const bool coprime = std::gcd(a, q) == 1;
        const double mag = std::abs(chi.values[static_cast<std::size_t>(a)]);
        if (coprime && std::abs(mag - 1.0) > 1e-12)
            throw ValidationError("character: values on units must be roots of unity");
        if (!coprime && mag > 1e-12)
            throw ValidationError("character: values off units must vanish");
    }
    for (std::int64_t a = 1; a < q; ++a)
        for (std::int64_t b = a; b < q; ++b)
            if (std::abs(chi.at(a * b) - chi.at(a) * chi.at(b)) > 1e-12)
                throw ValidationError("character: table is not completely multiplicative");
    if (!is_primitive(chi))
        throw ValidationError("character: table is imprimitive (conductor below modulus)");
}

bool is_primitive(const DirichletCharacter& chi) {
    const std::int64_t q = chi.q;
    if (q == 1) return true;
    for (std::int64_t f = 1; f < q; ++f) {
        if (q % f != 0) continue;
        // chi is induced by a character mod f iff it agrees on all unit
        // pairs congruent mod f
        bool periodic = true;
        for (std::int64_t a = 1; a < q && periodic; ++a) {
            if (std::gcd(a, q) != 1) continue;
            for (std::int64_t b = a + f; b < q && periodic; b += f) {
                if (std::gcd(b, q) != 1) continue;
                if (std::abs(chi.at(a) - chi.at(b)) > 1e-12) periodic = false;
            }
        }
        if (periodic) return false;
    }
    return true;
}

bool is_principal(const DirichletCharacter& chi) {
    for (std::int64_t a = 1; a < chi.q; ++a)
        if (std::gcd(a, chi.q) == 1 &&
            std::abs(chi.at(a) - Complex{1.0, 0.0}) > 1e-12)
            return false;
    return true;
}

Complex hurwitz_zeta(Complex s, double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw DomainError("hurwitz_zeta: alpha must lie in (0, 1]");
    if (std::abs(s - Complex{1.0, 0.0}) < 1e-14)
        throw DomainError("hurwitz_zeta: pole at s = 1");

    // Euler-Maclaurin cutoff grows with |Im s| to keep the Bernoulli tail
    // convergent at double precision.
    const std::int64_t K =
        std::max<std::int64_t>(30, static_cast<std::int64_t>(std::ceil(
                                       1.5 * std::abs(s.imag()) + 10.0)));
    std::vector<Complex> head(static_cast<std::size_t>(K));
    for (std::int64_t n = 0; n < K; ++n)
        head[static_cast<std::size_t>(n)] =
            std::exp(-s * std::log(static_cast<double>(n) + alpha));
    Complex ans = pairwise_sum(std::span<const Complex>(head));

    const double base = static_cast<double>(K) + alpha;
    const Complex pK = std::exp(-s * std::log(base));  // (K+alpha)^{-s}
    ans += pK * base / (s - 1.0) + 0.5 * pK;

    // sum_j B_{2j}/(2j)! * (s)(s+1)...(s+2j-2) * (K+alpha)^{-s-2j+1}
    Complex rising = s;            // (s)_{2j-1}
    Complex tail_pow = pK / base;  // (K+alpha)^{-s-2j+1}
    for (int j = 1; j <= 20; ++j) {
        const Complex delta = kBernoulliFact[j - 1] * rising * tail_pow;
        ans += delta;
        if (std::abs(delta) < 1e-17 * std::abs(ans)) break;
        rising *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
        tail_pow /= base * base;
    }
    return ans;
}

Complex dirichlet_L(Complex s, const DirichletCharacter& chi) {
    validate_character(chi);
    if (is_principal(chi))
        throw DomainError("dirichlet_L: principal character has a pole at s = 1");
    std::vector<Complex> parts(static_cast<std::size_t>(chi.q));
    for (std::int64_t a = 1; a <= chi.q; ++a) {
        const Complex c = chi.at(a);
        parts[static_cast<std::size_t>(a - 1)] =
            std::abs(c) < 0.5
                ? Complex{0.0, 0.0}
                : c * hurwitz_zeta(s, static_cast<double>(a) / static_cast<double>(chi.q));
    }
    return std::exp(-s * std::log(static_cast<double>(chi.q))) *
           pairwise_sum(std::span<const Complex>(parts));
}

Complex gauss_sum_root_number(const DirichletCharacter& chi) {
    if (!is_primitive(chi))
        throw ValidationError("gauss_sum_root_number: character must be primitive");
    Complex tau{0.0, 0.0};
    for (std::int64_t a = 1; a <= chi.q; ++a)
        tau += chi.at(a) *
               std::polar(1.0, 2.0 * M_PI * static_cast<double>(a) /
                                   static_cast<double>(chi.q));
    const Complex denom = (chi.odd ? Complex{0.0, 1.0} : Complex{1.0, 0.0}) *
                          std::sqrt(static_cast<double>(chi.q));
    const Complex kappa = tau / denom;
    if (std::abs(std::abs(kappa) - 1.0) > 1e-12)
        throw NumericalError("gauss_sum_root_number: |kappa| strayed from 1");
    return kappa;
}

namespace {

using Wide = __int128;

void mul_trunc(const std::vector<Wide>& a, const std::vector<Wide>& b,
               std::vector<Wide>& out, std::size_t n_max) {
    out.assign(n_max + 1, 0);
    for (std::size_t i = 0; i <= n_max && i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const std::size_t jmax = std::min(b.size() - 1, n_max - i);
        for (std::size_t j = 0; j <= jmax; ++j) {
            if (b[j] == 0) continue;
            Wide prod;
            if (__builtin_mul_overflow(a[i], b[j], &prod))
                throw NumericalError("ramanujan_tau: wide-integer overflow in product");
            if (__builtin_add_overflow(out[i + j], prod, &out[i + j]))
                throw NumericalError("ramanujan_tau: wide-integer overflow in sum");
        }
    }
}

}  // namespace

std::vector<std::int64_t> ramanujan_tau(std::int64_t n_max) {
    if (n_max < 1 || n_max > 100000)
        throw ValidationError("ramanujan_tau: n_max must lie in [1, 1e5]");
    const auto deg = static_cast<std::size_t>(n_max - 1);  // degree of E^24 needed
    // Pentagonal-number series prod (1-x^k) = sum (-1)^j x^{j(3j-1)/2}.
    std::vector<Wide> euler(deg + 1, 0);
    euler[0] = 1;
    for (std::int64_t j = 1;; ++j) {
        const std::int64_t p1 = j * (3 * j - 1) / 2;
        const std::int64_t p2 = j * (3 * j + 1) / 2;
        if (p1 > static_cast<std::int64_t>(deg) && p2 > static_cast<std::int64_t>(deg)) break;
        const Wide sign = (j % 2 == 0) ? 1 : -1;
        if (p1 <= static_cast<std::int64_t>(deg)) euler[static_cast<std::size_t>(p1)] += sign;
        if (p2 <= static_cast<std::int64_t>(deg)) euler[static_cast<std::size_t>(p2)] += sign;
    }
    std::vector<Wide> e2, e4, e8, e16, e24;
    mul_trunc(euler, euler, e2, deg);
    mul_trunc(e2, e2, e4, deg);
    mul_trunc(e4, e4, e8, deg);
    mul_trunc(e8, e8, e16, deg);
    mul_trunc(e16, e8, e24, deg);
    std::vector<std::int64_t> tau(static_cast<std::size_t>(n_max + 1), 0);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const Wide t = e24[static_cast<std::size_t>(n - 1)];
        if (t > Wide(9223372036854775807LL) || t < -Wide(9223372036854775807LL) - 1)
            throw NumericalError("ramanujan_tau: value exceeds 64 bits at n = " +
                                 std::to_string(n));
        tau[static_cast<std::size_t>(n)] = static_cast<std::int64_t>(t);
    }
    return tau;
}

CoefficientSource ramanujan_coefficients(std::int64_t n_max) {
    const std::vector<std::int64_t> tau = ramanujan_tau(n_max);
    std::vector<Complex> a(static_cast<std::size_t>(n_max));
    for (std::int64_t n = 1; n <= n_max; ++n)
        a[static_cast<std::size_t>(n - 1)] =
            static_cast<double>(tau[static_cast<std::size_t>(n)]) /
            std::pow(static_cast<double>(n), 5.5);
    return CoefficientSource(std::move(a));
}

double upper_incomplete_gamma_reg(double a, double x) {
    if (!(a > 0.0) || x < 0.0)
        throw DomainError("upper_incomplete_gamma_reg: needs a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {
        // lower series P(a,x), then Q = 1 - P
        double term = 1.0 / a, sum = term, ap = a;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-17) break;
        }
        return 1.0 - sum * std::exp(-x + a * std::log(x) - lg);
    }
    // continued fraction for Q(a,x), modified Lentz
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-17) break;
    }
    return std::exp(-x + a * std::log(x) - lg) * h;
}

Complex incomplete_gamma_central_value(const LFunctionInstance& inst) {
    validate_instance(inst);
    for (const Complex& mu : inst.arch.mu)
        if (std::abs(mu.imag()) > 1e-12)
            throw ValidationError(
                "incomplete_gamma_central_value: supports real spectral parameters only");
    const auto N = static_cast<double>(inst.conductor);
    double weight_a;
    double scale;  // X_n = scale * f(n): argument of the incomplete gamma
    bool square_argument;
    if (inst.md() == 1) {
        const double mu = inst.arch.mu[0].real();
        weight_a = (0.5 + mu) / 2.0;
        scale = M_PI / N;
        square_argument = true;  // X_n = pi n^2 / N
    } else if (inst.md() == 2 &&
               std::abs((inst.arch.mu[1] - inst.arch.mu[0]).real() - 1.0) < 1e-12) {
        const double mu1 = std::min(inst.arch.mu[0].real(), inst.arch.mu[1].real());
        weight_a = 0.5 + mu1;
        scale = 2.0 * M_PI / std::sqrt(N);
        square_argument = false;  // X_n = 2 pi n / sqrt(N)
    } else {
        throw ValidationError(
            "incomplete_gamma_central_value: gamma-factor shape not supported (md = 1 or "
            "md = 2 with mu_2 = mu_1 + 1)");
    }
    // lambda = 1 for real spectral parameters
    const Complex kl = inst.root_number;

    std::vector<Complex> terms;
    for (std::int64_t n = 1;; ++n) {
        const double narg = static_cast<double>(n);
        const double X = square_argument ? scale * narg * narg : scale * narg;
        const double w = upper_incomplete_gamma_reg(weight_a, X);
        if (w < 1e-18 && n > 2) break;
        if (n > inst.coefficients->declared_length())
            throw CoefficientExhaustion(
                "incomplete_gamma_central_value: ran out of coefficients at n = " +
                std::to_string(n));
        const Complex a = inst.coefficients->at(n);
        terms.push_back(a / std::sqrt(narg) * w + kl * std::conj(a) / std::sqrt(narg) * w);
    }
    return pairwise_sum(std::span<const Complex>(terms));
}

LFunctionInstance dirichlet_fixture(std::int64_t q, std::int64_t length, double twist_t) {
    const DirichletCharacter chi = quadratic_character(q);
    LFunctionInstance inst;
    inst.label = "dirichlet-" + std::to_string(q);
    inst.m = 1;
    inst.d = 1;
    inst.conductor = q;
    inst.root_number = gauss_sum_root_number(chi);
    inst.arch.mu = {Complex{chi.odd ? 1.0 : 0.0, 0.0}};
    std::vector<Complex> a(static_cast<std::size_t>(length));
    for (std::int64_t n = 1; n <= length; ++n)
        a[static_cast<std::size_t>(n - 1)] = chi.at(n);
    inst.coefficients = std::make_shared<CoefficientSource>(std::move(a));
    validate_instance(inst);
    if (twist_t != 0.0) {
        // a genuine instance for the twisted object: shifted parameters,
        // adjusted root number, coefficients reweighted by n^{-it}
        inst = twist(inst, twist_t);
        inst.label += "-twist" + std::to_string(twist_t);
        std::vector<Complex> at(static_cast<std::size_t>(length));
        for (std::int64_t n = 1; n <= length; ++n)
            at[static_cast<std::size_t>(n - 1)] =
                chi.at(n) * std::polar(1.0, -twist_t * std::log(static_cast<double>(n)));
        inst.coefficients = std::make_shared<CoefficientSource>(std::move(at));
        validate_instance(inst);
    }
    return inst;
}

LFunctionInstance delta_fixture(std::int64_t length) {
    LFunctionInstance inst;
    inst.label = "delta";
    inst.m = 2;
    inst.d = 1;
    inst.conductor = 1;
    inst.root_number = 1.0;
    inst.arch.mu = {Complex{5.5, 0.0}, Complex{6.5, 0.0}};
    inst.coefficients = std::make_shared<CoefficientSource>(ramanujan_coefficients(length));
    validate_instance(inst);
    return inst;
}

std::vector<FixtureSpec> builtin_fixture_names() {
    return {{"dirichlet-3", 8000}, {"dirichlet-4", 8000}, {"dirichlet-5", 8000},
            {"dirichlet-7", 8000}, {"dirichlet-8", 8000}, {"dirichlet-11", 8000},
            {"delta", 2000}};
}

LFunctionInstance builtin_fixture(const std::string& spec) {
    std::string name = spec;
    std::int64_t length = -1;
    double twist_t = 0.0;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        name = spec.substr(0, colon);
        std::stringstream rest(spec.substr(colon + 1));
        std::string kv;
        while (std::getline(rest, kv, ':')) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw SchemaError("builtin fixture: expected key=value, got '" + kv + "'");
            const std::string key = kv.substr(0, eq);
            const std::string val = kv.substr(eq + 1);
            if (key == "length")
                length = std::stoll(val);
            else if (key == "twist")
                twist_t = std::stod(val);
            else
                throw SchemaError("builtin fixture: unknown parameter '" + key + "'");
        }
    }
    for (const FixtureSpec& fs : builtin_fixture_names()) {
        if (fs.name != name) continue;
        const std::int64_t len = length > 0 ? length : fs.default_length;
        if (name == "delta") {
            if (twist_t != 0.0)
                throw SchemaError("builtin fixture: delta does not take a twist parameter");
            return delta_fixture(len);
        }
        const std::int64_t q = std::stoll(name.substr(name.find('-') + 1));
        return dirichlet_fixture(q, len, twist_t);
    }
    throw SchemaError("builtin fixture: unknown name '" + name + "'");
}

}  // namespace lfe::oracles
