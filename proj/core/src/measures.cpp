#include "sdlmc/measures.hpp"

#include <cmath>
#include <cstdio>

#include "sdlmc/errors.hpp"

namespace sdlmc {

namespace {

constexpr double kDensityNormTol = 1e-8;
constexpr double kUnderflowFloor = 1e-300;

void require_normalized(const RadialDensity& rho, const QuadratureSpec& caller_spec) {
    QuadratureSpec spec;
    spec.rel_tol = 1e-9;
    spec.abs_tol = 1e-11;
    spec.tail_scale = caller_spec.tail_scale;
    auto integrand = [&rho](double x) { return 4.0 * M_PI * x * x * rho.eval(x); };
    const IntegrationResult r = integrate_semi_infinite(integrand, spec);
    // Non-smooth densities (histograms) cannot be certified to 1e-8; widen
    // the gate by the quadrature's own uncertainty, never below 1e-8.
    const double slack = std::max(kDensityNormTol, 10.0 * r.error_estimate);
    if (std::abs(r.value - 1.0) > slack) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "radial density normalization is %.12g, expected 1",
                      r.value);
        throw DomainError(msg);
    }
}

QuadratureSpec spec_for(const RadialDensity& rho) {
    QuadratureSpec spec;
    spec.tail_scale = rho.tail_scale;
    return spec;
}

// x^e with the 0^0 = 1 convention.
double pow00(double x, double e) { return e == 0.0 ? 1.0 : std::pow(x, e); }

} // namespace

double shannon_radial(const RadialDensity& rho) { return shannon_radial(rho, spec_for(rho)); }

double shannon_radial(const RadialDensity& rho, const QuadratureSpec& spec) {
    require_normalized(rho, spec);
    auto integrand = [&rho](double x) {
        const double d = rho.eval(x);
        if (d <= kUnderflowFloor) return 0.0; // 0 ln 0 = 0
        return -d * std::log(d) * 4.0 * M_PI * x * x;
    };
    const IntegrationResult r = integrate_semi_infinite(integrand, spec);
    if (!r.converged)
        throw ConvergenceError("shannon_radial did not converge", r.error_estimate);
    return r.value;
}

double onicescu_radial(const RadialDensity& rho) { return onicescu_radial(rho, spec_for(rho)); }

double onicescu_radial(const RadialDensity& rho, const QuadratureSpec& spec) {
    require_normalized(rho, spec);
    auto integrand = [&rho](double x) {
        const double d = rho.eval(x);
        return d * d * 4.0 * M_PI * x * x;
    };
    const IntegrationResult r = integrate_semi_infinite(integrand, spec);
    if (!r.converged)
        throw ConvergenceError("onicescu_radial did not converge", r.error_estimate);
    return r.value;
}

EntropyBounds entropy_bounds(double r2, double kinetic) {
    if (!(r2 > 0.0)) throw DomainError("entropy_bounds: <r^2> must be positive");
    if (!(kinetic > 0.0)) throw DomainError("entropy_bounds: T must be positive");

    const double base = 1.5 * (1.0 + std::log(M_PI));
    const double lr = 1.5 * std::log(2.0 / 3.0 * r2);
    const double lt = 1.5 * std::log(4.0 / 3.0 * kinetic);

    EntropyBounds b;
    b.s_r_min = base - lt;
    b.s_r_max = base + lr;
    b.s_k_min = base - lr;
    b.s_k_max = base + lt;
    b.s_min = 2.0 * base;
    b.s_max = 2.0 * base + 1.5 * std::log(8.0 / 9.0 * r2 * kinetic);

    // Internal cross checks: the r/k splits must recombine exactly.
    const double scale = std::abs(b.s_max) + std::abs(b.s_min) + 1.0;
    if (std::abs(b.s_r_max + b.s_k_max - b.s_max) > 1e-12 * scale ||
        std::abs(b.s_r_min + b.s_k_max - b.s_min) > 1e-12 * scale ||
        std::abs(b.s_r_max + b.s_k_min - b.s_min) > 1e-12 * scale)
        throw Error("entropy_bounds: internal additivity check failed");
    return b;
}

OrderDisorder order_disorder(double entropy_sum, double entropy_max) {
    if (!(entropy_sum > 0.0)) throw DomainError("order_disorder: S must be positive");
    if (!(entropy_max > 0.0)) throw DomainError("order_disorder: S_max must be positive");
    if (entropy_sum > entropy_max) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "S = %.10g exceeds S_max = %.10g: density and moments are inconsistent",
                      entropy_sum, entropy_max);
        throw BoundViolation(msg);
    }
    OrderDisorder od;
    od.delta = entropy_sum / entropy_max;
    od.omega = 1.0 - od.delta;
    return od;
}

GammaParams::GammaParams(double disorder_strength, double order_strength)
    : alpha(disorder_strength), beta(order_strength) {
    if (!(alpha >= 0.0) || !(beta >= 0.0))
        throw DomainError("gamma exponents must be non-negative");
    if (alpha == 0.0 && beta == 0.0)
        throw DomainError("gamma exponents must not both be zero");
}

std::string GammaParams::label() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "Gamma_%g_%g", alpha, beta);
    return buf;
}

double sdl_gamma(double delta, const GammaParams& params) {
    if (!(delta >= 0.0 && delta <= 1.0))
        throw DomainError("sdl_gamma: Delta must lie in [0, 1]");
    return pow00(delta, params.alpha) * pow00(1.0 - delta, params.beta);
}

GammaMax sdl_gamma_max(const GammaParams& params) {
    if (!(params.alpha > 0.0 && params.beta > 0.0))
        throw DomainError("sdl_gamma_max: requires alpha > 0 and beta > 0 "
                          "(category I/III maxima sit on the boundary)");
    const double a = params.alpha, b = params.beta;
    GammaMax m;
    m.value = std::pow(a, a) * std::pow(b, b) / std::pow(a + b, a + b);
    m.argmax_delta = a / (a + b);
    return m;
}

double lmc_complexity(double entropy_sum, double e_r, double e_k) {
    if (!(entropy_sum > 0.0)) throw DomainError("lmc_complexity: S must be positive");
    if (!(e_r > 0.0) || !(e_k > 0.0))
        throw DomainError("lmc_complexity: E_r and E_k must be positive");
    return entropy_sum * (e_r * e_k);
}

} // namespace sdlmc
