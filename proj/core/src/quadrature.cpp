#include "sdlmc/quadrature.hpp"

#include <cmath>
#include <string>

#include "sdlmc/errors.hpp"

namespace sdlmc {

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr int kOrder = 15;
constexpr double kNode[kOrder] = {
    -0.9879925180204854, -0.937273392400706,   -0.8482065834104272,
    -0.7244177313601701, -0.5709721726085388,  -0.3941513470775634,
    -0.20119409399743451, 0.0,                  0.20119409399743451,
    0.3941513470775634,   0.5709721726085388,   0.7244177313601701,
    0.8482065834104272,   0.937273392400706,    0.9879925180204854};
constexpr double kWeight[kOrder] = {
    0.030753241996118647, 0.07036604748810807, 0.10715922046717177,
    0.1395706779261539,   0.16626920581699378, 0.18616100001556188,
    0.19843148532711125,  0.2025782419255609,  0.19843148532711125,
    0.18616100001556188,  0.16626920581699378, 0.1395706779261539,
    0.10715922046717177,  0.07036604748810807, 0.030753241996118647};

// Composite rule with 2^level equal panels over [a, b].
double composite(const std::function<double(double)>& f, double a, double b, int level) {
    const long panels = 1L << level;
    const double h = (b - a) / static_cast<double>(panels);
    double sum = 0.0;
    for (long p = 0; p < panels; ++p) {
        const double lo = a + h * static_cast<double>(p);
        const double mid = lo + 0.5 * h;
        double panel = 0.0;
        for (int i = 0; i < kOrder; ++i) panel += kWeight[i] * f(mid + 0.5 * h * kNode[i]);
        sum += 0.5 * h * panel;
    }
    return sum;
}

} // namespace

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw DomainError("quadrature tolerances must be positive");
    if (max_refinements < 1) throw DomainError("max_refinements must be >= 1");
    if (!(tail_scale > 0.0)) throw DomainError("tail_scale must be positive");
}

double gauss15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < kOrder; ++i) sum += kWeight[i] * f(mid + half * kNode[i]);
    return half * sum;
}

IntegrationResult integrate_semi_infinite(const std::function<double(double)>& f,
                                          const QuadratureSpec& spec) {
    spec.validate();
    const double b = spec.tail_scale; // breakpoint
    const double s = spec.tail_scale;

    // Tail substitution x = b + s*t/(1-t), dx = s/(1-t)^2 dt, t in [0, 1).
    auto tail = [&](double t) {
        const double u = 1.0 - t;
        const double x = b + s * t / u;
        if (!std::isfinite(x)) return 0.0;
        const double jac = s / (u * u);
        const double fx = f(x);
        const double v = fx * jac;
        return std::isfinite(v) ? v : 0.0;
    };

    IntegrationResult res;
    double prev = 0.0;
    for (int level = 0; level <= spec.max_refinements; ++level) {
        const double cur = composite(f, 0.0, b, level) + composite(tail, 0.0, 1.0, level);
        if (level > 0) {
            const double diff = std::abs(cur - prev);
            res.value = cur;
            res.error_estimate = diff;
            res.refinements = level;
            if (diff <= std::max(spec.rel_tol * std::abs(cur), spec.abs_tol)) {
                res.converged = true;
                return res;
            }
        }
        prev = cur;
    }
    res.converged = false;
    return res;
}

double radial_moment(const RadialDensity& rho, int power) {
    QuadratureSpec spec;
    spec.tail_scale = rho.tail_scale;
    return radial_moment(rho, power, spec);
}

double radial_moment(const RadialDensity& rho, int power, const QuadratureSpec& spec) {
    if (power < -2)
        throw DomainError("radial_moment: power " + std::to_string(power) +
                          " diverges at the origin for bounded densities");
    auto integrand = [&rho, power](double x) {
        return 4.0 * M_PI * std::pow(x, power + 2) * rho.eval(x);
    };
    const IntegrationResult r = integrate_semi_infinite(integrand, spec);
    if (!r.converged)
        throw ConvergenceError("radial_moment: power " + std::to_string(power) +
                                   " did not converge",
                               r.error_estimate);
    return r.value;
}

} // namespace sdlmc
