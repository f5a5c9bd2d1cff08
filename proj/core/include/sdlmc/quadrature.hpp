#ifndef SDLMC_QUADRATURE_HPP
#define SDLMC_QUADRATURE_HPP

#include <functional>

#include "sdlmc/radial_density.hpp"

namespace sdlmc {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_refinements = 20;
    double tail_scale = 1.0; // characteristic decay length of the integrand

    void validate() const;
};

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0; // last inter-refinement difference
    bool converged = false;
    int refinements = 0;
};

/// Integral of f over [0, inf).
///
/// The interval is split at a scale-adapted breakpoint; the tail is mapped to
/// [0, 1) through x = b + tail_scale * t / (1 - t). Both regions use a
/// composite fixed-order Gauss-Legendre rule whose panel count doubles per
/// refinement until two successive refinements agree within tolerance.
/// Non-convergence returns the best value with converged == false.
IntegrationResult integrate_semi_infinite(const std::function<double(double)>& f,
                                          const QuadratureSpec& spec);

/// integral of x^power * rho(x) * 4 pi x^2 dx over [0, inf).
/// power >= -2 for bounded densities; throws ConvergenceError when the
/// quadrature fails to settle (e.g. divergent moments).
double radial_moment(const RadialDensity& rho, int power);
double radial_moment(const RadialDensity& rho, int power, const QuadratureSpec& spec);

/// Fixed 15-point Gauss-Legendre rule over [a, b]; building block shared with
/// the Bessel-zero panel sums in the Hankel transform.
double gauss15(const std::function<double(double)>& f, double a, double b);

} // namespace sdlmc

#endif
