#ifndef SDLMC_RADIAL_DENSITY_HPP
#define SDLMC_RADIAL_DENSITY_HPP

#include <functional>

namespace sdlmc {

enum class Space { position, momentum };

/// Spherically averaged one-particle density, normalized to one:
///   integral of eval(x) * 4 pi x^2 over [0, inf) == 1.
/// The coordinate is r (bohr) in position space or k (1/bohr) in momentum
/// space. tail_scale is the characteristic decay length used to place
/// quadrature breakpoints and tail maps.
struct RadialDensity {
    std::function<double(double)> eval;
    Space space_tag = Space::position;
    double tail_scale = 1.0;

    double operator()(double x) const { return eval(x); }
};

} // namespace sdlmc

#endif
