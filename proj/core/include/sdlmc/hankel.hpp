#ifndef SDLMC_HANKEL_HPP
#define SDLMC_HANKEL_HPP

#include <functional>

namespace sdlmc {

/// Spherical Bessel function of the first kind.
double sph_bessel_j(int l, double x);

/// m-th positive zero of j_l (m >= 1).
double sph_bessel_zero(int l, int m);

/// integral of f(r) j_l(k r) r^2 dr over [0, inf) for an exponentially
/// decaying f. The integrand is summed panel-by-panel between consecutive
/// zeros of j_l(k r); once the panel budget is exhausted (very large k) the
/// alternating panel series is Euler-accelerated.
double hankel_radial(const std::function<double(double)>& f, int l, double k,
                     double decay_scale);

} // namespace sdlmc

#endif
