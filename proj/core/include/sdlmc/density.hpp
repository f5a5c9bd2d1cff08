#ifndef SDLMC_DENSITY_HPP
#define SDLMC_DENSITY_HPP

#include "sdlmc/radial_density.hpp"
#include "sdlmc/sto.hpp"

namespace sdlmc {

/// Spherically averaged position density, normalized to one:
/// rho(r) = (1/N_e) sum_orbitals occ * R(r)^2 / (4 pi).
RadialDensity position_density(const AtomBasis& atom);

/// Radial momentum amplitude of one orbital,
/// u_l(k) = sqrt(2/pi) * integral R(r) j_l(k r) r^2 dr,
/// evaluated by Bessel-zero panel quadrature. Unitary: the k-space radial
/// norm of u equals the r-space norm of R.
class MomentumOrbital {
  public:
    explicit MomentumOrbital(Orbital orb);

    double operator()(double k) const;
    int l() const { return orbital_.l; }
    const Orbital& orbital() const { return orbital_; }

  private:
    Orbital orbital_;
    double decay_scale_;
};

inline MomentumOrbital momentum_orbital(const Orbital& orb) { return MomentumOrbital(orb); }

/// Momentum density n(k) = (1/N_e) sum occ * u_l(k)^2 / (4 pi), normalized to
/// one. Evaluations inside the cached adaptive k-grid use monotone-cubic
/// interpolation (grid refined until S_k is stable to 1e-8); beyond the grid
/// the transform is evaluated directly.
RadialDensity momentum_density(const AtomBasis& atom);

/// <r^2> (bohr^2) and per-electron kinetic energy T (hartree).
/// <r^2> integrates the position density; T uses the gradient form of the
/// radial kinetic integral, which equals (1/2) <k^2> of the momentum density
/// by unitarity of the transform.
struct Moments {
    double r2 = 0.0;
    double kinetic = 0.0;
};
Moments atom_moments(const AtomBasis& atom);

} // namespace sdlmc

#endif
