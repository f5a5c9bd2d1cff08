#ifndef SDLMC_MEASURES_HPP
#define SDLMC_MEASURES_HPP

#include <string>
#include <vector>

#include "sdlmc/quadrature.hpp"
#include "sdlmc/radial_density.hpp"

namespace sdlmc {

/// S = -integral rho ln(rho) 4 pi x^2 dx, in nats (S_r or S_k by space_tag).
/// The density must be normalized to one within 1e-8.
double shannon_radial(const RadialDensity& rho);
double shannon_radial(const RadialDensity& rho, const QuadratureSpec& spec);

/// E = integral rho^2 4 pi x^2 dx (E_r or E_k by space_tag). Strictly positive.
double onicescu_radial(const RadialDensity& rho);
double onicescu_radial(const RadialDensity& rho, const QuadratureSpec& spec);

/// Rigorous entropy bounds from <r^2> and the per-particle kinetic energy T:
///   S_r_min = 3/2 (1 + ln pi) - 3/2 ln(4T/3)
///   S_r_max = 3/2 (1 + ln pi) + 3/2 ln(2<r^2>/3)
///   S_k_min = 3/2 (1 + ln pi) - 3/2 ln(2<r^2>/3)
///   S_k_max = 3/2 (1 + ln pi) + 3/2 ln(4T/3)
///   S_min   = 3 (1 + ln pi)
///   S_max   = 3 (1 + ln pi) + 3/2 ln(8 <r^2> T / 9)
struct EntropyBounds {
    double s_r_min = 0, s_r_max = 0;
    double s_k_min = 0, s_k_max = 0;
    double s_min = 0, s_max = 0;
};
EntropyBounds entropy_bounds(double r2, double kinetic);

/// Landsberg disorder Delta = S / S_max and order Omega = 1 - Delta.
/// S > S_max throws BoundViolation (inconsistent density vs. moments).
struct OrderDisorder {
    double delta = 0;
    double omega = 0;
};
OrderDisorder order_disorder(double entropy_sum, double entropy_max);

/// Exponents of the simple complexity measure: disorder strength alpha,
/// order strength beta. Non-negative, not both zero.
struct GammaParams {
    GammaParams(double disorder_strength, double order_strength);

    double alpha;
    double beta;

    /// Column/report label, e.g. "Gamma_0_4", "Gamma_1_0.25".
    std::string label() const;

    bool operator==(const GammaParams& o) const { return alpha == o.alpha && beta == o.beta; }
};

/// Gamma_{alpha,beta} = Delta^alpha (1-Delta)^beta with the convention 0^0 = 1,
/// so category I (beta=0) and III (alpha=0) behave correctly at the boundary.
double sdl_gamma(double delta, const GammaParams& params);

/// Closed-form maximum of Gamma over Delta for category II (alpha, beta > 0):
/// value alpha^alpha beta^beta / (alpha+beta)^(alpha+beta) at
/// Delta = alpha / (alpha + beta).
struct GammaMax {
    double value = 0;
    double argmax_delta = 0;
};
GammaMax sdl_gamma_max(const GammaParams& params);

/// Statistical complexity C = S * D with D = E_r * E_k. Dimensionless.
double lmc_complexity(double entropy_sum, double e_r, double e_k);

struct GammaValue {
    GammaParams params;
    double value = 0;
};

/// Complete per-atom record of information and complexity measures.
struct MeasureSet {
    int Z = 0;
    std::string symbol;
    double S_r = 0, S_k = 0, S = 0; // nats
    double E_r = 0, E_k = 0;        // Onicescu information energies
    double D = 0;                   // disequilibrium E_r * E_k
    double O = 0;                   // 1 / D
    double r2 = 0;                  // <r^2>, bohr^2
    double T = 0;                   // kinetic energy per electron, hartree
    EntropyBounds bounds;
    double delta = 0, omega = 0;
    std::vector<GammaValue> gammas;
    double C = 0;
};

} // namespace sdlmc

#endif
