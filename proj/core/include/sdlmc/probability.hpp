#ifndef SDLMC_PROBABILITY_HPP
#define SDLMC_PROBABILITY_HPP

#include <cstddef>
#include <vector>

namespace sdlmc {

/// Finite discrete distribution {p_i}. Validated on construction:
/// p_i >= 0, sum p_i == 1 within 1e-12, at least one outcome.
class ProbabilityVector {
  public:
    static constexpr double kNormTol = 1e-12;

    explicit ProbabilityVector(std::vector<double> p);

    const std::vector<double>& values() const { return p_; }
    std::size_t size() const { return p_.size(); }

  private:
    std::vector<double> p_;
};

/// H = -sum p_i ln p_i, in nats, with 0 ln 0 = 0. Result in [0, ln k].
double shannon_discrete(const ProbabilityVector& p);

/// H_max = ln k.
double shannon_max_discrete(std::size_t k);

/// Onicescu information energy E = sum p_i^2, in [1/k, 1].
double onicescu_discrete(const ProbabilityVector& p);

/// Quadratic distance from equiprobability, D = sum (p_i - 1/k)^2 = E - 1/k.
double disequilibrium_discrete(const ProbabilityVector& p);

/// Renyi entropy I_q = ln(sum p_i^q) / (1 - q) for q >= 0, q != 1.
/// q = 0 counts the support; q -> 1 recovers shannon_discrete.
double renyi_discrete(const ProbabilityVector& p, double q);

} // namespace sdlmc

#endif
