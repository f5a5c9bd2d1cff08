#include "sdlmc/probability.hpp"

#include <cmath>
#include <string>

#include "sdlmc/errors.hpp"

namespace sdlmc {

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) throw DomainError("probability vector needs at least one outcome");
    double sum = 0.0;
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (!(p_[i] >= 0.0))
            throw DomainError("probability p[" + std::to_string(i) + "] = " +
                              std::to_string(p_[i]) + " is negative");
        sum += p_[i];
    }
    if (std::abs(sum - 1.0) > kNormTol)
        throw DomainError("probabilities sum to " + std::to_string(sum) +
                          ", expected 1 within 1e-12");
}

double shannon_discrete(const ProbabilityVector& p) {
    double h = 0.0;
    for (double pi : p.values())
        if (pi > 0.0) h -= pi * std::log(pi);
    return h;
}

double shannon_max_discrete(std::size_t k) {
    if (k == 0) throw DomainError("shannon_max_discrete: k must be >= 1");
    return std::log(static_cast<double>(k));
}

double onicescu_discrete(const ProbabilityVector& p) {
    double e = 0.0;
    for (double pi : p.values()) e += pi * pi;
    return e;
}

double disequilibrium_discrete(const ProbabilityVector& p) {
    const double inv_k = 1.0 / static_cast<double>(p.size());
    double d = 0.0;
    for (double pi : p.values()) d += (pi - inv_k) * (pi - inv_k);
    return d;
}

double renyi_discrete(const ProbabilityVector& p, double q) {
    if (q < 0.0) throw DomainError("renyi_discrete: q must be non-negative");
    if (q == 1.0) throw DomainError("renyi_discrete: q = 1 is the Shannon limit; use shannon_discrete");
    double sum = 0.0;
    for (double pi : p.values()) {
        if (pi > 0.0) sum += std::pow(pi, q); // q = 0 counts the support
    }
    return std::log(sum) / (1.0 - q);
}

} // namespace sdlmc
