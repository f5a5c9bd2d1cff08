#include "sdlmc/density.hpp"

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "sdlmc/errors.hpp"
#include "sdlmc/hankel.hpp"
#include "sdlmc/pchip.hpp"
#include "sdlmc/quadrature.hpp"

namespace sdlmc {

namespace {

constexpr double kSkGridTol = 1e-8;
constexpr int kGridStart = 129;
constexpr int kGridCap = 4097;

double factorial(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= static_cast<double>(i);
    return f;
}

// Neutrality (N_e = Z) is a parser-level constraint on the bundled data; the
// density machinery also serves the one-electron hydrogenic oracle family.
void validate_atom(const AtomBasis& atom) {
    if (atom.orbitals.empty()) throw DomainError("atom basis has no orbitals");
    for (const Orbital& o : atom.orbitals) {
        const double res = std::abs(o.radial_norm() - 1.0);
        if (res > 1e-6)
            throw DomainError("orbital " + o.label + " radial norm off by " +
                              std::to_string(res));
    }
}

// Shared evaluation state for a momentum density. The grid lives in the
// mapped coordinate t = k / (k_scale + k), covering all of [0, 1] so that
// every later evaluation stays on the interpolant; uniform knots in t line
// up with the quadrature's composite panels (same rational map, same scale).
struct MomentumCache {
    std::vector<MomentumOrbital> transforms;
    std::vector<double> occupations;
    double ne = 0.0;
    double k_scale = 1.0;
    std::unique_ptr<MonotoneCubic> interp;

    double direct(double k) const {
        double sum = 0.0;
        for (std::size_t i = 0; i < transforms.size(); ++i) {
            const double u = transforms[i](k);
            sum += occupations[i] * u * u;
        }
        return sum / (4.0 * M_PI * ne);
    }

    double eval(double k) const {
        const double t = k / (k_scale + k);
        const double v = (*interp)(t);
        return v > 0.0 ? v : 0.0;
    }
};

} // namespace

RadialDensity position_density(const AtomBasis& atom) {
    validate_atom(atom);
    auto basis = std::make_shared<const AtomBasis>(atom);
    const double ne = basis->electron_count();

    RadialDensity rho;
    rho.space_tag = Space::position;
    rho.tail_scale = 1.0 / (2.0 * basis->zeta_min());
    rho.eval = [basis, ne](double r) {
        double sum = 0.0;
        for (const Orbital& o : basis->orbitals) {
            const double radial = o.radial(r);
            sum += o.occupation * radial * radial;
        }
        return sum / (4.0 * M_PI * ne);
    };
    return rho;
}

MomentumOrbital::MomentumOrbital(Orbital orb) : orbital_(std::move(orb)) {
    if (orbital_.terms.empty()) throw DomainError("momentum_orbital: orbital has no terms");
    double zmin = orbital_.terms.front().primitive.zeta;
    for (const OrbitalTerm& t : orbital_.terms) zmin = std::min(zmin, t.primitive.zeta);
    decay_scale_ = 1.0 / zmin;
}

double MomentumOrbital::operator()(double k) const {
    auto f = [this](double r) { return orbital_.radial(r); };
    return std::sqrt(2.0 / M_PI) * hankel_radial(f, orbital_.l, k, decay_scale_);
}

RadialDensity momentum_density(const AtomBasis& atom) {
    validate_atom(atom);

    auto cache = std::make_shared<MomentumCache>();
    for (const Orbital& o : atom.orbitals) {
        cache->transforms.emplace_back(o);
        cache->occupations.push_back(o.occupation);
    }
    cache->ne = atom.electron_count();
    cache->k_scale = std::sqrt(atom.zeta_min() * atom.zeta_max());

    // Uniform nodes in t over [0, 1]; refined by midpoint insertion until S_k
    // settles. t = 1 is k = infinity, where the density vanishes.
    std::vector<double> ts, ns;
    ts.reserve(kGridCap);
    for (int i = 0; i < kGridStart; ++i)
        ts.push_back(static_cast<double>(i) / (kGridStart - 1));
    ns.resize(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] >= 1.0) {
            ns[i] = 0.0;
            continue;
        }
        const double k = cache->k_scale * ts[i] / (1.0 - ts[i]);
        ns[i] = cache->direct(k);
    }

    // Knot-aligned S_k estimator: one Gauss panel per knot interval is
    // spectrally accurate because the interpolant is smooth between knots.
    const double s = cache->k_scale;
    auto sk_estimate = [&](const std::vector<double>& knots) {
        auto g = [&](double t) {
            const double u = 1.0 - t;
            const double k = s * t / u;
            if (!std::isfinite(k)) return 0.0;
            const double d = cache->eval(k);
            if (d <= 1e-300) return 0.0;
            const double jac = s / (u * u);
            return -d * std::log(d) * 4.0 * M_PI * k * k * jac;
        };
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < knots.size(); ++i)
            total += gauss15(g, knots[i], knots[i + 1]);
        return total;
    };

    double prev_sk = 0.0;
    bool have_prev = false;
    for (;;) {
        cache->interp = std::make_unique<MonotoneCubic>(ts, ns);
        const double sk = sk_estimate(ts);
        if (have_prev && std::abs(sk - prev_sk) < kSkGridTol) break;
        if (static_cast<int>(ts.size()) * 2 - 1 > kGridCap)
            throw ConvergenceError("momentum grid did not stabilize S_k",
                                   std::abs(sk - prev_sk));
        prev_sk = sk;
        have_prev = true;

        std::vector<double> nts, nns;
        nts.reserve(ts.size() * 2 - 1);
        nns.reserve(ts.size() * 2 - 1);
        for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
            nts.push_back(ts[i]);
            nns.push_back(ns[i]);
            const double tm = 0.5 * (ts[i] + ts[i + 1]);
            const double km = cache->k_scale * tm / (1.0 - tm);
            nts.push_back(tm);
            nns.push_back(tm >= 1.0 ? 0.0 : cache->direct(km));
        }
        nts.push_back(ts.back());
        nns.push_back(ns.back());
        ts.swap(nts);
        ns.swap(nns);
    }

    RadialDensity nk;
    nk.space_tag = Space::momentum;
    nk.tail_scale = cache->k_scale;
    nk.eval = [cache](double k) { return cache->eval(k); };
    return nk;
}

namespace {

// Radial kinetic integral per electron of one orbital, gradient form:
// (1/2) integral [P'(r)^2 + l(l+1) P(r)^2 / r^2] dr with P = r R(r).
double orbital_kinetic(const Orbital& o) {
    double sum = 0.0;
    const double ll1 = static_cast<double>(o.l) * (o.l + 1);
    for (const OrbitalTerm& a : o.terms) {
        for (const OrbitalTerm& b : o.terms) {
            const int ni = a.primitive.n, nj = b.primitive.n;
            const double zi = a.primitive.zeta, zj = b.primitive.zeta;
            const double z = zi + zj;
            auto F = [z](int m) { return factorial(m) / std::pow(z, m + 1); };
            const double cc = a.coefficient * b.coefficient * a.primitive.normalization() *
                              b.primitive.normalization();
            sum += cc * ((ni * nj + ll1) * F(ni + nj - 2) - (ni * zj + nj * zi) * F(ni + nj - 1) +
                         zi * zj * F(ni + nj));
        }
    }
    return 0.5 * sum;
}

} // namespace

Moments atom_moments(const AtomBasis& atom) {
    validate_atom(atom);
    Moments m;
    m.r2 = radial_moment(position_density(atom), 2);
    double t_sum = 0.0;
    for (const Orbital& o : atom.orbitals) t_sum += o.occupation * orbital_kinetic(o);
    m.kinetic = t_sum / atom.electron_count();
    return m;
}

} // namespace sdlmc
