#include "sdlmc/hankel.hpp"

#include <cmath>
#include <mutex>
#include <vector>

#include "sdlmc/errors.hpp"
#include "sdlmc/quadrature.hpp"

namespace sdlmc {

namespace {

// Ascending series x^l/(2l+1)!! * sum_s (-x^2/2)^s / (s! (2l+3)...(2l+2s+1)),
// used where the closed forms cancel.
double sph_bessel_series(int l, double x) {
    double dfact = 1.0;
    for (int i = 2 * l + 1; i > 1; i -= 2) dfact *= static_cast<double>(i);
    const double x2h = 0.5 * x * x;
    double term = 1.0, sum = 1.0;
    for (int s = 1; s <= 30; ++s) {
        term *= -x2h / (static_cast<double>(s) * (2.0 * l + 2.0 * s + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return std::pow(x, l) / dfact * sum;
}

constexpr int kMaxL = 8;
constexpr int kCachedZeros = 2048;
std::vector<double> g_zeros[kMaxL + 1];
std::once_flag g_zeros_once;

double bessel_deriv(int l, double x) {
    if (x == 0.0) return l == 1 ? 1.0 / 3.0 : 0.0;
    if (l == 0) return std::cos(x) / x - std::sin(x) / (x * x);
    return sph_bessel_j(l - 1, x) - (l + 1.0) / x * sph_bessel_j(l, x);
}

double refine_zero(int l, double lo, double hi) {
    double flo = sph_bessel_j(l, lo);
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 80; ++it) {
        const double fx = sph_bessel_j(l, x);
        // Newton step, falling back to bisection when it leaves the bracket.
        const double dfx = bessel_deriv(l, x);
        double nx = dfx != 0.0 ? x - fx / dfx : x;
        if ((fx > 0.0) == (flo > 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        if (!(nx > lo && nx < hi)) nx = 0.5 * (lo + hi);
        if (std::abs(nx - x) < 1e-15 * x) return nx;
        x = nx;
    }
    return x;
}

void build_zero_tables() {
    g_zeros[0].resize(kCachedZeros);
    for (int m = 1; m <= kCachedZeros; ++m) g_zeros[0][m - 1] = m * M_PI;
    for (int l = 1; l <= kMaxL; ++l) {
        g_zeros[l].resize(kCachedZeros - l);
        // zeros of consecutive orders interlace
        for (int m = 1; m <= kCachedZeros - l; ++m)
            g_zeros[l][m - 1] = refine_zero(l, g_zeros[l - 1][m - 1], g_zeros[l - 1][m]);
    }
}

// McMahon expansion for large zeros of J_nu, nu = l + 1/2.
double mcmahon_zero(int l, int m) {
    const double beta = (m + 0.5 * l) * M_PI;
    const double mu = (2.0 * l + 1.0) * (2.0 * l + 1.0);
    const double b8 = 8.0 * beta;
    double z = beta - (mu - 1.0) / b8 -
               4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8);
    // polish
    for (int it = 0; it < 3; ++it) {
        const double f = sph_bessel_j(l, z);
        const double df = bessel_deriv(l, z);
        if (df != 0.0) z -= f / df;
    }
    return z;
}

} // namespace

double sph_bessel_j(int l, double x) {
    if (l < 0) throw DomainError("sph_bessel_j: l must be >= 0");
    if (x < 0.0) throw DomainError("sph_bessel_j: x must be >= 0");
    if (x == 0.0) return l == 0 ? 1.0 : 0.0;
    switch (l) {
        case 0:
            return x < 1e-4 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
        case 1:
            if (x < 1.5) return sph_bessel_series(1, x);
            return (std::sin(x) - x * std::cos(x)) / (x * x);
        case 2:
            if (x < 2.0) return sph_bessel_series(2, x);
            return ((3.0 - x * x) * std::sin(x) - 3.0 * x * std::cos(x)) / (x * x * x);
        default: {
            if (x < l + 1.0) return sph_bessel_series(l, x);
            // upward recurrence, stable for x > l
            double jm = std::sin(x) / x;
            double j = (std::sin(x) - x * std::cos(x)) / (x * x);
            for (int i = 1; i < l; ++i) {
                const double jn = (2.0 * i + 1.0) / x * j - jm;
                jm = j;
                j = jn;
            }
            return j;
        }
    }
}

double sph_bessel_zero(int l, int m) {
    if (l < 0 || l > kMaxL) throw DomainError("sph_bessel_zero: l out of range");
    if (m < 1) throw DomainError("sph_bessel_zero: m must be >= 1");
    std::call_once(g_zeros_once, build_zero_tables);
    const std::vector<double>& tab = g_zeros[l];
    if (static_cast<std::size_t>(m) <= tab.size()) return tab[m - 1];
    return mcmahon_zero(l, m);
}

double hankel_radial(const std::function<double(double)>& f, int l, double k,
                     double decay_scale) {
    if (!(decay_scale > 0.0)) throw DomainError("hankel_radial: decay_scale must be positive");
    if (k < 0.0) throw DomainError("hankel_radial: k must be >= 0");

    auto integrand = [&](double r) { return f(r) * sph_bessel_j(l, k * r) * r * r; };

    // No oscillation to resolve: j_l(kr) varies on a scale beyond the
    // integrand's support.
    const double support = 90.0 * decay_scale;
    if (k == 0.0 || sph_bessel_zero(l, 1) / k > support) {
        QuadratureSpec spec;
        spec.rel_tol = 1e-13;
        spec.abs_tol = 1e-15;
        spec.tail_scale = decay_scale;
        return integrate_semi_infinite(integrand, spec).value;
    }

    // Panel integrals between consecutive Bessel zeros. The first panels see
    // the structure of f and are refined; later ones are smooth half-waves.
    constexpr int kPanelCap = 700;
    constexpr int kEulerWindow = 96;

    std::vector<double> partial;
    partial.reserve(kPanelCap + 1);
    double sum = 0.0, peak = 0.0;
    double lo = 0.0;
    int quiet = 0;

    for (int m = 1; m <= kPanelCap; ++m) {
        const double hi = sph_bessel_zero(l, m) / k;
        double a;
        if (m <= 4) {
            // refine until stable
            double prev = gauss15(integrand, lo, hi);
            int panels = 2;
            for (int it = 0; it < 12; ++it) {
                double cur = 0.0;
                const double h = (hi - lo) / panels;
                for (int p = 0; p < panels; ++p)
                    cur += gauss15(integrand, lo + p * h, lo + (p + 1) * h);
                if (std::abs(cur - prev) <= 1e-14 * (std::abs(cur) + 1e-30)) {
                    prev = cur;
                    break;
                }
                prev = cur;
                panels *= 2;
            }
            a = prev;
        } else {
            a = gauss15(integrand, lo, hi);
        }
        sum += a;
        partial.push_back(sum);
        peak = std::max(peak, std::abs(a));
        lo = hi;

        if (std::abs(a) <= 1e-17 * peak + 5e-300) {
            if (++quiet >= 2) return sum; // envelope exhausted
        } else {
            quiet = 0;
        }
    }

    // Very large k: accelerate the alternating tail by iterated averaging of
    // the trailing partial sums.
    const int n = static_cast<int>(partial.size());
    const int w = std::min(kEulerWindow, n);
    std::vector<double> e(partial.end() - w, partial.end());
    while (e.size() > 1) {
        for (std::size_t i = 0; i + 1 < e.size(); ++i) e[i] = 0.5 * (e[i] + e[i + 1]);
        e.pop_back();
    }
    return e[0];
}

} // namespace sdlmc
