#include <doctest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "sdlmc/errors.hpp"
#include "sdlmc/measures.hpp"
#include "sdlmc/quadrature.hpp"

using namespace sdlmc;

namespace {

// Analytic hydrogen ground-state densities.
RadialDensity hydrogen_rho() {
    RadialDensity d;
    d.space_tag = Space::position;
    d.tail_scale = 0.5;
    d.eval = [](double r) { return std::exp(-2.0 * r) / M_PI; };
    return d;
}

RadialDensity hydrogen_nk() {
    RadialDensity d;
    d.space_tag = Space::momentum;
    d.tail_scale = 1.0;
    d.eval = [](double k) { return 8.0 / (M_PI * M_PI * std::pow(1.0 + k * k, 4)); };
    return d;
}

RadialDensity scaled(const RadialDensity& base, double lambda, bool momentum) {
    RadialDensity d = base;
    if (momentum) {
        d.tail_scale = base.tail_scale * lambda;
        d.eval = [base, lambda](double k) { return base.eval(k / lambda) / (lambda * lambda * lambda); };
    } else {
        d.tail_scale = base.tail_scale / lambda;
        d.eval = [base, lambda](double r) { return base.eval(lambda * r) * lambda * lambda * lambda; };
    }
    return d;
}

// mpmath reference values for the hydrogen family
constexpr double kSr = 4.1447298858494002;   // 3 + ln pi
constexpr double kEr = 0.039788735772973834; // 1/(8 pi)
constexpr double kSk = 2.4218623411651936;   // 5 ln 2 + 2 ln pi - 10/3
constexpr double kEk = 0.20897494126232165;  // 33/(16 pi^2)
constexpr double kS = 6.5665922270145937;
constexpr double kSmin = 6.4341896575482005; // 3 (1 + ln pi)
constexpr double kSmax = 6.8657127662258719;

} // namespace

TEST_CASE("shannon_radial on the hydrogen family") {
    CHECK(shannon_radial(hydrogen_rho()) == doctest::Approx(kSr).epsilon(1e-10));
    CHECK(shannon_radial(hydrogen_nk()) == doctest::Approx(kSk).epsilon(1e-10));

    // hydrogenic Z = 2: S_r(Z) = S_r(1) - 3 ln Z
    const RadialDensity rho2 = scaled(hydrogen_rho(), 2.0, false);
    CHECK(shannon_radial(rho2) == doctest::Approx(kSr - 3.0 * std::log(2.0)).epsilon(1e-10));

    RadialDensity bad = hydrogen_rho();
    bad.eval = [](double r) { return 2.0 * std::exp(-2.0 * r) / M_PI; };
    CHECK_THROWS_AS(shannon_radial(bad), DomainError);
}

TEST_CASE("onicescu_radial on the hydrogen family") {
    CHECK(onicescu_radial(hydrogen_rho()) == doctest::Approx(kEr).epsilon(1e-10));
    CHECK(onicescu_radial(hydrogen_nk()) == doctest::Approx(kEk).epsilon(1e-10));

    // hydrogenic Z = 3: E_r scales as Z^3
    const RadialDensity rho3 = scaled(hydrogen_rho(), 3.0, false);
    CHECK(onicescu_radial(rho3) == doctest::Approx(27.0 / (8.0 * M_PI)).epsilon(1e-9));
}

TEST_CASE("scaling invariance of the conjugate-space measures") {
    const double s0 = shannon_radial(hydrogen_rho()) + shannon_radial(hydrogen_nk());
    const double d0 = onicescu_radial(hydrogen_rho()) * onicescu_radial(hydrogen_nk());
    for (double lambda : {0.5, 2.0, 10.0}) {
        const RadialDensity r = scaled(hydrogen_rho(), lambda, false);
        const RadialDensity n = scaled(hydrogen_nk(), lambda, true);
        const double s = shannon_radial(r) + shannon_radial(n);
        const double d = onicescu_radial(r) * onicescu_radial(n);
        CHECK(std::abs(s - s0) < 1e-8);
        CHECK(std::abs(d - d0) < 1e-10);

        const EntropyBounds b = entropy_bounds(3.0 / (lambda * lambda), 0.5 * lambda * lambda);
        const OrderDisorder od = order_disorder(s, b.s_max);
        CHECK(std::abs(od.delta - kS / kSmax) < 1e-8);
        CHECK(std::abs(sdl_gamma(od.delta, GammaParams(0, 4)) -
                       sdl_gamma(kS / kSmax, GammaParams(0, 4))) < 1e-9);
        CHECK(std::abs(lmc_complexity(s, onicescu_radial(r), onicescu_radial(n)) -
                       lmc_complexity(kS, kEr, kEk)) < 1e-9);
    }
}

TEST_CASE("entropy_bounds closed forms") {
    const EntropyBounds b = entropy_bounds(3.0, 0.5);
    CHECK(b.s_max == doctest::Approx(kSmax).epsilon(1e-12));
    CHECK(b.s_min == doctest::Approx(kSmin).epsilon(1e-12));
    CHECK(b.s_r_max == doctest::Approx(4.2568155996140182).epsilon(1e-12));
    CHECK(b.s_r_min == doctest::Approx(3.8252924909363468).epsilon(1e-12));
    CHECK(b.s_k_max == doctest::Approx(2.6088971666118537).epsilon(1e-12));
    CHECK(b.s_k_min == doctest::Approx(2.1773740579341823).epsilon(1e-12));

    // r/k splits recombine: r_max + k_max = S_max, cross sums give S_min
    CHECK(b.s_r_max + b.s_k_max == doctest::Approx(b.s_max).epsilon(1e-14));
    CHECK(b.s_r_min + b.s_k_max == doctest::Approx(b.s_min).epsilon(1e-14));
    CHECK(b.s_r_max + b.s_k_min == doctest::Approx(b.s_min).epsilon(1e-14));

    // <r^2> T = 9/8 collapses the window
    const EntropyBounds tight = entropy_bounds(9.0 / 8.0, 1.0);
    CHECK(tight.s_max == doctest::Approx(tight.s_min).epsilon(1e-14));

    // invariance of S_max under hydrogenic scaling (r2 T unchanged)
    const EntropyBounds z2 = entropy_bounds(0.75, 2.0);
    CHECK(z2.s_max == doctest::Approx(kSmax).epsilon(1e-12));

    CHECK_THROWS_AS(entropy_bounds(0.0, 0.5), DomainError);
    CHECK_THROWS_AS(entropy_bounds(3.0, -1.0), DomainError);
}

TEST_CASE("order_disorder") {
    const OrderDisorder full = order_disorder(2.0, 2.0);
    CHECK(full.delta == 1.0);
    CHECK(full.omega == 0.0);

    const OrderDisorder half = order_disorder(1.0, 2.0);
    CHECK(half.delta == 0.5);
    CHECK(half.omega == 0.5);

    const OrderDisorder h = order_disorder(6.56659, 6.865711);
    CHECK(h.delta == doctest::Approx(0.956434).epsilon(1e-6));
    CHECK(h.omega == doctest::Approx(0.043566).epsilon(1e-4));
    CHECK(h.delta + h.omega == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(order_disorder(2.1, 2.0), BoundViolation);
    CHECK_THROWS_AS(order_disorder(0.0, 2.0), DomainError);
    CHECK_THROWS_AS(order_disorder(1.0, 0.0), DomainError);
}

TEST_CASE("sdl_gamma and its closed-form maximum") {
    CHECK(sdl_gamma(0.5, GammaParams(1, 1)) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(sdl_gamma(0.0, GammaParams(1, 1)) == 0.0);
    CHECK(sdl_gamma(1.0, GammaParams(1, 1)) == 0.0);
    CHECK(sdl_gamma(0.95643270416398344, GammaParams(0, 4)) ==
          doctest::Approx(3.6028187874326549e-6).epsilon(1e-10));

    // category I and III boundary conventions (0^0 = 1)
    CHECK(sdl_gamma(1.0, GammaParams(2, 0)) == 1.0);
    CHECK(sdl_gamma(0.0, GammaParams(0, 4)) == 1.0);
    CHECK_THROWS_AS(sdl_gamma(-0.1, GammaParams(1, 1)), DomainError);
    CHECK_THROWS_AS(sdl_gamma(1.1, GammaParams(1, 1)), DomainError);
    CHECK_THROWS_AS(GammaParams(0, 0), DomainError);
    CHECK_THROWS_AS(GammaParams(-1, 2), DomainError);

    GammaMax m = sdl_gamma_max(GammaParams(1, 1));
    CHECK(m.value == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(m.argmax_delta == doctest::Approx(0.5).epsilon(1e-15));
    m = sdl_gamma_max(GammaParams(1, 4));
    CHECK(m.value == doctest::Approx(256.0 / 3125.0).epsilon(1e-14));
    CHECK(m.argmax_delta == doctest::Approx(0.2).epsilon(1e-14));
    m = sdl_gamma_max(GammaParams(2, 2));
    CHECK(m.value == doctest::Approx(0.0625).epsilon(1e-14));
    CHECK(m.argmax_delta == doctest::Approx(0.5).epsilon(1e-14));

    CHECK_THROWS_AS(sdl_gamma_max(GammaParams(0, 4)), DomainError);
    CHECK_THROWS_AS(sdl_gamma_max(GammaParams(0.25, 0)), DomainError);
}

TEST_CASE("grid scan never exceeds the gamma maximum") {
    for (double a : {0.25, 1.0, 2.0, 4.0}) {
        for (double b : {0.25, 1.0, 2.0, 4.0}) {
            const GammaParams gp(a, b);
            const GammaMax m = sdl_gamma_max(gp);
            double best = 0.0, best_delta = 0.0;
            for (int i = 0; i <= 10000; ++i) {
                const double delta = 1e-4 * i;
                const double g = sdl_gamma(delta, gp);
                CHECK(g <= m.value + 1e-12);
                if (g > best) {
                    best = g;
                    best_delta = delta;
                }
            }
            CHECK(m.value - best <= 1e-8);
            CHECK(std::abs(best_delta - m.argmax_delta) <= 1e-4 + 1e-12);
        }
    }
}

TEST_CASE("lmc_complexity") {
    CHECK(lmc_complexity(1.0, 1.0, 1.0) == 1.0);
    CHECK(lmc_complexity(kS, kEr, kEk) == doctest::Approx(0.054600220980509863).epsilon(1e-12));
    CHECK_THROWS_AS(lmc_complexity(0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(lmc_complexity(1.0, -1.0, 1.0), DomainError);
    CHECK_THROWS_AS(lmc_complexity(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("gamma labels") {
    CHECK(GammaParams(0, 4).label() == "Gamma_0_4");
    CHECK(GammaParams(1, 0.25).label() == "Gamma_1_0.25");
    CHECK(GammaParams(0.25, 0).label() == "Gamma_0.25_0");
}

TEST_CASE("histogram-induced density converges to the continuous measures") {
    const RadialDensity rho = hydrogen_rho();
    const double r_max = 14.0;

    double prev_err_s = 0.0, prev_err_e = 0.0;
    bool first = true;
    for (int bins : {64, 128, 256}) {
        const double h = r_max / bins;
        // bin probabilities by fine quadrature of the true density
        std::vector<double> edges(bins + 1), p(bins);
        for (int i = 0; i <= bins; ++i) edges[i] = h * i;
        for (int i = 0; i < bins; ++i) {
            double s = 0.0;
            const int sub = 8;
            for (int j = 0; j < sub; ++j) {
                const double a = edges[i] + (edges[i + 1] - edges[i]) * j / sub;
                const double b = edges[i] + (edges[i + 1] - edges[i]) * (j + 1) / sub;
                s += gauss15([&rho](double r) { return rho.eval(r) * 4.0 * M_PI * r * r; }, a, b);
            }
            p[i] = s;
        }

        RadialDensity hist;
        hist.space_tag = Space::position;
        hist.tail_scale = 0.5;
        auto pv = std::make_shared<std::vector<double>>(p);
        hist.eval = [pv, h, bins](double r) {
            const int i = static_cast<int>(r / h);
            if (i < 0 || i >= bins) return 0.0;
            const double lo = h * i, hi = h * (i + 1);
            const double vol = 4.0 / 3.0 * M_PI * (hi * hi * hi - lo * lo * lo);
            return (*pv)[i] / vol;
        };

        QuadratureSpec spec;
        spec.rel_tol = 1e-6;
        spec.abs_tol = 1e-8;
        spec.tail_scale = 0.5;
        const double s_err = std::abs(shannon_radial(hist, spec) - kSr);
        const double e_err = std::abs(onicescu_radial(hist, spec) - kEr);
        if (!first) {
            CHECK(s_err < prev_err_s);
            CHECK(e_err < prev_err_e);
        }
        first = false;
        prev_err_s = s_err;
        prev_err_e = e_err;
    }
    CHECK(prev_err_s < 2e-3);
    CHECK(prev_err_e < 1e-4);
}
