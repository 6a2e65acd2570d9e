#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "tvkit/weight_profiles.hpp"

using namespace tvkit;
using namespace tvkit::profiles;

TEST_CASE("gaussian weight") {
    const GaussianProfile unit{1.0, 0.0, 1.0};
    CHECK(gaussian_weight(unit, 0.0) == 1.0);
    CHECK(gaussian_weight(unit, 1.0) ==
          doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK_THROWS_AS(gaussian_weight(GaussianProfile{1.0, 0.0, -1.0}, 0.0),
                    OutOfDomainError);
}

TEST_CASE("gaussian is even about its center with maximum there") {
    std::mt19937_64 gen(29);
    std::uniform_real_distribution<double> p_dist(0.1, 5.0);
    std::uniform_real_distribution<double> d_dist(0.0, 10.0);
    for (int trial = 0; trial < 500; ++trial) {
        const GaussianProfile p{p_dist(gen), 10.0 * p_dist(gen), p_dist(gen)};
        const double d = d_dist(gen);
        CHECK(gaussian_weight(p, p.center + d) ==
              doctest::Approx(gaussian_weight(p, p.center - d)).epsilon(1e-12));
        CHECK(gaussian_weight(p, p.center + d) <=
              gaussian_weight(p, p.center));
    }
    // grid scan: the peak sits at the center
    const GaussianProfile p{2.0, 3.0, 0.7};
    double best_t = -10.0;
    double best = -1.0;
    for (double t = -10.0; t <= 16.0; t += 0.01) {
        const double v = gaussian_weight(p, t);
        if (v > best) {
            best = v;
            best_t = t;
        }
    }
    CHECK(best_t == doctest::Approx(3.0).epsilon(1e-8));
    CHECK(best == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("normal density") {
    const NormalDensity std_normal{0.0, 1.0};
    CHECK(normal_density(std_normal, 0.0) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi))
              .epsilon(1e-12));
    CHECK(normal_density(std_normal, 1.5) ==
          normal_density(std_normal, -1.5));
    CHECK_THROWS_AS(normal_density(NormalDensity{0.0, 0.0}, 0.0),
                    OutOfDomainError);
}

TEST_CASE("normal density integrates to one (randomized parameters)") {
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> mu_dist(-10.0, 10.0);
    std::uniform_real_distribution<double> sigma_dist(0.2, 4.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double mu = mu_dist(gen);
        const double sigma = sigma_dist(gen);
        const NormalDensity d{mu, sigma * sigma};
        const double mass = oracle::simpson(
            [&](double x) { return normal_density(d, x); }, mu - 8 * sigma,
            mu + 8 * sigma);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("beta function values") {
    CHECK(beta_function(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(beta_function(2.0, 2.0) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-9));
    CHECK(beta_function(0.5, 0.5) ==
          doctest::Approx(std::numbers::pi).epsilon(1e-9));
    CHECK_THROWS_AS(beta_function(0.0, 1.0), OutOfDomainError);
}

TEST_CASE("beta function symmetry and recurrence") {
    std::mt19937_64 gen(37);
    std::uniform_real_distribution<double> shape(0.5, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = shape(gen);
        const double b = shape(gen);
        CHECK(beta_function(a, b) ==
              doctest::Approx(beta_function(b, a)).epsilon(1e-9));
        CHECK(beta_function(a + 1.0, b) / beta_function(a, b) ==
              doctest::Approx(a / (a + b)).epsilon(1e-6));
    }
}

TEST_CASE("beta density") {
    CHECK(beta_density(BetaDensity{1.0, 1.0}, 0.3) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(beta_density(BetaDensity{2.0, 2.0}, 0.5) ==
          doctest::Approx(1.5).epsilon(1e-9));
    // 1/(pi*sqrt(0.25)) = 2/pi
    CHECK(beta_density(BetaDensity{0.5, 0.5}, 0.5) ==
          doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-9));
    CHECK_THROWS_AS(beta_density(BetaDensity{0.5, 0.5}, 0.0),
                    EndpointSingularityError);
    CHECK_THROWS_AS(beta_density(BetaDensity{2.0, 0.5}, 1.0),
                    EndpointSingularityError);
    CHECK_THROWS_AS(beta_density(BetaDensity{2.0, 2.0}, 1.5), OutOfDomainError);
    // endpoints are fine when exponents are non-negative
    CHECK(beta_density(BetaDensity{2.0, 2.0}, 0.0) == 0.0);
}

TEST_CASE("beta density integrates to one (randomized shapes)") {
    std::mt19937_64 gen(41);
    std::uniform_real_distribution<double> shape(0.5, 5.0);
    for (int trial = 0; trial < 20; ++trial) {
        const BetaDensity d{shape(gen), shape(gen)};
        // trim the (possibly singular) endpoints and put the trimmed
        // mass back analytically: int_0^eps x^(a-1)(1-x)^(b-1) dx
        // = eps^a/a + O(eps^(a+1))
        const double eps = 1e-10;
        const double interior = integrate(
            [&](double x) { return beta_density(d, x); }, eps, 1.0 - eps, 1e-8);
        const double bfun = beta_function(d.alpha, d.beta);
        const double tails = std::pow(eps, d.alpha) / (d.alpha * bfun) +
                             std::pow(eps, d.beta) / (d.beta * bfun);
        CHECK(interior + tails == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("mixture weight") {
    const GaussianProfile g{1.0, 0.0, 1.0};
    const MixtureProfile degenerate{{{1.0, g}}};
    CHECK(mixture_weight(degenerate, 0.7) ==
          doctest::Approx(gaussian_weight(g, 0.7)).epsilon(1e-12));

    CHECK_THROWS_AS(mixture_weight(MixtureProfile{}, 0.0), EmptyInputError);
    CHECK_THROWS_AS(
        mixture_weight(MixtureProfile{{{0.3, g}, {0.3, g}}}, 0.0),
        OutOfDomainError);
}

TEST_CASE("two-gaussian mixture is bimodal") {
    const MixtureProfile m{{{0.5, GaussianProfile{1.0, -2.0, 0.5}},
                            {0.5, GaussianProfile{1.0, 2.0, 0.5}}}};
    // local maxima near -2 and +2 via grid scan
    int maxima = 0;
    double prev2 = mixture_weight(m, -6.0);
    double prev1 = mixture_weight(m, -6.0 + 0.01);
    for (double t = -6.0 + 0.02; t <= 6.0; t += 0.01) {
        const double cur = mixture_weight(m, t);
        if (prev1 > prev2 && prev1 > cur)
            ++maxima;
        prev2 = prev1;
        prev1 = cur;
    }
    CHECK(maxima == 2);
}

TEST_CASE("mixture of normalized densities integrates to one") {
    const double s1 = 1.0;
    const double s2 = 0.5;
    const double norm1 = 1.0 / (s1 * std::sqrt(2.0 * std::numbers::pi));
    const double norm2 = 1.0 / (s2 * std::sqrt(2.0 * std::numbers::pi));
    const MixtureProfile m{{{0.4, GaussianProfile{norm1, -1.0, s1}},
                            {0.6, GaussianProfile{norm2, 3.0, s2}}}};
    const double mass = oracle::simpson(
        [&](double t) { return mixture_weight(m, t); }, -20.0, 20.0);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("nascent delta") {
    CHECK(nascent_delta(1e-3, 5.0, 5.0) ==
          doctest::Approx(1.0 / (1e-3 * std::sqrt(2.0 * std::numbers::pi)))
              .epsilon(1e-12));
    CHECK(nascent_delta(1e-3, 5.0, 6.0) < 1e-12);
    CHECK_THROWS_AS(nascent_delta(0.0, 0.0, 0.0), OutOfDomainError);

    const double mass = integrate(
        [](double t) { return nascent_delta(1e-3, 0.0, t); }, -1.0, 1.0, 1e-9);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("nascent delta integral error shrinks with width") {
    // fixed window, shrinking width: the truncated tail mass drops from
    // ~0.69 (0.4 sigma) through ~6e-5 (4 sigma) to far below quadrature
    // resolution (40 sigma)
    double prev_err = 2.0;
    for (double eps : {1e-1, 1e-2, 1e-3}) {
        const double mass = integrate(
            [eps](double t) { return nascent_delta(eps, 0.0, t); }, -0.04, 0.04,
            1e-10);
        const double err = std::abs(mass - 1.0);
        CHECK(err < prev_err);
        prev_err = err;
    }
}

TEST_CASE("impulse response") {
    const Rate lam = Rate::decay(std::log(2.0));
    CHECK(impulse_response(10.0, lam, 10.0) == 1.0);
    CHECK(impulse_response(10.0, lam, 9.999) == 0.0);
    CHECK(impulse_response(10.0, lam, 11.0) ==
          doctest::Approx(0.5).epsilon(1e-12));
    // strictly decreasing after the shock when lambda > 0
    double prev = 1.0;
    for (double t = 10.1; t < 15.0; t += 0.1) {
        const double v = impulse_response(10.0, lam, t);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("exponential growth and decay") {
    CHECK(exp_growth(42.0, 0.0, 17.0) == 42.0);
    CHECK(exp_decay(100.0, std::log(2.0), 1.0) ==
          doctest::Approx(50.0).epsilon(1e-12));
    CHECK(exp_growth(1.0, 0.1, 10.0) ==
          doctest::Approx(std::numbers::e).epsilon(1e-12));
    CHECK_THROWS_AS(exp_growth(1.0, -0.1, 1.0), OutOfDomainError);
    CHECK_THROWS_AS(exp_decay(1.0, 0.1, -1.0), OutOfDomainError);
}

TEST_CASE("growth and decay satisfy their rate equations") {
    const double h = 1e-5;
    for (double t : {0.5, 1.0, 3.0, 10.0}) {
        for (double rate : {0.05, 0.3, 1.0}) {
            const double dg =
                (exp_growth(2.0, rate, t + h) - exp_growth(2.0, rate, t - h)) /
                (2.0 * h);
            CHECK(dg == doctest::Approx(rate * exp_growth(2.0, rate, t))
                            .epsilon(1e-6));
            const double dd =
                (exp_decay(2.0, rate, t + h) - exp_decay(2.0, rate, t - h)) /
                (2.0 * h);
            CHECK(dd == doctest::Approx(-rate * exp_decay(2.0, rate, t))
                            .epsilon(1e-6));
        }
    }
}

TEST_CASE("integrate") {
    CHECK(integrate([](double) { return 1.0; }, 0.0, 1.0, 1e-9) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return x * (1.0 - x); }, 0.0, 1.0, 1e-9) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-9));
    const NormalDensity std_normal{0.0, 1.0};
    CHECK(integrate([&](double x) { return normal_density(std_normal, x); },
                    -8.0, 8.0, 1e-9) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 0.0, 1e-9),
                    OutOfDomainError);
}
