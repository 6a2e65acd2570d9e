#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "tvkit/valuation_core.hpp"

namespace tvkit::profiles {

/// a * exp(-(t-b)^2 / (2 c^2)); peak value a at t = b.
struct GaussianProfile {
    double amplitude; // a > 0
    double center;    // b, time of peak importance
    double width;     // c > 0
};

/// Normal density with mean mu and variance sigma2 > 0.
struct NormalDensity {
    double mean;
    double variance;
};

/// Beta density on [0,1] with shape parameters alpha, beta > 0.
struct BetaDensity {
    double alpha;
    double beta;
};

struct MixtureComponent {
    double weight; // > 0
    std::variant<GaussianProfile, BetaDensity> profile;
};

/// Convex combination of Gaussian / beta components; weights sum to 1.
struct MixtureProfile {
    std::vector<MixtureComponent> components;
};

double gaussian_weight(const GaussianProfile& p, double t);
double normal_density(const NormalDensity& d, double x);

/// B(alpha,beta) = int_0^1 t^(a-1)(1-t)^(b-1) dt, by adaptive quadrature
/// with a change of variables taming the endpoint singularities when
/// alpha < 1 or beta < 1.
double beta_function(double alpha, double beta);

/// x^(a-1)(1-x)^(b-1) / B(a,b) on [0,1]. Throws EndpointSingularityError
/// at x in {0,1} when the corresponding exponent is negative.
double beta_density(const BetaDensity& d, double x);

double mixture_weight(const MixtureProfile& m, double t);

/// Normalized Gaussian bump of standard deviation eps centered at
/// `center`; integrates to 1 and tends to a point mass as eps -> 0.
double nascent_delta(double eps, double center, double t);

/// 0 before the shock, exp(-lambda*(t-shock_time)) from the shock on.
double impulse_response(double shock_time, const Rate& decay, double t);

/// x(t) = x0 * e^{k t}, solution of dx/dt = k x.
double exp_growth(double x0, double k, double t);

/// N(t) = N0 * e^{-lambda t}, solution of dN/dt = -lambda N.
double exp_decay(double n0, double lambda, double t);

inline constexpr double kDefaultQuadTol = 1e-9;
inline constexpr long kQuadEvalBudget = 1'000'000;

/// Adaptive quadrature of f over [a,b] to absolute error <= tol.
/// Throws NumericalFailureError when the evaluation budget runs out.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = kDefaultQuadTol);

} // namespace tvkit::profiles
