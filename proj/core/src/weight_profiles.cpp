#include "tvkit/weight_profiles.hpp"

#include <cmath>
#include <numbers>

namespace tvkit::profiles {

namespace {

class AdaptiveSimpson {
public:
    AdaptiveSimpson(const std::function<double(double)>& f, long budget)
        : f_(f), budget_(budget) {}

    double run(double a, double b, double tol) {
        const double fa = eval(a);
        const double fm = eval(0.5 * (a + b));
        const double fb = eval(b);
        const double whole = simpson(a, b, fa, fm, fb);
        return recurse(a, b, fa, fm, fb, whole, tol, 0);
    }

private:
    static double simpson(double a, double b, double fa, double fm, double fb) {
        return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    }

    double eval(double x) {
        if (++evals_ > budget_)
            throw NumericalFailureError(
                "quadrature budget exhausted before reaching tolerance");
        return f_(x);
    }

    double recurse(double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double left = simpson(a, m, fa, flm, fm);
        const double right = simpson(m, b, fm, frm, fb);
        const double delta = left + right - whole;
        if (depth >= kMaxDepth || std::abs(delta) <= 15.0 * tol)
            return left + right + delta / 15.0;
        return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
               recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }

    static constexpr int kMaxDepth = 48;
    const std::function<double(double)>& f_;
    long budget_;
    long evals_ = 0;
};

// int_0^cut t^(a-1)(1-t)^(b-1) dt with t = u^(1/a); the Jacobian cancels
// the t^(a-1) factor, leaving the smooth integrand (1/a)(1-u^(1/a))^(b-1)
// on [0, cut^a].
double beta_half_integral(double a, double b, double cut) {
    const std::function<double(double)> g = [a, b](double u) {
        return (1.0 / a) * std::pow(1.0 - std::pow(u, 1.0 / a), b - 1.0);
    };
    return integrate(g, 0.0, std::pow(cut, a), kDefaultQuadTol);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    if (!(a < b))
        throw OutOfDomainError("integration bounds require a < b");
    return AdaptiveSimpson(f, kQuadEvalBudget).run(a, b, tol);
}

double gaussian_weight(const GaussianProfile& p, double t) {
    if (!(p.amplitude > 0.0) || !(p.width > 0.0))
        throw OutOfDomainError("gaussian profile needs amplitude > 0, width > 0");
    const double z = (t - p.center) / p.width;
    return p.amplitude * std::exp(-0.5 * z * z);
}

double normal_density(const NormalDensity& d, double x) {
    if (!(d.variance > 0.0))
        throw OutOfDomainError("normal density needs variance > 0");
    const double z2 = (x - d.mean) * (x - d.mean) / d.variance;
    return std::exp(-0.5 * z2) /
           std::sqrt(2.0 * std::numbers::pi * d.variance);
}

double beta_function(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw OutOfDomainError("beta function needs alpha, beta > 0");
    return beta_half_integral(alpha, beta, 0.5) +
           beta_half_integral(beta, alpha, 0.5);
}

double beta_density(const BetaDensity& d, double x) {
    if (!(d.alpha > 0.0) || !(d.beta > 0.0))
        throw OutOfDomainError("beta density needs alpha, beta > 0");
    if (x < 0.0 || x > 1.0)
        throw OutOfDomainError("beta density support is [0,1]");
    if ((x == 0.0 && d.alpha < 1.0) || (x == 1.0 && d.beta < 1.0))
        throw EndpointSingularityError(
            "beta density diverges at this endpoint (shape exponent < 0)");
    return std::pow(x, d.alpha - 1.0) * std::pow(1.0 - x, d.beta - 1.0) /
           beta_function(d.alpha, d.beta);
}

double mixture_weight(const MixtureProfile& m, double t) {
    if (m.components.empty())
        throw EmptyInputError("mixture has no components");
    double weight_sum = 0.0;
    double total = 0.0;
    for (const MixtureComponent& c : m.components) {
        if (!(c.weight > 0.0))
            throw OutOfDomainError("mixture weights must be > 0");
        weight_sum += c.weight;
        if (const auto* g = std::get_if<GaussianProfile>(&c.profile)) {
            total += c.weight * gaussian_weight(*g, t);
        } else {
            const auto& b = std::get<BetaDensity>(c.profile);
            // zero density outside the beta support
            total += (t < 0.0 || t > 1.0) ? 0.0 : c.weight * beta_density(b, t);
        }
    }
    if (std::abs(weight_sum - 1.0) > 1e-9)
        throw OutOfDomainError("mixture weights must sum to 1");
    return total;
}

double nascent_delta(double eps, double center, double t) {
    if (!(eps > 0.0))
        throw OutOfDomainError("nascent delta width must be > 0");
    return normal_density(NormalDensity{center, eps * eps}, t);
}

double impulse_response(double shock_time, const Rate& decay, double t) {
    if (decay.kind() != RateKind::Decay)
        throw OutOfDomainError("impulse response expects a decay-kind rate");
    if (t < shock_time)
        return 0.0;
    return std::exp(-decay.value() * (t - shock_time));
}

double exp_growth(double x0, double k, double t) {
    if (!(k >= 0.0) || !(t >= 0.0))
        throw OutOfDomainError("exp_growth needs k >= 0 and t >= 0");
    return x0 * std::exp(k * t);
}

double exp_decay(double n0, double lambda, double t) {
    if (!(lambda >= 0.0) || !(t >= 0.0))
        throw OutOfDomainError("exp_decay needs lambda >= 0 and t >= 0");
    return n0 * std::exp(-lambda * t);
}

} // namespace tvkit::profiles
