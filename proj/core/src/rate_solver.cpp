#include "tvkit/rate_solver.hpp"

#include <cmath>

#include "tvkit/detail/math.hpp"
#include "tvkit/money_tv.hpp"

namespace tvkit::solver {

namespace {

constexpr int kMaxIterations = 1000;

} // namespace

Bracket::Bracket(double lo, double hi) : lo(lo), hi(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw OutOfDomainError("bracket requires finite lo < hi");
    if (!(1.0 + lo > 0.0))
        throw OutOfDomainError("bracket lower end must exceed -1");
}

Rate implied_rate(double pv, double fv, const Periods& n) {
    if (!(pv > 0.0) || !(fv > 0.0))
        throw OutOfDomainError("implied_rate needs pv > 0 and fv > 0");
    if (!(n.value() > 0.0))
        throw OutOfDomainError("implied_rate needs n > 0");
    const double i = std::expm1(std::log(fv / pv) / n.value());
    return Rate::interest(i);
}

Rate implied_knowledge_rate(double v_from, double v_to, const Periods& n) {
    if (!(v_from > 0.0) || !(v_to > 0.0))
        throw OutOfDomainError("implied_knowledge_rate needs positive values");
    if (!(n.value() > 0.0))
        throw OutOfDomainError("implied_knowledge_rate needs n > 0");
    if (v_to < v_from)
        throw AxiomViolationError(
            "knowledge value cannot decrease: v_to < v_from");
    const double k = std::expm1(std::log(v_to / v_from) / n.value());
    // guard against a tiny negative from rounding when v_to == v_from
    return Rate::knowledge(std::max(k, 0.0));
}

Rate irr(const CashFlowStream& stream, const Bracket& bracket, double tol) {
    if (stream.empty())
        throw EmptyStreamError("irr needs a non-empty stream");
    if (!(tol > 0.0))
        throw OutOfDomainError("irr tolerance must be > 0");

    double scale = 0.0;
    for (const CashFlow& flow : stream.flows())
        scale += std::abs(flow.amount);
    const double npv_tol = tol * scale;

    const auto npv = [&](double r) {
        return money::pv_of_stream(stream, Rate::interest(r));
    };

    double lo = bracket.lo;
    double hi = bracket.hi;
    double f_lo = npv(lo);
    double f_hi = npv(hi);
    if (std::abs(f_lo) <= npv_tol)
        return Rate::interest(lo);
    if (std::abs(f_hi) <= npv_tol)
        return Rate::interest(hi);
    if (f_lo * f_hi > 0.0)
        throw NoSignChangeError("no sign change in bracket");

    int stalled_side = 0; // consecutive updates of the same endpoint
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        // secant step, replaced by bisection when it leaves the bracket
        // or when one endpoint has gone stale (regula-falsi stagnation)
        double r = lo - f_lo * (hi - lo) / (f_hi - f_lo);
        if (!std::isfinite(r) || r <= lo || r >= hi || std::abs(stalled_side) >= 2)
            r = 0.5 * (lo + hi);
        const double f_r = npv(r);
        if (std::abs(f_r) <= npv_tol || hi - lo <= 1e-15 * std::abs(1.0 + r))
            return Rate::interest(r);
        if (f_lo * f_r < 0.0) {
            hi = r;
            f_hi = f_r;
            stalled_side = stalled_side < 0 ? stalled_side - 1 : -1;
        } else {
            lo = r;
            f_lo = f_r;
            stalled_side = stalled_side > 0 ? stalled_side + 1 : 1;
        }
    }
    throw NonConvergenceError("irr did not converge within iteration budget");
}

} // namespace tvkit::solver
