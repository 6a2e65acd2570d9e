#pragma once

#include "tvkit/valuation_core.hpp"

namespace tvkit::solver {

/// Rate interval for a root search; lo < hi and 1+lo > 0.
struct Bracket {
    double lo;
    double hi;

    Bracket(double lo, double hi);
};

/// i = (fv/pv)^(1/n) - 1, the closed-form inversion of FV = PV(1+i)^n.
Rate implied_rate(double pv, double fv, const Periods& n);

/// k = (v_to/v_from)^(1/n) - 1. Throws AxiomViolationError when
/// v_to < v_from: a decreasing pair cannot be a knowledge valuation.
Rate implied_knowledge_rate(double v_from, double v_to, const Periods& n);

/// Rate r in the bracket at which the stream's NPV is zero, found by
/// bisection with secant acceleration (bisection step taken whenever the
/// secant step leaves the bracket). Residual |NPV(r)| <= tol * sum|amounts|.
Rate irr(const CashFlowStream& stream, const Bracket& bracket, double tol);

} // namespace tvkit::solver
