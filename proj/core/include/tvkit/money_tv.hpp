#pragma once

#include "tvkit/valuation_core.hpp"

namespace tvkit::money {

/// Dimensionless multiplier converting value between points in time.
/// Always > 0; for a non-negative interest rate and the discrete form
/// it is <= 1.
struct DiscountFactor {
    double value;
};

/// Growth-adjusted discount factor (1+g)^n/(1+i)^n. `sensible` is false
/// when g > i: the value is still well defined for finite n, but the
/// usual g < i requirement is violated.
struct GrowthAdjustedFactor {
    DiscountFactor factor;
    bool sensible;
};

/// FV = PV*(1+i)^n
double fv_of_pv(double pv, const Rate& i, const Periods& n);

/// PV = FV/(1+i)^n; exact inverse of fv_of_pv.
double pv_of_fv(double fv, const Rate& i, const Periods& n);

/// Sum of amount_t/(1+i)^(time_t) over the stream. Empty stream -> 0.
double pv_of_stream(const CashFlowStream& stream, const Rate& i);

/// f(i,n) = 1/(1+i)^n
DiscountFactor discount_factor(const Rate& i, const Periods& n);

/// f(i,g,n) = (1+g)^n/(1+i)^n, flagged non-sensible when g > i.
GrowthAdjustedFactor discount_factor_growth(const Rate& i, const Rate& g,
                                            const Periods& n);

/// Hyperbolic delay discount g(D) = 1/(1+kD), k >= 0.
DiscountFactor discount_factor_hyperbolic(double k, const Periods& delay);

/// Continuous exponential discount f(D) = e^{-kD}, k >= 0.
DiscountFactor discount_factor_exp_continuous(double k, const Periods& delay);

} // namespace tvkit::money
