#include "tvkit/money_tv.hpp"

#include <cmath>

#include "tvkit/detail/math.hpp"

namespace tvkit::money {

using detail::pow1p;

namespace {

void require_interest(const Rate& i) {
    if (i.kind() != RateKind::Interest)
        throw OutOfDomainError("expected an interest-kind rate");
}

} // namespace

double fv_of_pv(double pv, const Rate& i, const Periods& n) {
    require_interest(i);
    return pv * pow1p(i.value(), n.value());
}

double pv_of_fv(double fv, const Rate& i, const Periods& n) {
    require_interest(i);
    return fv * pow1p(i.value(), -n.value());
}

double pv_of_stream(const CashFlowStream& stream, const Rate& i) {
    require_interest(i);
    double total = 0.0;
    for (const CashFlow& flow : stream.flows())
        total += flow.amount * pow1p(i.value(), -flow.time.value());
    return total;
}

DiscountFactor discount_factor(const Rate& i, const Periods& n) {
    require_interest(i);
    return DiscountFactor{pow1p(i.value(), -n.value())};
}

GrowthAdjustedFactor discount_factor_growth(const Rate& i, const Rate& g,
                                            const Periods& n) {
    require_interest(i);
    if (g.value() <= -1.0)
        throw OutOfDomainError("growth rate must exceed -1");
    const double value =
        pow1p(g.value(), n.value()) * pow1p(i.value(), -n.value());
    return GrowthAdjustedFactor{DiscountFactor{value}, g.value() <= i.value()};
}

DiscountFactor discount_factor_hyperbolic(double k, const Periods& delay) {
    if (!(k >= 0.0))
        throw OutOfDomainError("hyperbolic discount parameter k must be >= 0");
    return DiscountFactor{1.0 / (1.0 + k * delay.value())};
}

DiscountFactor discount_factor_exp_continuous(double k, const Periods& delay) {
    if (!(k >= 0.0))
        throw OutOfDomainError("exponential discount rate k must be >= 0");
    return DiscountFactor{std::exp(-k * delay.value())};
}

} // namespace tvkit::money
