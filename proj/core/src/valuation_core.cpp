#include "tvkit/valuation_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tvkit/detail/math.hpp"

namespace tvkit {

using detail::pow1p;

Rate::Rate(double value, RateKind kind) : value_(value), kind_(kind) {
    if (!std::isfinite(value))
        throw OutOfDomainError("rate must be finite");
    switch (kind) {
    case RateKind::Interest:
        if (value <= -1.0)
            throw OutOfDomainError("interest rate must exceed -1 (got " +
                                   std::to_string(value) + ")");
        break;
    case RateKind::Knowledge:
        if (value < 0.0)
            throw OutOfDomainError("knowledge rate must be >= 0 (got " +
                                   std::to_string(value) + ")");
        break;
    case RateKind::Decay:
        if (value < 0.0)
            throw OutOfDomainError("decay rate must be >= 0 (got " +
                                   std::to_string(value) + ")");
        break;
    case RateKind::Growth:
        break;
    }
}

Rate make_rate(double value, RateKind kind) { return Rate(value, kind); }

Periods::Periods(double value) : value_(value) {
    if (!std::isfinite(value) || value < 0.0)
        throw OutOfDomainError("period count must be finite and >= 0 (got " +
                               std::to_string(value) + ")");
}

CashFlowStream make_stream(std::span<const std::pair<double, double>> pairs) {
    CashFlowStream stream;
    stream.flows_.reserve(pairs.size());
    for (const auto& [time, amount] : pairs) {
        if (!std::isfinite(amount))
            throw OutOfDomainError("cash flow amount must be finite");
        stream.flows_.push_back(CashFlow{Periods(time), amount});
    }
    std::stable_sort(stream.flows_.begin(), stream.flows_.end(),
                     [](const CashFlow& a, const CashFlow& b) {
                         return a.time.value() < b.time.value();
                     });
    return stream;
}

CashFlowStream make_stream(std::initializer_list<std::pair<double, double>> pairs) {
    return make_stream(std::span<const std::pair<double, double>>(pairs.begin(),
                                                                  pairs.size()));
}

bool DivergenceCertificate::valid() const {
    if (!(threshold > 0.0) || !(base_value > 0.0) || crossing_period < 0)
        return false;
    if (rate.kind() != RateKind::Knowledge || !(rate.value() > 0.0))
        return false;
    const double k = rate.value();
    const double n = static_cast<double>(crossing_period);
    if (!(base_value * pow1p(k, n) > threshold))
        return false;
    if (crossing_period > 0 && !(base_value * pow1p(k, n - 1.0) <= threshold))
        return false;
    return true;
}

ValuationResult ValuationResult::finite(double value) {
    if (!std::isfinite(value))
        throw OutOfDomainError("finite valuation must hold a finite value");
    return ValuationResult(std::variant<double, DivergenceCertificate>(value));
}

ValuationResult ValuationResult::divergent(DivergenceCertificate cert) {
    if (!cert.valid())
        throw OutOfDomainError("divergence certificate failed validation");
    return ValuationResult(
        std::variant<double, DivergenceCertificate>(std::move(cert)));
}

} // namespace tvkit
