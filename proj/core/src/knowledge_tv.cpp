#include "tvkit/knowledge_tv.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "tvkit/detail/math.hpp"

namespace tvkit::knowledge {

using detail::pow1p;

namespace {

void require_knowledge(const Rate& k) {
    if (k.kind() != RateKind::Knowledge)
        throw OutOfDomainError("expected a knowledge-kind rate");
}

} // namespace

KnowledgeWeight weight(const Rate& k, const Periods& n) {
    require_knowledge(k);
    return KnowledgeWeight{pow1p(k.value(), n.value())};
}

KnowledgeValue transport_value(const KnowledgeValue& v, const Rate& k,
                               const Periods& n, Epoch target_epoch) {
    if (!(v.magnitude > 0.0))
        throw OutOfDomainError("knowledge value magnitude must be > 0");
    return KnowledgeValue{v.magnitude * weight(k, n).value, target_epoch};
}

ValuationResult limit_probe(double base, const Rate& k, double threshold,
                            std::int64_t n_max) {
    require_knowledge(k);
    if (!(base > 0.0) || !std::isfinite(base))
        throw OutOfDomainError("probe base must be finite and > 0");
    if (!(threshold > 0.0) || !std::isfinite(threshold))
        throw OutOfDomainError("probe threshold must be finite and > 0");
    if (n_max < 1)
        throw OutOfDomainError("n_max must be >= 1");

    if (k.value() == 0.0)
        return ValuationResult::finite(base);

    // Log-based first guess for the minimal N with base*(1+k)^N > threshold,
    // then a local walk so N is exact under the pow1p evaluation the
    // certificate check uses.
    const double log_ratio = std::log(threshold) - std::log(base);
    std::int64_t n = 0;
    if (log_ratio > 0.0) {
        n = static_cast<std::int64_t>(
            std::ceil(log_ratio / std::log1p(k.value())));
        if (n < 0)
            n = 0;
    }
    const auto value_at = [&](std::int64_t steps) {
        return base * pow1p(k.value(), static_cast<double>(steps));
    };
    while (n > 0 && value_at(n - 1) > threshold)
        --n;
    while (!(value_at(n) > threshold)) {
        ++n;
        if (n > n_max)
            throw InconclusiveError(
                value_at(n_max),
                "threshold not crossed within n_max=" + std::to_string(n_max));
    }
    if (n > n_max)
        throw InconclusiveError(
            value_at(n_max),
            "threshold not crossed within n_max=" + std::to_string(n_max));

    return ValuationResult::divergent(
        DivergenceCertificate{threshold, n, base, k});
}

std::size_t indifference_select(std::span<const ValuationResult> values,
                                double tol, std::uint64_t seed) {
    if (values.empty())
        throw EmptyInputError("indifference_select needs at least one value");

    std::vector<std::size_t> candidates;
    for (std::size_t idx = 0; idx < values.size(); ++idx)
        if (values[idx].is_divergent())
            candidates.push_back(idx);

    if (candidates.empty()) {
        double best = values[0].finite_value();
        for (const ValuationResult& v : values)
            best = std::max(best, v.finite_value());
        for (std::size_t idx = 0; idx < values.size(); ++idx)
            if (best - values[idx].finite_value() <= tol * std::abs(best))
                candidates.push_back(idx);
    }

    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    return candidates[pick(gen)];
}

} // namespace tvkit::knowledge
