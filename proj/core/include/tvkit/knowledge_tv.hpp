#pragma once

#include <cstdint>
#include <span>

#include "tvkit/valuation_core.hpp"

namespace tvkit::knowledge {

/// Dimensionless multiplier h(k,n) = (1+k)^n, always >= 1 for a valid
/// knowledge rate: knowledge never discounts.
struct KnowledgeWeight {
    double value;
};

enum class Epoch { Past, Present, Future };

struct KnowledgeValue {
    double magnitude; // > 0
    Epoch epoch;
};

/// h(k,n) = (1+k)^n
KnowledgeWeight weight(const Rate& k, const Periods& n);

/// Moves a knowledge value to another epoch. Transport in either
/// temporal direction multiplies the magnitude by weight(k,n) >= 1.
KnowledgeValue transport_value(const KnowledgeValue& v, const Rate& k,
                               const Periods& n, Epoch target_epoch);

/// Probes the compounding sequence base*(1+k)^n against threshold.
/// k > 0: Divergent with the minimal crossing period N (if N <= n_max).
/// k = 0: Finite(base).
/// Crossing not reached within n_max: throws InconclusiveError carrying
/// the value at n_max.
ValuationResult limit_probe(double base, const Rate& k, double threshold,
                            std::int64_t n_max);

/// Picks one index uniformly at random among the best candidates:
/// all Divergent entries if any exist, otherwise all Finite entries
/// within relative `tol` of the maximum. Deterministic per seed.
std::size_t indifference_select(std::span<const ValuationResult> values,
                                double tol, std::uint64_t seed);

inline constexpr double kDefaultIndifferenceTol = 1e-9;

} // namespace tvkit::knowledge
