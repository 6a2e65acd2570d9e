#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "tvkit/errors.hpp"

namespace tvkit {

enum class RateKind { Interest, Knowledge, Growth, Decay };

/// A per-period real rate. 0.05 means 5% per period. The kind decides
/// the validity bound enforced at construction:
///   Interest  : value > -1   (base 1+i must stay positive)
///   Knowledge : value >= 0
///   Decay     : value >= 0
///   Growth    : any finite real (pairing rules live at use sites)
class Rate {
public:
    static Rate interest(double value) { return Rate(value, RateKind::Interest); }
    static Rate knowledge(double value) { return Rate(value, RateKind::Knowledge); }
    static Rate growth(double value) { return Rate(value, RateKind::Growth); }
    static Rate decay(double value) { return Rate(value, RateKind::Decay); }

    Rate(double value, RateKind kind);

    double value() const noexcept { return value_; }
    RateKind kind() const noexcept { return kind_; }

    bool operator==(const Rate&) const = default;

private:
    double value_;
    RateKind kind_;
};

Rate make_rate(double value, RateKind kind);

/// Non-negative real count of compounding periods (or a delay D).
/// Not necessarily an integer.
class Periods {
public:
    Periods(double value); // NOLINT(google-explicit-constructor)

    double value() const noexcept { return value_; }

    bool operator==(const Periods&) const = default;

private:
    double value_;
};

struct CashFlow {
    Periods time;
    double amount; // signed monetary units

    bool operator==(const CashFlow&) const = default;
};

/// Ordered (ascending by time) sequence of cash flows. Ties on time are
/// kept as separate entries; evaluation sums them.
class CashFlowStream {
public:
    CashFlowStream() = default;

    std::span<const CashFlow> flows() const noexcept { return flows_; }
    bool empty() const noexcept { return flows_.empty(); }
    std::size_t size() const noexcept { return flows_.size(); }

    bool operator==(const CashFlowStream&) const = default;

private:
    friend CashFlowStream make_stream(std::span<const std::pair<double, double>>);
    std::vector<CashFlow> flows_;
};

CashFlowStream make_stream(std::span<const std::pair<double, double>> pairs);
CashFlowStream make_stream(std::initializer_list<std::pair<double, double>> pairs);

/// Finite witness for a divergent compounding sequence: N is the minimal
/// integer with base_value*(1+k)^N > threshold.
struct DivergenceCertificate {
    double threshold;        // M > 0
    std::int64_t crossing_period; // minimal N >= 0
    double base_value;       // > 0
    Rate rate;               // Knowledge, k > 0

    /// Re-checks minimality: base*(1+k)^(N-1) <= M < base*(1+k)^N.
    bool valid() const;
};

/// Outcome of a knowledge valuation: a finite value or a divergence
/// certificate. Never both.
class ValuationResult {
public:
    static ValuationResult finite(double value);
    static ValuationResult divergent(DivergenceCertificate cert);

    bool is_finite() const noexcept { return std::holds_alternative<double>(v_); }
    bool is_divergent() const noexcept { return !is_finite(); }

    double finite_value() const { return std::get<double>(v_); }
    const DivergenceCertificate& certificate() const {
        return std::get<DivergenceCertificate>(v_);
    }

private:
    explicit ValuationResult(std::variant<double, DivergenceCertificate> v)
        : v_(std::move(v)) {}
    std::variant<double, DivergenceCertificate> v_;
};

} // namespace tvkit
