#pragma once

#include <stdexcept>
#include <string>

namespace pberno {

/// Division of a Rational (or a series) by zero.
struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Multiplicative inverse requested for a series that is zero on its known window.
struct NotInvertible : std::domain_error {
    explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

/// A coefficient outside the known window of a truncated series was requested.
struct CoefficientUnknown : std::out_of_range {
    explicit CoefficientUnknown(const std::string& what) : std::out_of_range(what) {}
};

/// A Laurent series with surviving negative-exponent terms was used where a
/// plain power series is required.
struct NotAPowerSeries : std::domain_error {
    explicit NotAPowerSeries(const std::string& what) : std::domain_error(what) {}
};

/// A z-coefficient outside the known z-window of a bivariate series was requested.
struct IndexOutOfWindow : std::out_of_range {
    explicit IndexOutOfWindow(const std::string& what) : std::out_of_range(what) {}
};

} // namespace pberno
