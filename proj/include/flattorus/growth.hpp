#pragma once

#include "flattorus/rational.hpp"

#include <string>

namespace flattorus {

/// Exact quadratic growth constant of the form a*(1/pi) + b*pi.
/// Every closed-form limit in this project has this shape, so equality
/// tests stay exact and floats appear only in reports.
struct GrowthConstant {
    Rational coef_inv_pi;
    Rational coef_pi;

    double value() const {
        constexpr double kPi = 3.14159265358979323846;
        return coef_inv_pi.to_double() / kPi + coef_pi.to_double() * kPi;
    }

    bool operator==(const GrowthConstant& o) const {
        return coef_inv_pi == o.coef_inv_pi && coef_pi == o.coef_pi;
    }
    bool operator!=(const GrowthConstant& o) const { return !(*this == o); }

    /// Symbolic form, e.g. "12/pi", "3*pi + 9/pi", "(207/16)/pi".
    std::string str() const;
};

}  // namespace flattorus
