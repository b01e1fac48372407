#pragma once

#include <cmath>
#include <memory>

#include "mgc/arclength.hpp"
#include "mgc/curve.hpp"
#include "mgc/expr.hpp"

namespace mgc::test {

/// The closed-form unit-speed fixture (sinh u, cosh u, sqrt2 cos u,
/// sqrt2 sin u): constant curvatures k1 = sqrt(3), k2 = sqrt(8/3),
/// |k3| = 1/sqrt(3), third frame vector timelike.
inline std::shared_ptr<const CurveSpec> fixture_curve(double lo = 0.0, double hi = 2.0) {
    return std::make_shared<CurveSpec>(parse("sinh(u)"), parse("cosh(u)"),
                                       parse("sqrt(2)*cos(u)"), parse("sqrt(2)*sin(u)"),
                                       Interval{lo, hi});
}

/// A null curve: the velocity has vanishing Minkowski norm everywhere.
inline std::shared_ptr<const CurveSpec> null_curve() {
    return std::make_shared<CurveSpec>(parse("sinh(u)"), parse("cosh(u)"), parse("cos(u)"),
                                       parse("sin(u)"), Interval{0.0, 2.0});
}

/// Straight line (0, u, 0, 0): regular but with vanishing k1.
inline std::shared_ptr<const CurveSpec> line_curve() {
    return std::make_shared<CurveSpec>(parse("0"), parse("u"), parse("0"), parse("0"),
                                       Interval{0.0, 2.0});
}

/// (0, 3u, 0, 0): straight line with speed 3.
inline std::shared_ptr<const CurveSpec> scaled_line_curve() {
    return std::make_shared<CurveSpec>(parse("0"), parse("3*u"), parse("0"), parse("0"),
                                       Interval{0.0, 2.0});
}

inline const double kSqrt3 = std::sqrt(3.0);
inline const double kK2Fixture = std::sqrt(8.0 / 3.0);
inline const double kK3Fixture = 1.0 / std::sqrt(3.0);
inline const double kAlphaFixture = 3.0 * std::sqrt(3.0);

} // namespace mgc::test
