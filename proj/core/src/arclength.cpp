#include "mgc/arclength.hpp"

#include <cmath>
#include <utility>

#include "mgc/errors.hpp"
#include "mgc/quadrature.hpp"

namespace mgc {

namespace {

double checked_speed(const Curve& c, double u) {
    const Vec4 v = c.velocity(u);
    const double sp = norm(v);
    if (sp <= kNullSpeedTol * std::fmax(1.0, euclid_norm(v)))
        throw Error(ErrorCode::NullSegment,
                    "velocity is null (speed " + std::to_string(sp) + ") at parameter " +
                        std::to_string(u));
    return sp;
}

/// Compose an outer jet (Taylor about inner.value()) with an inner jet.
Jet compose(const Jet& outer, const Jet& inner) {
    std::array<double, Jet::kMaxOrder + 1> t{};
    const int n = outer.order() < inner.order() ? outer.order() : inner.order();
    for (int k = 0; k <= n; ++k) t[k] = outer.taylor(k);
    Jet g = inner;
    if (g.order() > n) {
        std::array<double, Jet::kMaxOrder + 1> gi{};
        for (int k = 0; k <= n; ++k) gi[k] = inner.taylor(k);
        g = Jet::from_taylor(gi.data(), n);
    }
    return compose_series(t, g);
}

} // namespace

double arc_length(const Curve& c, double u0, double u1) {
    const Interval dom = c.domain();
    const double slack = 1e-12 * std::fmax(1.0, std::fmax(std::fabs(u0), std::fabs(u1)));
    if (!dom.contains(u0, slack) || !dom.contains(u1, slack))
        throw Error(ErrorCode::OutOfRange, "arc_length endpoints outside curve domain");
    if (u0 == u1) return 0.0;
    return integrate([&c](double u) { return checked_speed(c, u); }, u0, u1);
}

ArcLengthMap::ArcLengthMap(std::shared_ptr<const Curve> curve) : curve_(std::move(curve)) {
    const Interval dom = curve_->domain();
    u_.resize(kCells + 1);
    s_.resize(kCells + 1);
    for (int i = 0; i <= kCells; ++i)
        u_[i] = dom.lo + dom.width() * i / kCells;
    u_.back() = dom.hi;
    s_[0] = 0.0;
    for (int i = 0; i < kCells; ++i) {
        const double ds = arc_length(*curve_, u_[i], u_[i + 1]);
        s_[i + 1] = s_[i] + ds;
        if (!(ds > 0.0))
            throw Error(ErrorCode::NullSegment,
                        "arc length not strictly increasing near u = " + std::to_string(u_[i]));
    }
}

double ArcLengthMap::length_at(double u) const {
    const Interval dom = curve_->domain();
    if (!dom.contains(u, 1e-12 * std::fmax(1.0, std::fabs(u))))
        throw Error(ErrorCode::OutOfRange, "parameter outside curve domain");
    int i = static_cast<int>((u - dom.lo) / dom.width() * kCells);
    if (i < 0) i = 0;
    if (i > kCells - 1) i = kCells - 1;
    return s_[i] + arc_length(*curve_, u_[i], u);
}

double ArcLengthMap::invert(double s) const {
    const double total = total_length();
    const double slack = 1e-9 * std::fmax(1.0, total);
    if (s < -slack || s > total + slack)
        throw Error(ErrorCode::OutOfRange,
                    "arc length " + std::to_string(s) + " outside [0, " + std::to_string(total) + "]");
    if (s <= 0.0) return u_[0];
    if (s >= total) return u_.back();

    // Bracketing cell by binary search on the checkpoint table.
    int lo = 0, hi = kCells;
    while (hi - lo > 1) {
        int mid = (lo + hi) / 2;
        (s_[mid] <= s ? lo : hi) = mid;
    }

    // Monotone cubic (Fritsch-Carlson style limited slopes) through the
    // inverse table (s_i, u_i) gives the starting guess.
    auto slope = [&](int i) -> double {
        if (i <= 0) return (u_[1] - u_[0]) / (s_[1] - s_[0]);
        if (i >= kCells) return (u_[kCells] - u_[kCells - 1]) / (s_[kCells] - s_[kCells - 1]);
        const double dl = (u_[i] - u_[i - 1]) / (s_[i] - s_[i - 1]);
        const double dr = (u_[i + 1] - u_[i]) / (s_[i + 1] - s_[i]);
        if (dl * dr <= 0.0) return 0.0;
        return 2.0 * dl * dr / (dl + dr); // harmonic mean keeps monotonicity
    };
    const double h = s_[lo + 1] - s_[lo];
    const double t = (s - s_[lo]) / h;
    const double m0 = slope(lo) * h, m1 = slope(lo + 1) * h;
    const double t2 = t * t, t3 = t2 * t;
    double u = (2 * t3 - 3 * t2 + 1) * u_[lo] + (t3 - 2 * t2 + t) * m0 +
               (-2 * t3 + 3 * t2) * u_[lo + 1] + (t3 - t2) * m1;

    // Safeguarded Newton on g(u) = s(u) - s, refined to machine precision
    // (well below the guaranteed 1e-9 bound).
    double a = u_[lo], b = u_[lo + 1];
    if (u <= a || u >= b) u = 0.5 * (a + b);
    double base_u = u_[lo], base_s = s_[lo];
    for (int it = 0; it < 60; ++it) {
        const double g = base_s + arc_length(*curve_, base_u, u) - s;
        if (g > 0.0) b = u; else a = u;
        const double sp = checked_speed(*curve_, u);
        double step = -g / sp;
        double next = u + step;
        if (next <= a || next >= b) next = 0.5 * (a + b);
        const double du = std::fabs(next - u);
        u = next;
        if (du <= 4.0 * 2.220446049250313e-16 * std::fmax(1.0, std::fabs(u))) break;
    }
    return u;
}

namespace {

VecJet unit_speed_at(const Curve& c, double u0, int order) {
    if (order < 1 || order > 4)
        throw Error(ErrorCode::InvalidInput, "unit-speed jet order must be in [1,4]");

    const VecJet cj = c.jets(u0, order);
    const VecJet cp = deriv_of(cj);
    const Jet q = minkowski(cp, cp);

    const Vec4 vel = values_of(cp);
    const double sp = std::sqrt(std::fabs(q.value()));
    if (sp <= kNullSpeedTol * std::fmax(1.0, euclid_norm(vel)))
        throw Error(ErrorCode::NullTangent,
                    "tangent is null at parameter " + std::to_string(u0));

    const Jet v = sqrt(abs(q)); // speed as a jet of order-1 in u

    // Taylor coefficients of the arc-length function s(u) about u0
    // (constant term irrelevant), then series reversion for u(s).
    std::array<double, Jet::kMaxOrder + 1> psi{};
    for (int k = 1; k <= order; ++k) psi[k] = v.taylor(k - 1) / k;
    const std::array<double, Jet::kMaxOrder + 1> phi = invert_series(psi, order);

    std::array<double, Jet::kMaxOrder + 1> phi_j = phi;
    phi_j[0] = u0;
    const Jet inner = Jet::from_taylor(phi_j.data(), order);

    VecJet out;
    for (int i = 0; i < 4; ++i) out[i] = compose(cj[i], inner);
    return out;
}

} // namespace

VecJet unit_speed_jet(const Curve& c, const ArcLengthMap& m, double s, int order) {
    return unit_speed_at(c, m.invert(s), order);
}

VecJet unit_speed_jet_at_param(const Curve& c, double u, int order) {
    return unit_speed_at(c, u, order);
}

} // namespace mgc
