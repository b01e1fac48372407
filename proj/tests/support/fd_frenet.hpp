#pragma once

#include <cmath>

#include "mgc/curve.hpp"
#include "mgc/errors.hpp"

namespace mgc::test {

/// Frenet data computed purely from curve point evaluations and central
/// differences - no jets, no series inversion. Only valid for curves that
/// are already unit-speed in their parameter (the closed-form fixtures),
/// which is exactly what an independent cross-check needs.
struct FdApparatus {
    Vec4 e1, e2, e3, e4;
    double k1, k2, k3;
    int mu1, mu2;
};

namespace fd_detail {

inline Vec4 d1(const Curve& c, double s, double h) {
    return (c.point(s - 2 * h) - 8.0 * c.point(s - h) + 8.0 * c.point(s + h) -
            c.point(s + 2 * h)) * (1.0 / (12.0 * h));
}

inline Vec4 d2(const Curve& c, double s, double h) {
    return (-c.point(s - 2 * h) + 16.0 * c.point(s - h) - 30.0 * c.point(s) +
            16.0 * c.point(s + h) - c.point(s + 2 * h)) * (1.0 / (12.0 * h * h));
}

struct Tangent {
    Vec4 e1, e2;
    double k1;
};

inline Tangent tangent_at(const Curve& c, double s, double h) {
    Tangent t;
    t.e1 = d1(c, s, h);
    const Vec4 a = d2(c, s, h);
    t.k1 = norm(a);
    t.e2 = a * (1.0 / t.k1);
    return t;
}

template <typename Field>
Vec4 field_derivative(const Field& f, double s, double h) {
    return (f(s - 2 * h) - 8.0 * f(s - h) + 8.0 * f(s + h) - f(s + 2 * h)) * (1.0 / (12.0 * h));
}

} // namespace fd_detail

inline FdApparatus fd_apparatus(const Curve& c, double s, double h = 0.02) {
    using namespace fd_detail;
    FdApparatus ap;
    const Tangent t0 = tangent_at(c, s, h);
    ap.e1 = t0.e1;
    ap.k1 = t0.k1;
    ap.e2 = t0.e2;

    auto e2_field = [&](double x) { return tangent_at(c, x, h).e2; };
    const Vec4 e2p = field_derivative(e2_field, s, h);
    const double p1 = inner(e2p, ap.e1) / ap.k1;
    ap.mu1 = p1 < 0 ? -1 : 1;
    const Vec4 v3 = e2p - static_cast<double>(ap.mu1) * ap.k1 * ap.e1;
    ap.k2 = norm(v3);
    ap.e3 = v3 * (1.0 / ap.k2);

    auto e3_field = [&](double x) {
        const Tangent t = tangent_at(c, x, h);
        const Vec4 e2px = field_derivative([&](double y) { return tangent_at(c, y, h).e2; }, x, h);
        const double p = inner(e2px, t.e1) / t.k1;
        const int mu = p < 0 ? -1 : 1;
        const Vec4 w = e2px - static_cast<double>(mu) * t.k1 * t.e1;
        return w * (1.0 / norm(w));
    };
    const Vec4 e3p = field_derivative(e3_field, s, h);
    const int eps2 = inner(ap.e2, ap.e2) < 0 ? -1 : 1;
    const double p2 = inner(e3p, ap.e2) / (eps2 * ap.k2);
    ap.mu2 = p2 < 0 ? -1 : 1;

    const Vec4 raw = e3p - static_cast<double>(ap.mu2) * ap.k2 * ap.e2;
    Vec4 e4 = raw * (1.0 / norm(raw));
    if (frame_det(ap.e1, ap.e2, ap.e3, e4) < 0) e4 = -e4;
    ap.e4 = e4;
    const int eps4 = inner(e4, e4) < 0 ? -1 : 1;
    ap.k3 = eps4 * inner(e3p, e4);
    return ap;
}

} // namespace mgc::test
