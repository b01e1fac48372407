#include "mgc/curve.hpp"

#include <cmath>
#include <utility>

#include "mgc/errors.hpp"

namespace mgc {

Vec4 values_of(const VecJet& v) {
    return {v[0].value(), v[1].value(), v[2].value(), v[3].value()};
}

VecJet deriv_of(const VecJet& v) {
    return {v[0].derived(), v[1].derived(), v[2].derived(), v[3].derived()};
}

VecJet add(const VecJet& a, const VecJet& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

VecJet sub(const VecJet& a, const VecJet& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

VecJet scale(const VecJet& a, const Jet& s) {
    return {a[0] * s, a[1] * s, a[2] * s, a[3] * s};
}

VecJet scale(const VecJet& a, double s) {
    return {a[0] * s, a[1] * s, a[2] * s, a[3] * s};
}

Jet minkowski(const VecJet& a, const VecJet& b) {
    return -(a[0] * b[0]) + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

Vec4 Curve::velocity(double t) const {
    VecJet j = jets(t, 1);
    return {j[0].derivative(1), j[1].derivative(1), j[2].derivative(1), j[3].derivative(1)};
}

double speed(const Curve& c, double t) {
    Vec4 v = c.velocity(t);
    return norm(v);
}

CurveSpec::CurveSpec(Expr x1, Expr x2, Expr x3, Expr x4, Interval domain, std::string param)
    : comp_{std::move(x1), std::move(x2), std::move(x3), std::move(x4)},
      domain_(domain),
      param_(std::move(param)) {
    if (!(domain_.lo < domain_.hi))
        throw Error(ErrorCode::InvalidInput, "curve domain must satisfy lo < hi");
    for (const Expr& e : comp_)
        if (!e.valid()) throw Error(ErrorCode::InvalidInput, "curve component missing");

    // Probe grid: every component must evaluate (with first derivatives)
    // across the domain, and the coordinate scale is recorded for
    // tolerance normalization. Sampled, not proven: a failure strictly
    // between probe nodes is not detected here.
    constexpr int kProbes = 64;
    double maxnorm = 0.0;
    for (int i = 0; i <= kProbes; ++i) {
        const double t = domain_.lo + domain_.width() * i / kProbes;
        VecJet j = jets(t, 1);
        maxnorm = std::fmax(maxnorm, euclid_norm(values_of(j)));
    }
    scale_ = maxnorm;
}

VecJet CurveSpec::jets(double t, int order) const {
    if (!domain_.contains(t, 1e-12 * std::fmax(1.0, std::fabs(t))))
        throw Error(ErrorCode::OutOfRange,
                    "parameter " + std::to_string(t) + " outside curve domain");
    return {comp_[0].eval_jet(t, order), comp_[1].eval_jet(t, order),
            comp_[2].eval_jet(t, order), comp_[3].eval_jet(t, order)};
}

} // namespace mgc
