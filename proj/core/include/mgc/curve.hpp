#pragma once

#include <array>
#include <memory>
#include <string>

#include "mgc/expr.hpp"
#include "mgc/jet.hpp"
#include "mgc/vec4.hpp"

namespace mgc {

/// Per-component jets of a 4-vector function at a point.
using VecJet = std::array<Jet, 4>;

Vec4 values_of(const VecJet& v);
VecJet deriv_of(const VecJet& v);
VecJet add(const VecJet& a, const VecJet& b);
VecJet sub(const VecJet& a, const VecJet& b);
VecJet scale(const VecJet& a, const Jet& s);
VecJet scale(const VecJet& a, double s);
/// Minkowski inner product as a jet, summation order fixed (x1 term first).
Jet minkowski(const VecJet& a, const VecJet& b);

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    double width() const { return hi - lo; }
    bool contains(double t, double slack = 0.0) const {
        return t >= lo - slack && t <= hi + slack;
    }
};

/// A parametric curve in E_1^4: anything that can produce jets of its
/// components at a parameter value. Implementations are immutable after
/// construction and safe for concurrent evaluation.
class Curve {
public:
    virtual ~Curve() = default;

    /// Component jets at parameter t, orders 0..order.
    virtual VecJet jets(double t, int order) const = 0;
    virtual Interval domain() const = 0;

    /// Highest derivative order the representation provides at full
    /// accuracy (spline-backed curves are lower than expression-backed).
    virtual int max_exact_order() const { return Jet::kMaxOrder; }

    /// Coordinate scale used for relative tolerances.
    virtual double scale() const { return 1.0; }

    virtual std::string param_name() const { return "u"; }

    /// Point on the curve.
    Vec4 point(double t) const { return values_of(jets(t, 0)); }
    /// First-derivative vector.
    Vec4 velocity(double t) const;
};

/// Minkowski norm of the velocity at t.
double speed(const Curve& c, double t);

/// A curve given by four closed-form component expressions on a closed
/// interval. Construction probes the domain on a grid and rejects
/// definitions that fail to evaluate anywhere on it.
class CurveSpec final : public Curve {
public:
    CurveSpec(Expr x1, Expr x2, Expr x3, Expr x4, Interval domain,
              std::string param = "u");

    VecJet jets(double t, int order) const override;
    Interval domain() const override { return domain_; }
    double scale() const override { return scale_; }
    std::string param_name() const override { return param_; }

    const Expr& component(int i) const { return comp_[i]; }

private:
    std::array<Expr, 4> comp_;
    Interval domain_;
    std::string param_;
    double scale_ = 1.0;
};

} // namespace mgc
