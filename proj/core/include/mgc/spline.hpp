#pragma once

#include <vector>

#include "mgc/curve.hpp"

namespace mgc {

/// Natural cubic spline through value samples, one spline per component.
/// Backs curves ingested from sampled data (CSV); derivatives beyond order
/// 3 are identically zero, so downstream consumers treat high-order jets
/// as reduced accuracy.
class SplineCurve final : public Curve {
public:
    SplineCurve(std::vector<double> t, std::array<std::vector<double>, 4> values,
                std::string param = "u");

    VecJet jets(double t, int order) const override;
    Interval domain() const override { return {t_.front(), t_.back()}; }
    int max_exact_order() const override { return 3; }
    double scale() const override { return scale_; }
    std::string param_name() const override { return param_; }

private:
    std::vector<double> t_;
    std::array<std::vector<double>, 4> y_;
    std::array<std::vector<double>, 4> m_; // second derivatives at knots
    std::string param_;
    double scale_ = 1.0;
};

/// Quintic Hermite interpolant matching value, first and second derivative
/// at every node, one polynomial piece per segment and per component. Used
/// for curves whose samples come with analytically computed jets (mate
/// curves): first and second derivatives are reproduced exactly at nodes
/// and to high order in between, and third/fourth derivatives remain
/// meaningful.
class HermiteCurve final : public Curve {
public:
    struct Node {
        double t;
        Vec4 value;
        Vec4 d1;
        Vec4 d2;
    };

    HermiteCurve(std::vector<Node> nodes, std::string param = "s");

    VecJet jets(double t, int order) const override;
    Interval domain() const override { return {nodes_.front().t, nodes_.back().t}; }
    int max_exact_order() const override { return 4; }
    double scale() const override { return scale_; }
    std::string param_name() const override { return param_; }

private:
    std::vector<Node> nodes_;
    std::vector<double> knots_;
    // Per segment and component: quintic coefficients a0..a5 in the local
    // variable (t - t_left).
    std::vector<std::array<std::array<double, 6>, 4>> seg_;
    std::string param_;
    double scale_ = 1.0;
};

} // namespace mgc
