#pragma once

#include <memory>
#include <vector>

#include "mgc/curve.hpp"

namespace mgc {

/// Relative threshold below which a velocity counts as null. Applied to the
/// Euclidean magnitude of the velocity so it is scale-invariant.
inline constexpr double kNullSpeedTol = 3.2e-5; // ~sqrt of the 1e-9 causal tolerance

/// Arc length of c between parameters u0 and u1 by adaptive quadrature of
/// the speed (tolerances 1e-10 absolute and relative). Throws
/// Error{NullSegment} if the speed falls under the null threshold at a
/// quadrature node, Error{NonConvergence} if the refinement budget runs out.
double arc_length(const Curve& c, double u0, double u1);

/// Monotone map between the curve parameter and arc length, built once per
/// curve: a checkpoint table of 256 cells with cumulative lengths, plus
/// machine-precision local inversion. Immutable after construction.
class ArcLengthMap {
public:
    static constexpr int kCells = 256;

    explicit ArcLengthMap(std::shared_ptr<const Curve> curve);

    const Curve& curve() const { return *curve_; }
    std::shared_ptr<const Curve> curve_ptr() const { return curve_; }

    double total_length() const { return s_.back(); }

    /// Arc length from the domain start to parameter u.
    double length_at(double u) const;

    /// Parameter u with arc length s; |arc_length(u_lo,u) - s| well below
    /// 1e-9*max(1,s). Throws Error{OutOfRange} outside [0, total].
    double invert(double s) const;

private:
    std::shared_ptr<const Curve> curve_;
    std::vector<double> u_; // checkpoint parameters (kCells+1)
    std::vector<double> s_; // cumulative arc length at checkpoints
};

/// Jets of the curve with respect to its arc length at s (order <= 4):
/// the u-jets composed with the series-inverted jets of the arc-length map.
/// Throws Error{NullTangent} when the speed at the point is below the null
/// threshold.
VecJet unit_speed_jet(const Curve& c, const ArcLengthMap& m, double s, int order);

/// Same, but anchored directly at a parameter value (no global map needed;
/// used by pipelines whose probes are given in the curve parameter).
VecJet unit_speed_jet_at_param(const Curve& c, double u, int order);

} // namespace mgc
