#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mgc/frenet.hpp"
#include "mgc/spline.hpp"

namespace mgc {

enum class Verdict { Holds, Fails, Degenerate };
std::string_view to_string(Verdict v) noexcept;

/// The constant admitted by a curvature pair: -k1 / (mu1 k1^2 + mu2 k2^2)
/// with the case's mu signs. Throws Error{DegenerateDenominator} when the
/// denominator magnitude is at or below tol (in Case 2 this happens at
/// k1 = k2).
double alpha_pointwise(double k1, double k2, CaseTag tag, double tol = 1e-12);

struct ConditionThresholds {
    double spread = 1e-3;   // (max-min)/|median| of pointwise alpha
    double residual = 1e-6; // |k1 + alpha_hat (mu1 k1^2 + mu2 k2^2)| <= residual * scale
};

struct ConditionSample {
    double s = 0.0;
    double k1 = 0.0, k2 = 0.0;
    double alpha = 0.0;
    double residual = 0.0;
    std::string error; // nonempty when the apparatus or alpha failed here
};

struct MannheimReport {
    Verdict verdict = Verdict::Degenerate;
    double alpha_hat = 0.0;
    double alpha_rel_spread = 0.0;
    CaseTag case_tag = CaseTag::Case1;
    double residual_scale = 1.0;     // max k1 over valid samples
    double max_abs_residual = 0.0;
    std::string condition;           // the expanded per-case condition text
    std::vector<ConditionSample> samples;
};

/// Evaluate the proportionality condition k1 = -alpha (mu1 k1^2 + mu2 k2^2)
/// over a uniform arc-length grid of n_samples points. alpha_hat is the
/// median of the pointwise values (robust to isolated near-degenerate
/// samples). Throws Error{CaseChange} if the causal case varies over the
/// grid; individual apparatus failures are collected per sample.
MannheimReport check_condition(const std::shared_ptr<const Curve>& c,
                               const ArcLengthMap& m, int n_samples,
                               const ConditionThresholds& thresholds = {},
                               const FrenetOptions& fopt = {}, int threads = 1);

/// Verdict logic on bare (s, k1, k2) triples under a fixed case; the
/// curve-driven overload reduces to this.
MannheimReport check_condition_samples(std::vector<ConditionSample> samples, CaseTag tag,
                                       const ConditionThresholds& thresholds = {});

/// A base curve with its mate c + alpha e2, the mate realized as a spline
/// fitted through analytically computed jets (value, first and second
/// s-derivatives) at >= 200 arc-length nodes. The correspondence table maps
/// base arc length s to cumulative mate arc length s*.
struct MatePair {
    std::shared_ptr<const Curve> base;
    std::shared_ptr<const ArcLengthMap> base_map;
    std::shared_ptr<const HermiteCurve> mate; // parametrized by base arc length
    double alpha = 0.0;
    std::vector<double> s;      // correspondence nodes (base arc length)
    std::vector<double> s_star; // mate arc length at the nodes

    /// Interpolated s* for an arbitrary s in range.
    double mate_length_at(double s) const;
};

/// Build the mate curve by sampling c(s) + alpha e2(s). Throws
/// Error{MateIrregular} when the mate velocity degenerates at a node
/// (the derivative of the correspondence would vanish), and propagates
/// apparatus errors from the base curve.
MatePair construct_mate(const std::shared_ptr<const Curve>& base, double alpha,
                        int n_samples = 256, const FrenetOptions& fopt = {});

/// Closed-form mate speed ds*/ds from the apparatus at one point:
/// sqrt| (1 + mu1 a k1)^2 + eps2 a'^2 + eps3 (a k2)^2 |.
double mate_speed(const FrenetApparatus& ap, double alpha, double alpha_prime = 0.0);
double mate_speed(CaseTag tag, double k1, double k2, double alpha, double alpha_prime = 0.0);

/// First-normal inclusion check: at correspondence points the base e2 must
/// be metric-orthogonal to the mate's e1* and e2* (equivalently, lie in the
/// span of e3*, e4*). The outcome is MateNotFrenet when the mate's own
/// frame cannot be built at some probe - reported, never silently passed.
struct PairPoint {
    double s = 0.0;
    double s_star = 0.0;
    double r_e1 = 0.0; // |<e2, e1*>|
    double r_e2 = 0.0; // |<e2, e2*>|
    std::string mate_error;
};

struct PairReport {
    enum class Outcome { Holds, Fails, MateNotFrenet };
    Outcome outcome = Outcome::Fails;
    double tol = 0.0;
    double max_r_e1 = 0.0;
    double max_r_e2 = 0.0;
    std::vector<PairPoint> points;
};

std::string_view to_string(PairReport::Outcome o) noexcept;

PairReport verify_pair(const MatePair& pair, double tol, int n_points = 25,
                       const FrenetOptions& fopt = {});

/// Third-normal alignment characterization: under the hypothesis
/// e4* = -+ e2 at the probes, the base curvatures must be constant. The
/// intermediate identity -k1'/2 = alpha (mu1 k1 k1' + mu2 k2 k2') is
/// evaluated pointwise as well (it only involves base data, so it is
/// reported even when the hypothesis fails).
struct Thm33Point {
    double s = 0.0;
    double k1 = 0.0, k2 = 0.0;
    Vec4 e2;      // base first normal
    Vec4 e4_star; // mate third normal
};

struct Thm33Report {
    enum class Outcome { Holds, Fails, HypothesisNotMet };
    Outcome outcome = Outcome::Fails;
    bool hypothesis_met = false;
    double max_misalignment = 0.0; // 1 - |cos| between e4* and e2 (euclidean)
    double max_k1_prime = 0.0;
    double max_k2_prime = 0.0;
    double max_identity_residual = 0.0;
    double derivative_scale = 1.0;
    std::vector<Thm33Point> points;
};

std::string_view to_string(Thm33Report::Outcome o) noexcept;

/// Core evaluation on explicit point data (also the harness for synthetic
/// counter-inputs in tests).
Thm33Report verify_thm33_points(std::vector<Thm33Point> points, double alpha, CaseTag tag,
                                double tol, double angle_tol = 1e-3);

Thm33Report verify_thm33(const MatePair& pair, double tol, int n_points = 25,
                         const FrenetOptions& fopt = {}, double angle_tol = 1e-3);

} // namespace mgc
