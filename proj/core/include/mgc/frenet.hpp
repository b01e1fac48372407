#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgc/arclength.hpp"
#include "mgc/curve.hpp"

namespace mgc {

/// Which frame vector is timelike. A spacelike special Frenet curve in
/// E_1^4 has exactly one timelike vector among e2, e3, e4.
enum class CaseTag { Case1, Case2, Case3 }; // e4 / e3 / e2 timelike

std::string_view to_string(CaseTag tag) noexcept;

/// Sign bookkeeping fixed by the causal case.
struct CaseSigns {
    int mu1, mu2, mu3;
    int eps2, eps3, eps4; // eps1 is always +1
};

constexpr CaseSigns case_signs(CaseTag tag) {
    switch (tag) {
        case CaseTag::Case1: return {-1, -1, +1, +1, +1, -1};
        case CaseTag::Case2: return {-1, +1, +1, +1, -1, +1};
        case CaseTag::Case3: return {+1, +1, -1, -1, +1, +1};
    }
    return {0, 0, 0, 0, 0, 0};
}

/// The full frame data at one parameter value. k1, k2 are positive and k3
/// nonzero on success; the sign of k3 follows the row-consistent convention
/// k3 = eps4 * <e3', e4>, so the frame system row e3' = mu2 k2 e2 + k3 e4
/// holds identically (the convention is surfaced in report metadata).
struct FrenetApparatus {
    double s = 0.0; // arc-length label (NaN when evaluated directly at a parameter)
    double u = 0.0; // curve parameter of evaluation
    Vec4 e1, e2, e3, e4;
    double k1 = 0.0, k2 = 0.0, k3 = 0.0;
    int mu1 = 0, mu2 = 0, mu3 = 0;
    int eps2 = 0, eps3 = 0, eps4 = 0;
    int orient = 0; // sign applied in the fourth construction step
    CaseTag case_tag = CaseTag::Case1;
    double det = 0.0;           // frame determinant, +1 up to rounding
    double gram_residual = 0.0; // max |<ei,ej> - eps_i delta_ij|

    const Vec4& frame(int i) const { return (&e1)[i]; }
    Vec4& frame(int i) { return (&e1)[i]; }
    int eps(int i) const { return i == 0 ? 1 : (&eps2)[i - 1]; }
};

struct FrenetOptions {
    /// Degeneracy threshold for k1, k2, |k3|; multiplied by
    /// max(1, curve scale).
    double tol = 1e-8;
};

/// The four-step frame construction at arc length s. Throws
/// Error{NullTangent, NotSpacelike, DegenerateK1/K2/K3, InconsistentFrame}
/// when the curve is not a special spacelike Frenet curve at s within
/// tolerance.
FrenetApparatus frenet_apparatus(const Curve& c, const ArcLengthMap& m, double s,
                                 const FrenetOptions& opt = {});

/// Same construction anchored at a curve parameter value (no global
/// arc-length map required; the s label of the result is NaN).
FrenetApparatus frenet_apparatus_at_param(const Curve& c, double u,
                                          const FrenetOptions& opt = {});

/// Max row defect of the frame system at s: the frame fields are
/// differentiated by a 4th-order central difference over s-h, s+h (and
/// s-2h, s+2h), sign-aligned to the frame at s, and compared against the
/// matrix rows built from the apparatus at s. Euclidean norm per row.
double frenet_residual(const Curve& c, const ArcLengthMap& m, double s, double h,
                       const FrenetOptions& opt = {});

/// One grid sample of apparatus_along; failed samples carry the error text
/// instead of aborting the sweep.
struct ApparatusSample {
    double s = 0.0;
    std::optional<FrenetApparatus> apparatus;
    std::string error;            // empty on success
    bool case_change = false;     // causal case differs from previous valid sample
    bool orientation_jump = false; // frame alignment flipped against previous sample
};

/// Jets of the unit tangent and first normal at arc length s (orders 3 and
/// 2 respectively), plus the first curvature jet. This is the prefix of the
/// frame construction needed to differentiate c + alpha*e2 analytically.
struct TangentNormalJets {
    VecJet c;  // order 4, with respect to arc length
    VecJet e1; // order 3
    VecJet e2; // order 2
    Jet k1;    // order 2
};

TangentNormalJets tangent_normal_jets(const Curve& c, const ArcLengthMap& m, double s,
                                      const FrenetOptions& opt = {});

/// Apparatus at every grid point with continuity bookkeeping. The per-point
/// stage runs on `threads` workers when threads > 1; the continuity pass is
/// sequential in grid order either way, so results do not depend on the
/// thread count.
std::vector<ApparatusSample> apparatus_along(const Curve& c, const ArcLengthMap& m,
                                             const std::vector<double>& s_grid,
                                             const FrenetOptions& opt = {}, int threads = 1);

} // namespace mgc
