#include "mgc/frenet.hpp"

#include <cmath>
#include <limits>
#include <thread>

#include "mgc/errors.hpp"

namespace mgc {

std::string_view to_string(CaseTag tag) noexcept {
    switch (tag) {
        case CaseTag::Case1: return "Case1";
        case CaseTag::Case2: return "Case2";
        case CaseTag::Case3: return "Case3";
    }
    return "?";
}

namespace {

int sign_of(double x) { return x < 0.0 ? -1 : +1; }

/// Round a metric projection to +-1; the construction treats the mu's as
/// exact signs, so a projection far from both is a hard inconsistency.
int round_sign(double p, const char* which) {
    const int s = sign_of(p);
    if (std::fabs(p - s) > 0.1)
        throw Error(ErrorCode::InconsistentFrame,
                    std::string(which) + " projection " + std::to_string(p) +
                        " is not close to +-1");
    return s;
}

/// Steps 1-3 of the construction in jet arithmetic. With unit-speed jets of
/// order n the resulting e3 is valid to order n-3 (order-4 input yields the
/// e3 derivative; order-3 input yields values only).
struct Steps123 {
    VecJet e1, e2, e3;
    double k1 = 0.0, k2 = 0.0;
    int mu1 = 0;
};

Steps123 steps123(const VecJet& cj, double tol) {
    Steps123 f;

    // Step 1: e1 = c' (with respect to arc length).
    f.e1 = deriv_of(cj);
    const double q1 = minkowski(f.e1, f.e1).value();
    if (q1 < 0.5)
        throw Error(ErrorCode::NotSpacelike,
                    "tangent is not spacelike (<e1,e1> = " + std::to_string(q1) + ")");

    // Step 2: k1 = ||e1'||, e2 = e1'/k1.
    const VecJet e1p = deriv_of(f.e1);
    const Jet qe1p = minkowski(e1p, e1p);
    f.k1 = std::sqrt(std::fabs(qe1p.value()));
    if (f.k1 <= tol)
        throw Error(ErrorCode::DegenerateK1, "k1 = " + std::to_string(f.k1) + " at tolerance " +
                                                 std::to_string(tol));
    const Jet k1j = sqrt(abs(qe1p));
    f.e2 = scale(e1p, 1.0 / k1j);

    // Step 3: mu1 from the metric projection of e2' on e1 (eps1 = +1),
    // then k2 and e3 from the projected remainder.
    const VecJet e2p = deriv_of(f.e2);
    const double p1 = minkowski(e2p, f.e1).value() / f.k1;
    f.mu1 = round_sign(p1, "mu1");
    const VecJet v3 = sub(e2p, scale(f.e1, k1j * static_cast<double>(f.mu1)));
    const Jet qv3 = minkowski(v3, v3);
    f.k2 = std::sqrt(std::fabs(qv3.value()));
    if (f.k2 <= tol)
        throw Error(ErrorCode::DegenerateK2, "k2 = " + std::to_string(f.k2) + " at tolerance " +
                                                 std::to_string(tol));
    f.e3 = scale(v3, 1.0 / sqrt(abs(qv3)));
    return f;
}

/// Step 4 plus the causal bookkeeping, consistency checks and assembly,
/// given the first three frame vectors and the derivative of e3.
FrenetApparatus finish_apparatus(const Steps123& f, const Vec4& e3p, double u, double s,
                                 double tol) {
    const Vec4 e1v = values_of(f.e1);
    const Vec4 e2v = values_of(f.e2);
    const Vec4 e3v = values_of(f.e3);
    const int eps2 = sign_of(inner(e2v, e2v));
    const int eps3 = sign_of(inner(e3v, e3v));

    const double p2 = inner(e3p, e2v) / (f.k2 * eps2);
    const int mu2 = round_sign(p2, "mu2");

    const Vec4 raw4 = e3p - static_cast<double>(mu2) * f.k2 * e2v;
    const double n4 = norm(raw4);
    if (n4 <= tol)
        throw Error(ErrorCode::DegenerateK3,
                    "fourth frame direction degenerate (norm " + std::to_string(n4) + ")");

    Vec4 e4v = raw4 * (1.0 / n4);
    double det = frame_det(e1v, e2v, e3v, e4v);
    int orient = +1;
    if (det < 0.0) {
        orient = -1;
        e4v = -e4v;
        det = -det;
    }
    const int eps4 = sign_of(inner(e4v, e4v));
    const double k3 = eps4 * inner(e3p, e4v);
    if (std::fabs(k3) <= tol)
        throw Error(ErrorCode::DegenerateK3, "k3 = " + std::to_string(k3) + " at tolerance " +
                                                 std::to_string(tol));

    // Causal structure: exactly one timelike vector among e2, e3, e4, and
    // the measured mu's must land in the case's row of the sign table.
    const int timelike = (eps2 < 0) + (eps3 < 0) + (eps4 < 0);
    if (timelike != 1)
        throw Error(ErrorCode::InconsistentFrame,
                    "expected exactly one timelike frame vector, found " +
                        std::to_string(timelike));
    const CaseTag tag = eps4 < 0 ? CaseTag::Case1 : (eps3 < 0 ? CaseTag::Case2 : CaseTag::Case3);
    const CaseSigns signs = case_signs(tag);
    const int mu3 = -eps3 * eps4;
    if (f.mu1 != signs.mu1 || mu2 != signs.mu2 || mu3 != signs.mu3)
        throw Error(ErrorCode::InconsistentFrame,
                    "mu signs (" + std::to_string(f.mu1) + "," + std::to_string(mu2) + "," +
                        std::to_string(mu3) + ") do not match " + std::string(to_string(tag)));

    const Vec4* frame[4] = {&e1v, &e2v, &e3v, &e4v};
    const int eps[4] = {1, eps2, eps3, eps4};
    double gram = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            const double want = i == j ? static_cast<double>(eps[i]) : 0.0;
            gram = std::fmax(gram, std::fabs(inner(*frame[i], *frame[j]) - want));
        }
    if (gram > 0.05)
        throw Error(ErrorCode::InconsistentFrame,
                    "frame fails orthonormality (residual " + std::to_string(gram) + ")");

    FrenetApparatus ap;
    ap.s = s;
    ap.u = u;
    ap.e1 = e1v;
    ap.e2 = e2v;
    ap.e3 = e3v;
    ap.e4 = e4v;
    ap.k1 = f.k1;
    ap.k2 = f.k2;
    ap.k3 = k3;
    ap.mu1 = f.mu1;
    ap.mu2 = mu2;
    ap.mu3 = mu3;
    ap.eps2 = eps2;
    ap.eps3 = eps3;
    ap.eps4 = eps4;
    ap.orient = orient;
    ap.case_tag = tag;
    ap.det = det;
    ap.gram_residual = gram;
    return ap;
}

FrenetApparatus build_apparatus(const VecJet& cj, double u, double s, double tol) {
    const Steps123 f = steps123(cj, tol);
    const Vec4 e3p = values_of(deriv_of(f.e3));
    return finish_apparatus(f, e3p, u, s, tol);
}

double effective_tol(const Curve& c, const FrenetOptions& opt) {
    return opt.tol * std::fmax(1.0, c.scale());
}

/// Construction for representations whose jets are only exact through order
/// 3 (sampled value splines): steps 1-3 need nothing beyond the third
/// derivative, and e3' is measured by a central difference of the e3 field
/// in the curve parameter, chain-ruled back to arc length. Coarser than the
/// analytic path; callers surface it via Curve::max_exact_order().
FrenetApparatus build_apparatus_reduced(const Curve& c, double u, double s, double tol) {
    const Interval dom = c.domain();
    const double du = dom.width() / 256.0;
    double u0 = u;
    if (u0 - 2 * du < dom.lo) u0 = dom.lo + 2 * du;
    if (u0 + 2 * du > dom.hi) u0 = dom.hi - 2 * du;

    const Steps123 f = steps123(unit_speed_jet_at_param(c, u, 3), tol);
    auto e3_at = [&](double x) {
        return values_of(steps123(unit_speed_jet_at_param(c, x, 3), tol).e3);
    };
    const Vec4 de3_du = (e3_at(u0 - 2 * du) - 8.0 * e3_at(u0 - du) + 8.0 * e3_at(u0 + du) -
                         e3_at(u0 + 2 * du)) * (1.0 / (12.0 * du));
    const Vec4 e3p = de3_du * (1.0 / speed(c, u0));
    return finish_apparatus(f, e3p, u, s, tol);
}

} // namespace

TangentNormalJets tangent_normal_jets(const Curve& c, const ArcLengthMap& m, double s,
                                      const FrenetOptions& opt) {
    const double tol = effective_tol(c, opt);
    TangentNormalJets out;
    out.c = unit_speed_jet(c, m, s, 4);
    out.e1 = deriv_of(out.c);
    const double q1 = minkowski(out.e1, out.e1).value();
    if (q1 < 0.5)
        throw Error(ErrorCode::NotSpacelike,
                    "tangent is not spacelike (<e1,e1> = " + std::to_string(q1) + ")");
    const VecJet e1p = deriv_of(out.e1);
    const Jet q = minkowski(e1p, e1p);
    if (std::sqrt(std::fabs(q.value())) <= tol)
        throw Error(ErrorCode::DegenerateK1, "k1 below tolerance " + std::to_string(tol));
    out.k1 = sqrt(abs(q));
    out.e2 = scale(e1p, 1.0 / out.k1);
    return out;
}

FrenetApparatus frenet_apparatus(const Curve& c, const ArcLengthMap& m, double s,
                                 const FrenetOptions& opt) {
    const double u = m.invert(s);
    if (c.max_exact_order() < 4)
        return build_apparatus_reduced(c, u, s, effective_tol(c, opt));
    const VecJet cj = unit_speed_jet(c, m, s, 4);
    return build_apparatus(cj, u, s, effective_tol(c, opt));
}

FrenetApparatus frenet_apparatus_at_param(const Curve& c, double u, const FrenetOptions& opt) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (c.max_exact_order() < 4)
        return build_apparatus_reduced(c, u, nan, effective_tol(c, opt));
    const VecJet cj = unit_speed_jet_at_param(c, u, 4);
    return build_apparatus(cj, u, nan, effective_tol(c, opt));
}

double frenet_residual(const Curve& c, const ArcLengthMap& m, double s, double h,
                       const FrenetOptions& opt) {
    if (!(h > 0.0)) throw Error(ErrorCode::InvalidInput, "frenet_residual: h must be > 0");

    const FrenetApparatus a0 = frenet_apparatus(c, m, s, opt);
    FrenetApparatus st[4] = {
        frenet_apparatus(c, m, s - 2 * h, opt),
        frenet_apparatus(c, m, s - h, opt),
        frenet_apparatus(c, m, s + h, opt),
        frenet_apparatus(c, m, s + 2 * h, opt),
    };

    // Sign-align the stencil frames to the frame at s before differencing.
    for (FrenetApparatus& a : st)
        for (int i = 0; i < 4; ++i) {
            Vec4& v = a.frame(i);
            if (inner(v, a0.frame(i)) * a0.eps(i) < 0.0) v = -v;
        }

    auto stencil = [&](int i) {
        return (st[0].frame(i) - 8.0 * st[1].frame(i) + 8.0 * st[2].frame(i) -
                st[3].frame(i)) * (1.0 / (12.0 * h));
    };

    const Vec4 rows[4] = {
        stencil(0) - a0.k1 * a0.e2,
        stencil(1) - (static_cast<double>(a0.mu1) * a0.k1 * a0.e1 + a0.k2 * a0.e3),
        stencil(2) - (static_cast<double>(a0.mu2) * a0.k2 * a0.e2 + a0.k3 * a0.e4),
        stencil(3) - static_cast<double>(a0.mu3) * a0.k3 * a0.e3,
    };
    double r = 0.0;
    for (const Vec4& row : rows) r = std::fmax(r, euclid_norm(row));
    return r;
}

std::vector<ApparatusSample> apparatus_along(const Curve& c, const ArcLengthMap& m,
                                             const std::vector<double>& s_grid,
                                             const FrenetOptions& opt, int threads) {
    std::vector<ApparatusSample> out(s_grid.size());

    auto work = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            out[i].s = s_grid[i];
            try {
                out[i].apparatus = frenet_apparatus(c, m, s_grid[i], opt);
            } catch (const Error& e) {
                out[i].error = e.what();
            }
        }
    };

    if (threads <= 1 || s_grid.size() < 2) {
        work(0, s_grid.size());
    } else {
        const size_t n = s_grid.size();
        const size_t nw = std::min<size_t>(threads, n);
        std::vector<std::thread> pool;
        pool.reserve(nw);
        for (size_t w = 0; w < nw; ++w) {
            const size_t b = n * w / nw, e = n * (w + 1) / nw;
            pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }

    // Continuity pass: the construction is deterministic per point, so sign
    // jumps or case changes between neighbouring valid samples are flagged
    // rather than repaired (repairs would break the k > 0 invariants).
    const FrenetApparatus* prev = nullptr;
    for (ApparatusSample& sm : out) {
        if (!sm.apparatus) continue;
        if (prev) {
            if (prev->case_tag != sm.apparatus->case_tag) sm.case_change = true;
            for (int i = 0; i < 4; ++i)
                if (inner(prev->frame(i), sm.apparatus->frame(i)) * prev->eps(i) < 0.0)
                    sm.orientation_jump = true;
        }
        prev = &*sm.apparatus;
    }
    return out;
}

} // namespace mgc
