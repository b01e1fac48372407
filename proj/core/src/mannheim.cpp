#include "mgc/mannheim.hpp"

#include <algorithm>
#include <cmath>

#include "mgc/errors.hpp"

namespace mgc {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Holds:      return "Holds";
        case Verdict::Fails:      return "Fails";
        case Verdict::Degenerate: return "Degenerate";
    }
    return "?";
}

std::string_view to_string(PairReport::Outcome o) noexcept {
    switch (o) {
        case PairReport::Outcome::Holds:         return "Holds";
        case PairReport::Outcome::Fails:         return "Fails";
        case PairReport::Outcome::MateNotFrenet: return "MateNotFrenet";
    }
    return "?";
}

std::string_view to_string(Thm33Report::Outcome o) noexcept {
    switch (o) {
        case Thm33Report::Outcome::Holds:            return "Holds";
        case Thm33Report::Outcome::Fails:            return "Fails";
        case Thm33Report::Outcome::HypothesisNotMet: return "HypothesisNotMet";
    }
    return "?";
}

double alpha_pointwise(double k1, double k2, CaseTag tag, double tol) {
    const CaseSigns cs = case_signs(tag);
    const double den = cs.mu1 * k1 * k1 + cs.mu2 * k2 * k2;
    if (std::fabs(den) <= tol * std::fmax(1.0, k1 * k1 + k2 * k2))
        throw Error(ErrorCode::DegenerateDenominator,
                    "mu1 k1^2 + mu2 k2^2 vanishes (k1 = " + std::to_string(k1) +
                        ", k2 = " + std::to_string(k2) + ", " + std::string(to_string(tag)) + ")");
    return -k1 / den;
}

namespace {

const char* condition_text(CaseTag tag) {
    switch (tag) {
        case CaseTag::Case1: return "k1 = alpha*(k1^2 + k2^2)";
        case CaseTag::Case2: return "k1 = alpha*(k1^2 - k2^2)";
        case CaseTag::Case3: return "k1 = -alpha*(k1^2 + k2^2)";
    }
    return "";
}

} // namespace

MannheimReport check_condition_samples(std::vector<ConditionSample> samples, CaseTag tag,
                                       const ConditionThresholds& thresholds) {
    MannheimReport rep;
    rep.case_tag = tag;
    rep.condition = condition_text(tag);
    const CaseSigns cs = case_signs(tag);

    std::vector<double> alphas;
    for (ConditionSample& sm : samples) {
        if (!sm.error.empty()) continue;
        try {
            sm.alpha = alpha_pointwise(sm.k1, sm.k2, tag);
            alphas.push_back(sm.alpha);
        } catch (const Error& e) {
            sm.error = e.what();
        }
    }
    rep.samples = std::move(samples);

    if (alphas.size() < 3) {
        rep.verdict = Verdict::Degenerate;
        return rep;
    }

    std::vector<double> sorted = alphas;
    std::sort(sorted.begin(), sorted.end());
    const size_t n = sorted.size();
    rep.alpha_hat = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    if (rep.alpha_hat == 0.0) {
        rep.verdict = Verdict::Degenerate;
        return rep;
    }
    rep.alpha_rel_spread = (sorted.back() - sorted.front()) / std::fabs(rep.alpha_hat);

    double scale = 0.0;
    for (const ConditionSample& sm : rep.samples)
        if (sm.error.empty()) scale = std::fmax(scale, sm.k1);
    rep.residual_scale = std::fmax(scale, 1e-300);

    for (ConditionSample& sm : rep.samples) {
        if (!sm.error.empty()) continue;
        sm.residual = sm.k1 + rep.alpha_hat * (cs.mu1 * sm.k1 * sm.k1 + cs.mu2 * sm.k2 * sm.k2);
        rep.max_abs_residual = std::fmax(rep.max_abs_residual, std::fabs(sm.residual));
    }

    const bool ok = rep.alpha_rel_spread <= thresholds.spread &&
                    rep.max_abs_residual <= thresholds.residual * rep.residual_scale;
    rep.verdict = ok ? Verdict::Holds : Verdict::Fails;
    return rep;
}

MannheimReport check_condition(const std::shared_ptr<const Curve>& c, const ArcLengthMap& m,
                               int n_samples, const ConditionThresholds& thresholds,
                               const FrenetOptions& fopt, int threads) {
    if (n_samples < 3)
        throw Error(ErrorCode::InvalidInput, "check_condition needs at least 3 samples");

    const double total = m.total_length();
    std::vector<double> grid(n_samples);
    for (int i = 0; i < n_samples; ++i)
        grid[i] = total * i / (n_samples - 1);

    const std::vector<ApparatusSample> frames = apparatus_along(*c, m, grid, fopt, threads);

    bool have_case = false;
    CaseTag tag = CaseTag::Case1;
    std::vector<ConditionSample> samples;
    samples.reserve(frames.size());
    for (const ApparatusSample& f : frames) {
        ConditionSample sm;
        sm.s = f.s;
        if (f.apparatus) {
            sm.k1 = f.apparatus->k1;
            sm.k2 = f.apparatus->k2;
            if (!have_case) {
                tag = f.apparatus->case_tag;
                have_case = true;
            } else if (f.apparatus->case_tag != tag) {
                throw Error(ErrorCode::CaseChange,
                            "causal case changes from " + std::string(to_string(tag)) + " to " +
                                std::string(to_string(f.apparatus->case_tag)) + " at s = " +
                                std::to_string(f.s));
            }
        } else {
            sm.error = f.error;
        }
        samples.push_back(std::move(sm));
    }
    if (!have_case)
        throw Error(ErrorCode::DegenerateK1, "no sample admits a Frenet apparatus");
    return check_condition_samples(std::move(samples), tag, thresholds);
}

double MatePair::mate_length_at(double sq) const {
    if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty correspondence table");
    auto it = std::upper_bound(s.begin(), s.end(), sq);
    size_t i = static_cast<size_t>(it - s.begin());
    if (i == 0) return s_star.front();
    if (i >= s.size()) return s_star.back();
    const double w = (sq - s[i - 1]) / (s[i] - s[i - 1]);
    return s_star[i - 1] + w * (s_star[i] - s_star[i - 1]);
}

MatePair construct_mate(const std::shared_ptr<const Curve>& base, double alpha, int n_samples,
                        const FrenetOptions& fopt) {
    MatePair pair;
    pair.base = base;
    pair.base_map = std::make_shared<ArcLengthMap>(base);
    pair.alpha = alpha;

    // Spline fidelity needs a dense sampling; 200 nodes is the floor.
    const int n = std::max(n_samples, 200);
    const double total = pair.base_map->total_length();

    std::vector<HermiteCurve::Node> nodes(n + 1);
    pair.s.resize(n + 1);
    for (int j = 0; j <= n; ++j) {
        const double s = total * j / n;
        const TangentNormalJets tj = tangent_normal_jets(*base, *pair.base_map, s, fopt);
        VecJet mate;
        for (int i = 0; i < 4; ++i) mate[i] = tj.c[i] + tj.e2[i] * alpha;

        HermiteCurve::Node& node = nodes[j];
        node.t = s;
        for (int i = 0; i < 4; ++i) {
            node.value[i] = mate[i].value();
            node.d1[i] = mate[i].derivative(1);
            node.d2[i] = mate[i].derivative(2);
        }
        const double sp = norm(node.d1);
        if (sp <= kNullSpeedTol * std::fmax(1.0, euclid_norm(node.d1)))
            throw Error(ErrorCode::MateIrregular,
                        "mate velocity degenerates at s = " + std::to_string(s) +
                            " (speed " + std::to_string(sp) + ")");
        pair.s[j] = s;
    }

    auto mate_curve = std::make_shared<HermiteCurve>(std::move(nodes), "s");
    pair.mate = mate_curve;

    pair.s_star.resize(n + 1);
    pair.s_star[0] = 0.0;
    for (int j = 0; j < n; ++j)
        pair.s_star[j + 1] =
            pair.s_star[j] + arc_length(*mate_curve, pair.s[j], pair.s[j + 1]);
    return pair;
}

double mate_speed(CaseTag tag, double k1, double k2, double alpha, double alpha_prime) {
    const CaseSigns cs = case_signs(tag);
    const double t1 = 1.0 + cs.mu1 * alpha * k1;
    const double t2 = alpha_prime;
    const double t3 = alpha * k2;
    return std::sqrt(std::fabs(t1 * t1 + cs.eps2 * t2 * t2 + cs.eps3 * t3 * t3));
}

double mate_speed(const FrenetApparatus& ap, double alpha, double alpha_prime) {
    return mate_speed(ap.case_tag, ap.k1, ap.k2, alpha, alpha_prime);
}

PairReport verify_pair(const MatePair& pair, double tol, int n_points,
                       const FrenetOptions& fopt) {
    if (n_points < 2) throw Error(ErrorCode::InvalidInput, "verify_pair needs >= 2 points");
    if (!pair.base || !pair.mate || !pair.base_map)
        throw Error(ErrorCode::InvalidInput, "incomplete mate pair");

    PairReport rep;
    rep.tol = tol;

    const double total = pair.s.back();
    bool frenet_failure = false;
    for (int j = 0; j < n_points; ++j) {
        PairPoint pt;
        pt.s = total * j / (n_points - 1);
        pt.s_star = pair.mate_length_at(pt.s);

        const TangentNormalJets base = tangent_normal_jets(*pair.base, *pair.base_map, pt.s, fopt);
        const Vec4 e2 = values_of(base.e2);

        try {
            // The mate's own frame at the corresponding point; evaluated
            // directly at the shared parameter (base arc length).
            const FrenetApparatus star = frenet_apparatus_at_param(*pair.mate, pt.s, fopt);
            pt.r_e1 = std::fabs(inner(e2, star.e1));
            pt.r_e2 = std::fabs(inner(e2, star.e2));
            rep.max_r_e1 = std::fmax(rep.max_r_e1, pt.r_e1);
            rep.max_r_e2 = std::fmax(rep.max_r_e2, pt.r_e2);
        } catch (const Error& e) {
            pt.mate_error = e.what();
            frenet_failure = true;
        }
        rep.points.push_back(std::move(pt));
    }

    if (frenet_failure)
        rep.outcome = PairReport::Outcome::MateNotFrenet;
    else if (rep.max_r_e1 <= tol && rep.max_r_e2 <= tol)
        rep.outcome = PairReport::Outcome::Holds;
    else
        rep.outcome = PairReport::Outcome::Fails;
    return rep;
}

Thm33Report verify_thm33_points(std::vector<Thm33Point> points, double alpha, CaseTag tag,
                                double tol, double angle_tol) {
    if (points.size() < 3)
        throw Error(ErrorCode::InvalidInput, "verify_thm33 needs >= 3 points");

    Thm33Report rep;
    const CaseSigns cs = case_signs(tag);

    for (const Thm33Point& p : points) {
        const double ne4 = euclid_norm(p.e4_star);
        const double ne2 = euclid_norm(p.e2);
        double mis = 1.0;
        if (ne4 > 0.0 && ne2 > 0.0) {
            const double dot = p.e4_star.x1 * p.e2.x1 + p.e4_star.x2 * p.e2.x2 +
                               p.e4_star.x3 * p.e2.x3 + p.e4_star.x4 * p.e2.x4;
            mis = 1.0 - std::fabs(dot) / (ne4 * ne2);
        }
        rep.max_misalignment = std::fmax(rep.max_misalignment, mis);
    }
    rep.hypothesis_met = rep.max_misalignment <= angle_tol;

    // Curvature derivatives by central differences over the probe grid.
    const size_t n = points.size();
    double scale = 0.0;
    for (const Thm33Point& p : points) scale = std::fmax(scale, std::fmax(p.k1, p.k2));
    rep.derivative_scale = std::fmax(scale, 1e-300);

    for (size_t i = 0; i < n; ++i) {
        const size_t l = i == 0 ? 0 : i - 1;
        const size_t r = i + 1 == n ? n - 1 : i + 1;
        const double ds = points[r].s - points[l].s;
        if (!(ds > 0.0))
            throw Error(ErrorCode::InvalidInput, "probe grid must increase strictly");
        const double k1p = (points[r].k1 - points[l].k1) / ds;
        const double k2p = (points[r].k2 - points[l].k2) / ds;
        rep.max_k1_prime = std::fmax(rep.max_k1_prime, std::fabs(k1p));
        rep.max_k2_prime = std::fmax(rep.max_k2_prime, std::fabs(k2p));
        const double lhs = -0.5 * k1p;
        const double rhs = alpha * (cs.mu1 * points[i].k1 * k1p + cs.mu2 * points[i].k2 * k2p);
        rep.max_identity_residual = std::fmax(rep.max_identity_residual, std::fabs(lhs - rhs));
    }

    rep.points = std::move(points);
    if (!rep.hypothesis_met) {
        rep.outcome = Thm33Report::Outcome::HypothesisNotMet;
    } else {
        const bool constant = rep.max_k1_prime <= tol * rep.derivative_scale &&
                              rep.max_k2_prime <= tol * rep.derivative_scale;
        rep.outcome = constant ? Thm33Report::Outcome::Holds : Thm33Report::Outcome::Fails;
    }
    return rep;
}

Thm33Report verify_thm33(const MatePair& pair, double tol, int n_points,
                         const FrenetOptions& fopt, double angle_tol) {
    if (n_points < 3) throw Error(ErrorCode::InvalidInput, "verify_thm33 needs >= 3 points");

    const double total = pair.s.back();
    std::vector<Thm33Point> pts;
    CaseTag tag = CaseTag::Case1;
    for (int j = 0; j < n_points; ++j) {
        Thm33Point p;
        p.s = total * j / (n_points - 1);
        const FrenetApparatus base = frenet_apparatus(*pair.base, *pair.base_map, p.s, fopt);
        tag = base.case_tag;
        p.k1 = base.k1;
        p.k2 = base.k2;
        p.e2 = base.e2;
        try {
            const FrenetApparatus star = frenet_apparatus_at_param(*pair.mate, p.s, fopt);
            p.e4_star = star.e4;
        } catch (const Error& e) {
            throw Error(ErrorCode::MateNotFrenet,
                        "mate frame unavailable at s = " + std::to_string(p.s) + ": " + e.detail());
        }
        pts.push_back(p);
    }
    return verify_thm33_points(std::move(pts), pair.alpha, tag, tol, angle_tol);
}

} // namespace mgc
