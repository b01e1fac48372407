#include <cmath>
#include <random>

#include <doctest.h>

#include "mgc/errors.hpp"
#include "mgc/family.hpp"
#include "mgc/mannheim.hpp"
#include "support/fixtures.hpp"

using namespace mgc;
using namespace mgc::test;

namespace {

std::shared_ptr<const FamilyCurve> family_fixture() {
    FamilyParams fp;
    fp.alpha = 0.5;
    fp.g = parse("u");
    fp.h = parse("u^2/4");
    fp.domain = {0.25, 2.0};
    return generate_curve(fp);
}

} // namespace

TEST_CASE("alpha from a curvature pair") {
    CHECK(alpha_pointwise(kSqrt3, kK2Fixture, CaseTag::Case2) ==
          doctest::Approx(kAlphaFixture).epsilon(1e-13));
    CHECK(alpha_pointwise(1.0, 1.0, CaseTag::Case1) == doctest::Approx(0.5).epsilon(1e-15));
    try {
        alpha_pointwise(1.0, 1.0, CaseTag::Case2);
        FAIL("expected DegenerateDenominator");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateDenominator);
    }
}

TEST_CASE("alpha substituted back gives exact zero residual") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> kk(0.1, 4.0);
    for (int it = 0; it < 300; ++it) {
        const double k1 = kk(rng), k2 = kk(rng);
        for (CaseTag tag : {CaseTag::Case1, CaseTag::Case2, CaseTag::Case3}) {
            const CaseSigns cs = case_signs(tag);
            const double den = cs.mu1 * k1 * k1 + cs.mu2 * k2 * k2;
            if (std::fabs(den) < 1e-3) continue;
            const double a = alpha_pointwise(k1, k2, tag);
            const double resid = k1 + a * den;
            CHECK(std::fabs(resid) <= 8 * 2.2e-16 * k1);
        }
    }
}

TEST_CASE("condition check on the constant-curvature fixture") {
    auto c = fixture_curve();
    auto m = ArcLengthMap(c);
    const MannheimReport rep = check_condition(c, m, 25);
    CHECK(rep.verdict == Verdict::Holds);
    CHECK(rep.alpha_hat == doctest::Approx(kAlphaFixture).epsilon(1e-12));
    CHECK(rep.alpha_rel_spread <= 1e-9);
    CHECK(rep.case_tag == CaseTag::Case2);
    CHECK(rep.condition == "k1 = alpha*(k1^2 - k2^2)");
}

TEST_CASE("condition check on the generated family member") {
    // Nonconstant curvatures satisfying k1 = 0.5 (k1^2 + k2^2); the member
    // has a timelike principal normal, so the admitted constant carries the
    // opposite sign of the family parameter.
    auto c = family_fixture();
    auto m = ArcLengthMap(c);
    const MannheimReport rep = check_condition(std::shared_ptr<const Curve>(c), m, 25);
    CHECK(rep.verdict == Verdict::Holds);
    CHECK(rep.case_tag == CaseTag::Case3);
    CHECK(rep.alpha_hat == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(rep.alpha_rel_spread <= 1e-9);
}

TEST_CASE("condition check fails for non-proportional curvatures") {
    // Synthetic samples: k1 varies while k2 tracks it, so the pointwise
    // alpha = 1/(2 k1) cannot be constant.
    std::vector<ConditionSample> samples;
    for (int i = 0; i < 20; ++i) {
        ConditionSample sm;
        sm.s = i * 0.1;
        sm.k1 = 1.0 + 0.5 * i * 0.1;
        sm.k2 = sm.k1;
        samples.push_back(sm);
    }
    const MannheimReport rep = check_condition_samples(std::move(samples), CaseTag::Case1);
    CHECK(rep.verdict == Verdict::Fails);
    CHECK(rep.alpha_rel_spread > 1e-3);
}

namespace {

/// Two expression curves glued at s = 1: Case2 on the left, Case3 on the
/// right. Discontinuous at the seam, which per-point frame construction
/// never sees.
class GluedCurve final : public Curve {
public:
    GluedCurve()
        : a_(parse("sinh(u)"), parse("cosh(u)"), parse("sqrt(2)*cos(u)"),
             parse("sqrt(2)*sin(u)"), Interval{0.0, 2.0}),
          b_(parse("sqrt(2)*cosh(u)"), parse("sqrt(2)*sinh(u)"), parse("sin(u)"),
             parse("cos(u)"), Interval{0.0, 2.0}) {}

    VecJet jets(double t, int order) const override {
        return t < 1.0 ? a_.jets(t, order) : b_.jets(t, order);
    }
    Interval domain() const override { return {0.0, 2.0}; }
    double scale() const override { return 2.0; }

private:
    CurveSpec a_;
    CurveSpec b_;
};

} // namespace

TEST_CASE("condition check detects a causal case change") {
    auto c = std::make_shared<const GluedCurve>();
    auto m = ArcLengthMap(std::shared_ptr<const Curve>(c));
    try {
        check_condition(std::shared_ptr<const Curve>(c), m, 15);
        FAIL("expected CaseChange");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CaseChange);
    }
}

TEST_CASE("condition check on a constant-curvature Case3 curve") {
    auto c = std::make_shared<CurveSpec>(parse("sqrt(2)*cosh(u)"), parse("sqrt(2)*sinh(u)"),
                                         parse("sin(u)"), parse("cos(u)"), Interval{0.0, 2.0});
    auto m = ArcLengthMap(std::shared_ptr<const Curve>(c));
    const MannheimReport rep = check_condition(std::shared_ptr<const Curve>(c), m, 15);
    CHECK(rep.verdict == Verdict::Holds);
    CHECK(rep.case_tag == CaseTag::Case3);
    // alpha = -k1/(k1^2 + k2^2) with k1 = 1/3, k2 = sqrt(8)/3
    CHECK(rep.alpha_hat == doctest::Approx(-1.0 / 3.0).epsilon(1e-10));
    CHECK(rep.condition == "k1 = -alpha*(k1^2 + k2^2)");
}

TEST_CASE("degenerate verdict when too few samples survive") {
    std::vector<ConditionSample> samples(5);
    for (int i = 0; i < 5; ++i) {
        samples[i].s = i;
        samples[i].k1 = 1.0;
        samples[i].k2 = 1.0; // Case2 denominator vanishes at every sample
    }
    const MannheimReport rep = check_condition_samples(std::move(samples), CaseTag::Case2);
    CHECK(rep.verdict == Verdict::Degenerate);
}

TEST_CASE("mate speed closed form") {
    CHECK(mate_speed(CaseTag::Case2, kSqrt3, kK2Fixture, kAlphaFixture) ==
          doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-13));
    CHECK(mate_speed(CaseTag::Case1, 1.3, 0.7, 0.0) == 1.0);

    // Under the curvature condition the speed collapses to sqrt|1 + mu1 a k1|.
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> kk(0.2, 3.0);
    for (int it = 0; it < 200; ++it) {
        for (CaseTag tag : {CaseTag::Case1, CaseTag::Case2, CaseTag::Case3}) {
            const CaseSigns cs = case_signs(tag);
            const double k1 = kk(rng), k2 = kk(rng);
            const double den = cs.mu1 * k1 * k1 + cs.mu2 * k2 * k2;
            if (std::fabs(den) < 1e-2) continue;
            const double a = -k1 / den;
            const double direct = mate_speed(tag, k1, k2, a);
            const double reduced = std::sqrt(std::fabs(1.0 + cs.mu1 * a * k1));
            CHECK(direct == doctest::Approx(reduced).epsilon(1e-9));
        }
    }
}

TEST_CASE("mate speed equals the norm of the frame expansion") {
    // d(c + a e2)/ds = (1 + mu1 a k1) e1 + a' e2 + a k2 e3 against synthetic
    // orthonormal frames of each causal case.
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> kk(0.1, 5.0);
    std::uniform_real_distribution<double> aa(-3.0, 3.0);
    for (int it = 0; it < 300; ++it) {
        for (CaseTag tag : {CaseTag::Case1, CaseTag::Case2, CaseTag::Case3}) {
            const CaseSigns cs = case_signs(tag);
            // basis with the timelike direction in the slot the case requires
            const Vec4 tl{1, 0, 0, 0}, s1{0, 1, 0, 0}, s2{0, 0, 1, 0}, s3{0, 0, 0, 1};
            const Vec4 e1 = s1;
            const Vec4 e2 = cs.eps2 < 0 ? tl : s2;
            const Vec4 e3 = cs.eps3 < 0 ? tl : (cs.eps2 < 0 ? s2 : s3);
            const double k1 = kk(rng), k2 = kk(rng), a = aa(rng), ap = aa(rng) / 3.0;
            const Vec4 v = (1.0 + cs.mu1 * a * k1) * e1 + ap * e2 + (a * k2) * e3;
            CHECK(norm(v) == doctest::Approx(mate_speed(tag, k1, k2, a, ap)).epsilon(1e-9));
        }
    }
}

TEST_CASE("mate construction: alpha = 0 is the identity pair") {
    auto c = fixture_curve();
    const MatePair pair = construct_mate(c, 0.0, 200);
    for (size_t j = 0; j < pair.s.size(); j += 20)
        CHECK(pair.s_star[j] == doctest::Approx(pair.s[j]).epsilon(1e-12));
    const Vec4 p = pair.mate->point(1.0);
    const Vec4 q = c->point(1.0);
    CHECK(euclid_norm(p - q) <= 1e-12);
}

TEST_CASE("mate of the fixture has constant speed 2 sqrt 2") {
    auto c = fixture_curve();
    const MatePair pair = construct_mate(c, kAlphaFixture, 256);
    for (double s : {0.0, 0.5, 1.0, 1.7, 2.0})
        CHECK(norm(pair.mate->velocity(s)) ==
              doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-9));
    CHECK(pair.s_star.back() == doctest::Approx(2.0 * std::sqrt(2.0) * 2.0).epsilon(1e-9));
}

TEST_CASE("mate construction propagates apparatus failures") {
    CHECK_THROWS_AS(construct_mate(line_curve(), 1.0, 200), Error);
}

TEST_CASE("mate construction rejects degenerate mate speed") {
    // On the fixture f'^2 = |(1 - a k1)^2 - (a k2)^2| vanishes at
    // a = 1/(k1 + k2).
    auto c = fixture_curve();
    const double bad = 1.0 / (kSqrt3 + kK2Fixture);
    try {
        construct_mate(c, bad, 200);
        FAIL("expected MateIrregular");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MateIrregular);
    }
}

TEST_CASE("verify_pair rejects the alpha = 0 degenerate pair") {
    auto c = fixture_curve();
    const MatePair pair = construct_mate(c, 0.0, 200);
    const PairReport rep = verify_pair(pair, 1e-4, 9);
    CHECK(rep.outcome == PairReport::Outcome::Fails);
    CHECK(rep.max_r_e2 == doctest::Approx(1.0).epsilon(1e-6)); // e2 = e2*
}

TEST_CASE("verify_pair holds for the family member with its admitted constant") {
    auto c = family_fixture();
    auto m = ArcLengthMap(std::shared_ptr<const Curve>(c));
    const MannheimReport cond = check_condition(std::shared_ptr<const Curve>(c), m, 25);
    REQUIRE(cond.verdict == Verdict::Holds);
    const MatePair pair = construct_mate(std::shared_ptr<const Curve>(c), cond.alpha_hat, 256);
    const PairReport rep = verify_pair(pair, 1e-4, 25);
    CHECK(rep.outcome == PairReport::Outcome::Holds);
    CHECK(rep.max_r_e1 <= 1e-4);
    CHECK(rep.max_r_e2 <= 1e-4);

    // Robust to refining the probe grid.
    const PairReport rep2 = verify_pair(pair, 1e-4, 50);
    CHECK(rep2.max_r_e2 <= 10 * 1e-4);
}

TEST_CASE("verify_pair reports MateNotFrenet with the failing points") {
    // A pair whose "mate" is a straight line: its frame cannot be built.
    auto c = fixture_curve();
    MatePair pair = construct_mate(c, kAlphaFixture, 200);
    std::vector<HermiteCurve::Node> nodes;
    for (int j = 0; j <= 10; ++j) {
        HermiteCurve::Node n;
        n.t = 2.0 * j / 10;
        n.value = {0.0, 3.0 * n.t, 0.0, 0.0};
        n.d1 = {0.0, 3.0, 0.0, 0.0};
        n.d2 = {0.0, 0.0, 0.0, 0.0};
        nodes.push_back(n);
    }
    pair.mate = std::make_shared<HermiteCurve>(std::move(nodes), "s");
    const PairReport rep = verify_pair(pair, 1e-4, 5);
    CHECK(rep.outcome == PairReport::Outcome::MateNotFrenet);
    int failing = 0;
    for (const auto& pt : rep.points)
        if (!pt.mate_error.empty()) ++failing;
    CHECK(failing == 5);
}

TEST_CASE("thm33: constant-curvature data satisfies the derivative identity") {
    std::vector<Thm33Point> pts;
    for (int i = 0; i < 9; ++i) {
        Thm33Point p;
        p.s = 0.25 * i;
        p.k1 = kSqrt3;
        p.k2 = kK2Fixture;
        p.e2 = {0.0, 1.0, 0.0, 0.0};
        p.e4_star = {0.0, -1.0, 0.0, 0.0}; // hypothesis imposed
        pts.push_back(p);
    }
    const Thm33Report rep = verify_thm33_points(std::move(pts), kAlphaFixture, CaseTag::Case2, 1e-6);
    CHECK(rep.outcome == Thm33Report::Outcome::Holds);
    CHECK(rep.hypothesis_met);
    CHECK(rep.max_identity_residual <= 1e-10);
}

TEST_CASE("thm33: imposed alignment with varying k1 fails (contrapositive)") {
    std::vector<Thm33Point> pts;
    for (int i = 0; i < 9; ++i) {
        Thm33Point p;
        p.s = 0.25 * i;
        p.k1 = 1.0 + 0.1 * p.s;
        p.k2 = 0.8;
        p.e2 = {0.0, 1.0, 0.0, 0.0};
        p.e4_star = {0.0, -1.0, 0.0, 0.0};
        pts.push_back(p);
    }
    const Thm33Report rep = verify_thm33_points(std::move(pts), 0.4, CaseTag::Case1, 1e-6);
    CHECK(rep.outcome == Thm33Report::Outcome::Fails);
    CHECK(rep.hypothesis_met);
    CHECK(rep.max_k1_prime == doctest::Approx(0.1).epsilon(1e-9));
}

TEST_CASE("thm33 on a real pair reports the unmet hypothesis") {
    auto c = family_fixture();
    const MatePair pair = construct_mate(std::shared_ptr<const Curve>(c), -0.5, 256);
    const Thm33Report rep = verify_thm33(pair, 1e-6, 11);
    CHECK(rep.outcome == Thm33Report::Outcome::HypothesisNotMet);
    CHECK_FALSE(rep.hypothesis_met);
    // the derivative identity is still evaluated from the base data
    CHECK(rep.max_identity_residual < 1.0);
}

TEST_CASE("fixture pair against the closed-form f prime identity") {
    auto c = fixture_curve();
    auto m = ArcLengthMap(c);
    const MatePair pair = construct_mate(c, kAlphaFixture, 256);
    for (double s : {0.2, 0.9, 1.6}) {
        const FrenetApparatus ap = frenet_apparatus(*c, m, s);
        const double closed = mate_speed(ap, kAlphaFixture);
        const double measured = norm(pair.mate->velocity(s));
        CHECK(measured == doctest::Approx(closed).epsilon(1e-9));
    }
}
