#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mgc/expr.hpp"
#include "mgc/frenet.hpp"
#include "mgc/mannheim.hpp"

namespace mgc {

/// Parameters of the explicit curve family: a nonzero constant alpha and
/// two smooth profile functions g(u), h(u) on a closed interval. The
/// components are cumulative integrals of alpha * f(u) * (sinh u, cosh u,
/// g(u), h(u)), with f chosen so the curvatures satisfy
/// k1 = alpha (k1^2 + k2^2).
struct FamilyParams {
    double alpha = 1.0;
    Expr g;
    Expr h;
    Interval domain;
    int n_nodes = 1024; // quadrature cells of the cumulative table
};

/// The recurring combinations of g, h and their u-derivatives.
struct Abbrevs {
    double A, B, C, D, E, F;
    // A = 1+g^2+h^2   B = g g' + h h'   C = g'^2 + h'^2
    // D = g g'' + h h''   E = g' g'' + h' h''   F = g''^2 + h''^2
};

Abbrevs abbrevs_at(const Expr& g, const Expr& h, double u);

/// The quantity -A + AC - B^2 (the "inner factor" that must stay away from
/// zero for f to be defined).
double inner_factor(const Abbrevs& a);

struct PQR {
    double P, Q, R;    // full forms
    double Pt, Qt, Rt; // reduced forms; P = A^2 Pt etc.
};

PQR pqr_at(const Abbrevs& a);

/// The density f(u). Throws Error{SingularInner} when |inner factor| <= tol.
double f_of_u(const Expr& g, const Expr& h, double u, double tol = 1e-12);

/// f as a jet of order <= 3 (g, h jets of order+2 are consumed).
Jet f_jet(const Expr& g, const Expr& h, double u, int order, double tol = 1e-12);

/// The generated family member. Component values come from a cumulative
/// composite Gauss table over n_nodes cells (partial cells integrated
/// directly for off-node queries); derivatives are analytic jets of the
/// integrand, so the first derivative equals alpha f (sinh, cosh, g, h)
/// exactly. The integrand is evaluated only at interior Gauss nodes; the
/// anchor value at the domain start is a gauge constant.
class FamilyCurve final : public Curve {
public:
    explicit FamilyCurve(FamilyParams params);

    VecJet jets(double u, int order) const override;
    Interval domain() const override { return params_.domain; }
    int max_exact_order() const override { return 4; }
    /// Curvature tolerances for this representation are absolute: the
    /// coordinate magnitude is dominated by the arbitrary anchor constant
    /// and carries no geometric meaning.
    double scale() const override { return 1.0; }

    const FamilyParams& params() const { return params_; }

    /// Integrand of component i at u (= the exact first derivative).
    double integrand(int i, double u) const;

private:
    FamilyParams params_;
    std::vector<double> cell_; // cell boundaries
    std::array<std::vector<double>, 4> cum_; // cumulative integrals at boundaries
};

std::shared_ptr<FamilyCurve> generate_curve(FamilyParams params);

/// k1 from the closed form phi' A^-1 |inner|^(1/2) with
/// phi' = (|alpha| f A^(1/2))^-1.
double closed_form_k1(const FamilyParams& p, double u);

/// k1^2 + k2^2 from the closed form.
double closed_form_ksq_sum(const FamilyParams& p, double u);

struct FamilyProbe {
    double u = 0.0;
    double f = 0.0;
    double k1_closed = 0.0;
    double ksq_closed = 0.0;
    double k1_num = 0.0;
    double k2_num = 0.0;
    double res_closed = 0.0; // |k1 - alpha (k1^2+k2^2)| / k1, closed forms
    double res_num = 0.0;    // same through the numerical frame pipeline
    double route_gap = 0.0;  // |k1_closed - k1_num| / k1_closed
    bool case1 = false;      // e4 timelike at this probe
    bool sign_flag = false;  // inner factor < 0 (the unsigned root form is used)
    std::string error;
};

struct FamilyReport {
    Verdict verdict = Verdict::Fails;
    double alpha = 0.0;
    double max_res_closed = 0.0;
    double max_res_num = 0.0;
    double max_route_gap = 0.0;
    bool all_case1 = false;
    bool sign_inconsistency = false; // inner factor negative somewhere
    int n_errors = 0;
    std::vector<FamilyProbe> probes;
};

struct FamilyVerifyOptions {
    double closed_tol = 1e-9;  // bound on res_closed for a Holds verdict
    double numeric_tol = 1e-4; // bound on res_num for a Holds verdict
    FrenetOptions frenet;
};

/// Check k1 = alpha (k1^2 + k2^2) through both routes at interior probes
/// (uniform midpoint layout, so probes never sit on domain endpoints).
/// Throws Error{DegenerateMember} when k2 vanishes at every probe.
FamilyReport verify_family(const FamilyParams& p, int n_probe,
                           const FamilyVerifyOptions& opt = {});

} // namespace mgc
