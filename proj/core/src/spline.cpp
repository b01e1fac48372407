#include "mgc/spline.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "mgc/errors.hpp"

namespace mgc {

namespace {

int find_segment(const std::vector<double>& t, double x) {
    if (x < t.front() - 1e-12 * std::fmax(1.0, std::fabs(x)) ||
        x > t.back() + 1e-12 * std::fmax(1.0, std::fabs(x)))
        throw Error(ErrorCode::OutOfRange, "parameter outside spline domain");
    auto it = std::upper_bound(t.begin(), t.end(), x);
    int i = static_cast<int>(it - t.begin()) - 1;
    if (i < 0) i = 0;
    if (i > static_cast<int>(t.size()) - 2) i = static_cast<int>(t.size()) - 2;
    return i;
}

/// Jet of a polynomial with coefficients c[0..deg] in the local variable,
/// evaluated at local offset x.
Jet poly_jet(const double* c, int deg, double x, int order) {
    std::array<double, Jet::kMaxOrder + 1> taylor{};
    // Shift the polynomial to the evaluation point: Horner for each
    // derivative order, done via repeated synthetic division.
    std::array<double, 8> work{};
    for (int i = 0; i <= deg; ++i) work[i] = c[i];
    for (int k = 0; k <= order && k <= deg; ++k) {
        // Synthetic division by (X - x); the remainder is the k-th Taylor
        // coefficient at x.
        for (int i = deg - 1; i >= k; --i) work[i] += x * work[i + 1];
        taylor[k] = work[k];
    }
    return Jet::from_taylor(taylor.data(), order);
}

} // namespace

SplineCurve::SplineCurve(std::vector<double> t, std::array<std::vector<double>, 4> values,
                         std::string param)
    : t_(std::move(t)), y_(std::move(values)), param_(std::move(param)) {
    const size_t n = t_.size();
    if (n < 3)
        throw Error(ErrorCode::InvalidInput, "spline needs at least 3 samples");
    for (size_t i = 1; i < n; ++i)
        if (!(t_[i] > t_[i - 1]))
            throw Error(ErrorCode::InvalidInput, "spline abscissas must increase strictly");
    for (const auto& comp : y_)
        if (comp.size() != n)
            throw Error(ErrorCode::InvalidInput, "spline component length mismatch");

    // Natural cubic: tridiagonal solve for knot second derivatives.
    for (int c = 0; c < 4; ++c) {
        const std::vector<double>& y = y_[c];
        std::vector<double> a(n, 0.0), b(n, 0.0), rhs(n, 0.0), m(n, 0.0);
        std::vector<double> diag(n, 1.0);
        for (size_t i = 1; i + 1 < n; ++i) {
            const double hl = t_[i] - t_[i - 1];
            const double hr = t_[i + 1] - t_[i];
            a[i] = hl / 6.0;
            diag[i] = (hl + hr) / 3.0;
            b[i] = hr / 6.0;
            rhs[i] = (y[i + 1] - y[i]) / hr - (y[i] - y[i - 1]) / hl;
        }
        // forward elimination (natural BC: m[0] = m[n-1] = 0)
        for (size_t i = 2; i + 1 < n; ++i) {
            const double w = a[i] / diag[i - 1];
            diag[i] -= w * b[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        for (size_t k = n - 2; k >= 1; --k) {
            const double upper = (k + 2 < n) ? b[k] * m[k + 1] : 0.0;
            m[k] = (rhs[k] - upper) / diag[k];
            if (k == 1) break;
        }
        m_[c] = std::move(m);
        for (double v : y) scale_ = std::fmax(scale_, std::fabs(v));
    }
}

VecJet SplineCurve::jets(double x, int order) const {
    const int i = find_segment(t_, x);
    const double h = t_[i + 1] - t_[i];
    VecJet out;
    for (int c = 0; c < 4; ++c) {
        const double y0 = y_[c][i], y1 = y_[c][i + 1];
        const double m0 = m_[c][i], m1 = m_[c][i + 1];
        // cubic in local variable z = x - t_i:
        // y = y0 + b z + m0/2 z^2 + (m1-m0)/(6h) z^3
        const double coeffs[4] = {
            y0,
            (y1 - y0) / h - h * (2.0 * m0 + m1) / 6.0,
            m0 / 2.0,
            (m1 - m0) / (6.0 * h),
        };
        out[c] = poly_jet(coeffs, 3, x - t_[i], order);
    }
    return out;
}

HermiteCurve::HermiteCurve(std::vector<Node> nodes, std::string param)
    : nodes_(std::move(nodes)), param_(std::move(param)) {
    const size_t n = nodes_.size();
    if (n < 2)
        throw Error(ErrorCode::InvalidInput, "hermite curve needs at least 2 nodes");
    for (size_t i = 1; i < n; ++i)
        if (!(nodes_[i].t > nodes_[i - 1].t))
            throw Error(ErrorCode::InvalidInput, "hermite abscissas must increase strictly");

    seg_.resize(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
        const Node& l = nodes_[i];
        const Node& r = nodes_[i + 1];
        const double d = r.t - l.t;
        for (int c = 0; c < 4; ++c) {
            const double v0 = l.value[c], d10 = l.d1[c], d20 = l.d2[c];
            const double v1 = r.value[c], d11 = r.d1[c], d21 = r.d2[c];
            const double a0 = v0, a1 = d10, a2 = 0.5 * d20;
            const double r0 = v1 - (a0 + a1 * d + a2 * d * d);
            const double r1 = d11 - (a1 + 2.0 * a2 * d);
            const double r2 = d21 - 2.0 * a2;
            const double d2s = d * d, d3 = d2s * d, d4 = d3 * d, d5 = d4 * d;
            seg_[i][c] = {a0,
                          a1,
                          a2,
                          (10.0 * r0 - 4.0 * r1 * d + 0.5 * r2 * d2s) / d3,
                          (-15.0 * r0 + 7.0 * r1 * d - r2 * d2s) / d4,
                          (6.0 * r0 - 3.0 * r1 * d + 0.5 * r2 * d2s) / d5};
        }
        scale_ = std::fmax(scale_, euclid_norm(nodes_[i].value));
    }
    scale_ = std::fmax(scale_, euclid_norm(nodes_.back().value));
    knots_.reserve(nodes_.size());
    for (const Node& node : nodes_) knots_.push_back(node.t);
}

VecJet HermiteCurve::jets(double x, int order) const {
    const int i = find_segment(knots_, x);
    VecJet out;
    for (int c = 0; c < 4; ++c)
        out[c] = poly_jet(seg_[i][c].data(), 5, x - nodes_[i].t, order);
    return out;
}

} // namespace mgc
