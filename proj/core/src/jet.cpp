#include "mgc/jet.hpp"

#include <cmath>

#include "mgc/errors.hpp"

namespace mgc {

namespace {

constexpr double kFactorial[] = {1.0, 1.0, 2.0, 6.0, 24.0, 120.0};

int clamp_order(int n) {
    if (n < 0) return 0;
    if (n > Jet::kMaxOrder) return Jet::kMaxOrder;
    return n;
}

} // namespace

Jet Jet::constant(double v, int order) {
    Jet j;
    j.order_ = clamp_order(order);
    j.a_[0] = v;
    return j;
}

Jet Jet::variable(double x0, int order) {
    Jet j;
    j.order_ = clamp_order(order);
    j.a_[0] = x0;
    if (j.order_ >= 1) j.a_[1] = 1.0;
    return j;
}

Jet Jet::from_taylor(const double* coeffs, int order) {
    Jet j;
    j.order_ = clamp_order(order);
    for (int k = 0; k <= j.order_; ++k) j.a_[k] = coeffs[k];
    return j;
}

double Jet::derivative(int k) const {
    if (k < 0 || k > order_)
        throw Error(ErrorCode::InvalidInput, "jet derivative order out of range");
    return a_[k] * kFactorial[k];
}

Jet Jet::derived() const {
    Jet j;
    j.order_ = order_ > 0 ? order_ - 1 : 0;
    for (int k = 0; k <= j.order_; ++k) j.a_[k] = a_[k + 1] * (k + 1);
    if (order_ == 0) j.a_[0] = 0.0;
    return j;
}

Jet Jet::operator-() const {
    Jet j = *this;
    for (int k = 0; k <= order_; ++k) j.a_[k] = -j.a_[k];
    return j;
}

Jet Jet::operator+(const Jet& o) const {
    Jet j;
    j.order_ = order_ < o.order_ ? order_ : o.order_;
    for (int k = 0; k <= j.order_; ++k) j.a_[k] = a_[k] + o.a_[k];
    return j;
}

Jet Jet::operator-(const Jet& o) const {
    Jet j;
    j.order_ = order_ < o.order_ ? order_ : o.order_;
    for (int k = 0; k <= j.order_; ++k) j.a_[k] = a_[k] - o.a_[k];
    return j;
}

Jet Jet::operator*(const Jet& o) const {
    Jet j;
    j.order_ = order_ < o.order_ ? order_ : o.order_;
    for (int k = 0; k <= j.order_; ++k) {
        double s = 0.0;
        for (int i = 0; i <= k; ++i) s += a_[i] * o.a_[k - i];
        j.a_[k] = s;
    }
    return j;
}

Jet Jet::operator/(const Jet& o) const {
    if (o.a_[0] == 0.0)
        throw Error(ErrorCode::DomainError, "division by zero");
    Jet j;
    j.order_ = order_ < o.order_ ? order_ : o.order_;
    for (int k = 0; k <= j.order_; ++k) {
        double s = a_[k];
        for (int i = 1; i <= k; ++i) s -= o.a_[i] * j.a_[k - i];
        j.a_[k] = s / o.a_[0];
    }
    return j;
}

Jet Jet::operator+(double c) const {
    Jet j = *this;
    j.a_[0] += c;
    return j;
}

Jet Jet::operator-(double c) const {
    Jet j = *this;
    j.a_[0] -= c;
    return j;
}

Jet Jet::operator*(double c) const {
    Jet j = *this;
    for (int k = 0; k <= order_; ++k) j.a_[k] *= c;
    return j;
}

Jet Jet::operator/(double c) const {
    if (c == 0.0) throw Error(ErrorCode::DomainError, "division by zero");
    Jet j = *this;
    for (int k = 0; k <= order_; ++k) j.a_[k] /= c;
    return j;
}

Jet operator/(double c, const Jet& j) {
    return Jet::constant(c, j.order()) / j;
}

bool Jet::all_finite() const {
    for (int k = 0; k <= order_; ++k)
        if (!std::isfinite(a_[k])) return false;
    return true;
}

Jet compose_series(const std::array<double, Jet::kMaxOrder + 1>& outer_taylor, const Jet& g) {
    // Horner evaluation of the outer polynomial in (g - g0), truncated.
    const int n = g.order_;
    Jet d = g;
    d.a_[0] = 0.0;
    Jet r = Jet::constant(outer_taylor[n], n);
    for (int k = n - 1; k >= 0; --k) {
        r = r * d;
        r.a_[0] += outer_taylor[k];
    }
    return r;
}

namespace {

/// Evaluate f with all derivatives of a cyclic family (sin/cos style) and
/// compose with the argument jet.
Jet compose_table(const Jet& x, const double (&cycle)[4]) {
    std::array<double, Jet::kMaxOrder + 1> t{};
    for (int k = 0; k <= x.order(); ++k) t[k] = cycle[k % 4] / kFactorial[k];
    return compose_series(t, x);
}

} // namespace

Jet sin(const Jet& x) {
    const double s = std::sin(x.value()), c = std::cos(x.value());
    const double cycle[4] = {s, c, -s, -c};
    return compose_table(x, cycle);
}

Jet cos(const Jet& x) {
    const double s = std::sin(x.value()), c = std::cos(x.value());
    const double cycle[4] = {c, -s, -c, s};
    return compose_table(x, cycle);
}

Jet sinh(const Jet& x) {
    const double sh = std::sinh(x.value()), ch = std::cosh(x.value());
    std::array<double, Jet::kMaxOrder + 1> t{};
    for (int k = 0; k <= x.order(); ++k) t[k] = (k % 2 == 0 ? sh : ch) / kFactorial[k];
    return compose_series(t, x);
}

Jet cosh(const Jet& x) {
    const double sh = std::sinh(x.value()), ch = std::cosh(x.value());
    std::array<double, Jet::kMaxOrder + 1> t{};
    for (int k = 0; k <= x.order(); ++k) t[k] = (k % 2 == 0 ? ch : sh) / kFactorial[k];
    return compose_series(t, x);
}

Jet tan(const Jet& x) {
    Jet c = cos(x);
    if (c.value() == 0.0)
        throw Error(ErrorCode::DomainError, "tan at a pole");
    return sin(x) / c;
}

Jet tanh(const Jet& x) {
    return sinh(x) / cosh(x);
}

Jet exp(const Jet& x) {
    const double e = std::exp(x.value());
    std::array<double, Jet::kMaxOrder + 1> t{};
    for (int k = 0; k <= x.order(); ++k) t[k] = e / kFactorial[k];
    return compose_series(t, x);
}

Jet log(const Jet& x) {
    const double v = x.value();
    if (v <= 0.0)
        throw Error(ErrorCode::DomainError, "log of a nonpositive value");
    std::array<double, Jet::kMaxOrder + 1> t{};
    t[0] = std::log(v);
    // d^k log = (-1)^(k-1) (k-1)! / v^k
    double pk = 1.0;
    for (int k = 1; k <= x.order(); ++k) {
        pk *= v;
        t[k] = ((k - 1) % 2 == 0 ? 1.0 : -1.0) / (k * pk);
    }
    return compose_series(t, x);
}

Jet sqrt(const Jet& x) {
    const double v = x.value();
    if (v < 0.0)
        throw Error(ErrorCode::DomainError, "sqrt of a negative value");
    if (v == 0.0 && x.order() > 0)
        throw Error(ErrorCode::DomainError, "sqrt not differentiable at zero");
    return pow(x, 0.5);
}

Jet abs(const Jet& x) {
    const double v = x.value();
    if (v == 0.0 && x.order() > 0)
        throw Error(ErrorCode::DomainError, "abs not differentiable at zero");
    return v < 0.0 ? -x : x;
}

Jet pow(const Jet& x, double p) {
    const double v = x.value();

    // Integer exponents: exact repeated multiplication.
    if (p == std::floor(p) && std::fabs(p) <= 64.0) {
        long n = static_cast<long>(p);
        if (n == 0) return Jet::constant(1.0, x.order());
        bool inv = n < 0;
        if (inv) n = -n;
        Jet r = Jet::constant(1.0, x.order());
        Jet base = x;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        if (inv) {
            if (v == 0.0)
                throw Error(ErrorCode::DomainError, "division by zero in negative power");
            r = Jet::constant(1.0, x.order()) / r;
        }
        return r;
    }

    if (v <= 0.0)
        throw Error(ErrorCode::DomainError, "fractional power of a nonpositive value");
    std::array<double, Jet::kMaxOrder + 1> t{};
    // d^k x^p = p (p-1) ... (p-k+1) x^(p-k)
    double coeff = 1.0;
    for (int k = 0; k <= x.order(); ++k) {
        t[k] = coeff * std::pow(v, p - k) / kFactorial[k];
        coeff *= (p - k);
    }
    return compose_series(t, x);
}

std::array<double, Jet::kMaxOrder + 1>
invert_series(const std::array<double, Jet::kMaxOrder + 1>& c, int order) {
    if (c[1] == 0.0)
        throw Error(ErrorCode::DomainError, "series inversion requires a nonzero linear term");
    std::array<double, Jet::kMaxOrder + 1> d{};
    d[1] = 1.0 / c[1];
    // Solve coefficient by coefficient: [s^m] c(d(s)) must vanish for m >= 2.
    for (int m = 2; m <= order; ++m) {
        // Compose with the terms found so far (d[m] = 0).
        std::array<double, Jet::kMaxOrder + 1> comp{};
        std::array<double, Jet::kMaxOrder + 1> power{};
        power[0] = 1.0; // d(s)^0
        for (int k = 1; k <= m; ++k) {
            // power <- power * d (truncated at m)
            std::array<double, Jet::kMaxOrder + 1> next{};
            for (int i = 0; i <= m; ++i) {
                if (power[i] == 0.0) continue;
                for (int j = 1; i + j <= m; ++j) next[i + j] += power[i] * d[j];
            }
            power = next;
            for (int i = 0; i <= m; ++i) comp[i] += c[k] * power[i];
        }
        d[m] = -comp[m] / c[1];
    }
    return d;
}

} // namespace mgc
