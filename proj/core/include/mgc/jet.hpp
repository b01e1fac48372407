#pragma once

#include <array>
#include <cstdint>

namespace mgc {

/// Truncated Taylor series of a scalar function of one variable at a point:
/// value plus derivatives up to order 5. Internally the coefficients are
/// stored in Taylor form (a[k] = f^(k)/k!) so that products are plain
/// convolutions; `derivative(k)` converts back. `order()` tracks how many
/// coefficients are meaningful: differentiating a jet loses one order, and
/// binary operations are valid to the smaller of the two orders.
class Jet {
public:
    static constexpr int kMaxOrder = 5;

    Jet() = default;

    /// Jet of the constant function v.
    static Jet constant(double v, int order = kMaxOrder);
    /// Jet of the identity (the parameter itself) at the point x0.
    static Jet variable(double x0, int order = kMaxOrder);
    /// Jet from Taylor coefficients c0..cn.
    static Jet from_taylor(const double* coeffs, int order);

    int order() const { return order_; }
    double value() const { return a_[0]; }
    /// k-th derivative (k <= order()).
    double derivative(int k) const;
    /// Taylor coefficient f^(k)/k!.
    double taylor(int k) const { return k <= order_ ? a_[k] : 0.0; }

    /// Jet of the derivative function; one order shorter.
    Jet derived() const;

    Jet operator-() const;
    Jet operator+(const Jet& o) const;
    Jet operator-(const Jet& o) const;
    Jet operator*(const Jet& o) const;
    Jet operator/(const Jet& o) const;

    Jet operator+(double c) const;
    Jet operator-(double c) const;
    Jet operator*(double c) const;
    Jet operator/(double c) const;

    friend Jet operator+(double c, const Jet& j) { return j + c; }
    friend Jet operator-(double c, const Jet& j) { return (-j) + c; }
    friend Jet operator*(double c, const Jet& j) { return j * c; }
    friend Jet operator/(double c, const Jet& j);

    bool all_finite() const;

private:
    friend Jet compose_series(const std::array<double, kMaxOrder + 1>& outer_taylor, const Jet& g);

    int order_ = kMaxOrder;
    std::array<double, kMaxOrder + 1> a_{};
};

// Elementary functions. Domain violations (log of a nonpositive value,
// sqrt of a negative, division by zero, |x| at exactly zero when
// derivatives are requested) throw Error{DomainError}.
Jet sin(const Jet& x);
Jet cos(const Jet& x);
Jet sinh(const Jet& x);
Jet cosh(const Jet& x);
Jet tan(const Jet& x);
Jet tanh(const Jet& x);
Jet exp(const Jet& x);
Jet log(const Jet& x);
Jet sqrt(const Jet& x);
Jet abs(const Jet& x);
/// x^p for a constant exponent. Integer exponents use repeated
/// multiplication and stay exact for polynomial input; fractional exponents
/// require x > 0.
Jet pow(const Jet& x, double p);

/// Compose the outer series (Taylor coefficients about g.value()) with g.
Jet compose_series(const std::array<double, Jet::kMaxOrder + 1>& outer_taylor, const Jet& g);

/// Invert the series s(t) = c[1] t + c[2] t^2 + ... (c[0] ignored, c[1] != 0):
/// returns Taylor coefficients d with t(s) = d[1] s + d[2] s^2 + ...
/// truncated at `order`. Used for arc-length reparametrization.
std::array<double, Jet::kMaxOrder + 1>
invert_series(const std::array<double, Jet::kMaxOrder + 1>& c, int order);

} // namespace mgc
