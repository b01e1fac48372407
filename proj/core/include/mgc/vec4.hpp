#pragma once

#include <array>
#include <string>
#include <string_view>

namespace mgc {

/// A point / vector of E_1^4 under the flat metric of signature (-,+,+,+).
struct Vec4 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
    double x4 = 0.0;

    double& operator[](int i) { return (&x1)[i]; }
    double operator[](int i) const { return (&x1)[i]; }

    Vec4 operator+(const Vec4& o) const { return {x1 + o.x1, x2 + o.x2, x3 + o.x3, x4 + o.x4}; }
    Vec4 operator-(const Vec4& o) const { return {x1 - o.x1, x2 - o.x2, x3 - o.x3, x4 - o.x4}; }
    Vec4 operator*(double a) const { return {a * x1, a * x2, a * x3, a * x4}; }
    Vec4 operator-() const { return {-x1, -x2, -x3, -x4}; }

    bool is_zero() const { return x1 == 0.0 && x2 == 0.0 && x3 == 0.0 && x4 == 0.0; }
    bool all_finite() const;
};

inline Vec4 operator*(double a, const Vec4& v) { return v * a; }

enum class Causal { Spacelike, Timelike, Null };

std::string_view to_string(Causal c) noexcept;

/// Causal character of a vector together with the raw quadratic form value
/// q = <v,v> that decided it.
struct CausalClass {
    Causal kind;
    double q;
};

/// The flat metric: -u1*v1 + u2*v2 + u3*v3 + u4*v4. The summation order is
/// fixed (x1 term first) so results are reproducible across call sites.
double inner(const Vec4& u, const Vec4& v);

/// sqrt(|inner(v,v)|). Zero for null vectors.
double norm(const Vec4& v);

/// Euclidean norm of the components; used only for tolerance scaling.
double euclid_norm(const Vec4& v);

/// Classify v as spacelike / timelike / null. The null band is relative:
/// |q| <= tol * max(1, euclidean |v|^2), so the class is stable under
/// uniform rescaling of the data. The zero vector is spacelike.
CausalClass classify(const Vec4& v, double tol = 1e-9);

/// Ordinary determinant of the 4x4 matrix with rows e1..e4 (no metric
/// factors).
double frame_det(const Vec4& e1, const Vec4& e2, const Vec4& e3, const Vec4& e4);

/// Parse a comma-separated 4-tuple such as "1,0,0,2".
Vec4 vec4_from_string(std::string_view text);

} // namespace mgc
