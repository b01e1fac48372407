#include "mgc/vec4.hpp"

#include <cmath>
#include <cstdlib>

#include "mgc/errors.hpp"

namespace mgc {

bool Vec4::all_finite() const {
    return std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3) && std::isfinite(x4);
}

std::string_view to_string(Causal c) noexcept {
    switch (c) {
        case Causal::Spacelike: return "Spacelike";
        case Causal::Timelike:  return "Timelike";
        case Causal::Null:      return "Null";
    }
    return "?";
}

double inner(const Vec4& u, const Vec4& v) {
    return -u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3 + u.x4 * v.x4;
}

double norm(const Vec4& v) {
    return std::sqrt(std::fabs(inner(v, v)));
}

double euclid_norm(const Vec4& v) {
    return std::sqrt(v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3 + v.x4 * v.x4);
}

CausalClass classify(const Vec4& v, double tol) {
    if (tol <= 0.0) throw Error(ErrorCode::InvalidInput, "classify: tol must be > 0");
    const double q = inner(v, v);
    if (v.is_zero()) return {Causal::Spacelike, q};
    const double e2 = v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3 + v.x4 * v.x4;
    if (std::fabs(q) <= tol * std::fmax(1.0, e2)) return {Causal::Null, q};
    return {q > 0.0 ? Causal::Spacelike : Causal::Timelike, q};
}

double frame_det(const Vec4& e1, const Vec4& e2, const Vec4& e3, const Vec4& e4) {
    // Laplace expansion along the first two rows.
    auto m = [&](int i, int j) { return e1[i] * e2[j] - e1[j] * e2[i]; };
    auto n = [&](int i, int j) { return e3[i] * e4[j] - e3[j] * e4[i]; };
    return m(0, 1) * n(2, 3) - m(0, 2) * n(1, 3) + m(0, 3) * n(1, 2)
         + m(1, 2) * n(0, 3) - m(1, 3) * n(0, 2) + m(2, 3) * n(0, 1);
}

Vec4 vec4_from_string(std::string_view text) {
    Vec4 v;
    const char* p = text.data();
    const char* end = text.data() + text.size();
    for (int i = 0; i < 4; ++i) {
        char* next = nullptr;
        std::string chunk(p, end - p);
        v[i] = std::strtod(chunk.c_str(), &next);
        if (next == chunk.c_str())
            throw Error(ErrorCode::InvalidInput,
                        "expected 4 comma-separated numbers, got \"" + std::string(text) + "\"");
        p += next - chunk.c_str();
        while (p < end && (*p == ' ' || *p == '\t')) ++p;
        if (i < 3) {
            if (p >= end || *p != ',')
                throw Error(ErrorCode::InvalidInput,
                            "expected 4 comma-separated numbers, got \"" + std::string(text) + "\"");
            ++p;
        }
    }
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p != end)
        throw Error(ErrorCode::InvalidInput,
                    "trailing characters in vector \"" + std::string(text) + "\"");
    if (!v.all_finite())
        throw Error(ErrorCode::InvalidInput, "vector components must be finite");
    return v;
}

} // namespace mgc
