#pragma once

#include <functional>

namespace mgc {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_intervals = 10000;
};

/// Adaptive Gauss-Kronrod (7-15) integration with interval bisection.
/// Throws Error{NonConvergence} when the interval budget is exhausted.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt = {});

/// Single 7-point Gauss-Legendre panel on [a,b]; exact for degree <= 13.
double gauss7(const std::function<double(double)>& f, double a, double b);

/// The 7 Gauss-Legendre abscissas mapped to [a,b] (for callers that probe
/// integrand validity on the same nodes the rule uses).
void gauss7_nodes(double a, double b, double out[7]);

} // namespace mgc
