#include "mgc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mgc/errors.hpp"

namespace mgc {

namespace {

// Gauss-Kronrod 7-15 abscissas/weights on [-1,1]; the Gauss-7 nodes are
// the odd-indexed Kronrod nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    double value;
    double err;
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kronrod = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double x = h * kXgk[i];
        const double fs = f(c - x) + f(c + x);
        kronrod += kWgk[i] * fs;
        if (i % 2 == 1) gauss += kWg[i / 2] * fs;
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = kronrod * h;
    p.err = std::fabs((kronrod - gauss) * h);
    return p;
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt) {
    if (a == b) return 0.0;
    const double sign = a < b ? 1.0 : -1.0;
    const double lo = std::min(a, b), hi = std::max(a, b);

    std::vector<Panel> panels;
    panels.push_back(eval_panel(f, lo, hi));

    for (;;) {
        double total = 0.0, err = 0.0;
        size_t worst = 0;
        for (size_t i = 0; i < panels.size(); ++i) {
            total += panels[i].value;
            err += panels[i].err;
            if (panels[i].err > panels[worst].err) worst = i;
        }
        if (err <= std::max(opt.abs_tol, opt.rel_tol * std::fabs(total)))
            return sign * total;
        if (static_cast<int>(panels.size()) >= opt.max_intervals)
            throw Error(ErrorCode::NonConvergence,
                        "quadrature interval budget exhausted (" +
                            std::to_string(opt.max_intervals) + " panels)");
        Panel w = panels[worst];
        const double mid = 0.5 * (w.a + w.b);
        if (mid <= w.a || mid >= w.b)
            throw Error(ErrorCode::NonConvergence, "quadrature interval underflow");
        panels[worst] = eval_panel(f, w.a, mid);
        panels.push_back(eval_panel(f, mid, w.b));
    }
}

double gauss7(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double sum = kWg[3] * f(c);
    for (int i = 1; i < 7; i += 2)
        sum += kWg[i / 2] * (f(c - h * kXgk[i]) + f(c + h * kXgk[i]));
    return sum * h;
}

void gauss7_nodes(double a, double b, double out[7]) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    out[0] = c - h * kXgk[1];
    out[1] = c - h * kXgk[3];
    out[2] = c - h * kXgk[5];
    out[3] = c;
    out[4] = c + h * kXgk[5];
    out[5] = c + h * kXgk[3];
    out[6] = c + h * kXgk[1];
}

} // namespace mgc
