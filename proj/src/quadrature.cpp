#include "gravicollapse/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gravicollapse {

namespace {

// Gauss-Kronrod 15-point nodes/weights on [-1,1]; the embedded 7-point Gauss
// rule uses the even-indexed Kronrod nodes.
constexpr double kNodes[15] = {
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

constexpr double kWeightsK[15] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

constexpr double kWeightsG[7] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double kronrod = 0.0, gauss = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double fx = f(mid + half * kNodes[i]);
        kronrod += kWeightsK[i] * fx;
        if (i % 2 == 1) gauss += kWeightsG[i / 2] * fx;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureConfig& cfg) {
    std::priority_queue<Panel> panels;
    Panel whole = evaluate_panel(f, a, b);
    double total = whole.value;
    double total_err = whole.error;
    panels.push(whole);
    int subdivisions = 0;
    while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)) &&
           subdivisions < cfg.max_subdivisions) {
        Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++subdivisions;
    }
    if (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
        std::ostringstream msg;
        msg << "quadrature did not converge: achieved error estimate " << total_err
            << " after " << subdivisions << " subdivisions";
        throw std::runtime_error(msg.str());
    }
    return {total, total_err, subdivisions};
}

}  // namespace gravicollapse
