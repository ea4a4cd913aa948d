#include "gravicollapse/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gravicollapse {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// dense-output coefficients (Hairer/Norsett/Wanner)
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

struct DenseSegment {
    double t0, h;
    std::vector<double> r1, r2, r3, r4, r5;

    std::vector<double> eval(double t) const {
        const double theta = (t - t0) / h;
        const double theta1 = 1.0 - theta;
        std::vector<double> y(r1.size());
        for (size_t i = 0; i < y.size(); ++i) {
            y[i] = r1[i] + theta * (r2[i] + theta1 * (r3[i] +
                       theta * (r4[i] + theta1 * r5[i])));
        }
        return y;
    }
};

}  // namespace

OdeSolution integrate_ode(const OdeRhs& rhs, double t0, std::vector<double> y0,
                          const IntegratorConfig& cfg, const EventSpec* event) {
    const size_t n = y0.size();
    OdeSolution sol;
    sol.times.push_back(t0);
    sol.states.push_back(y0);

    double t = t0;
    std::vector<double> y = y0;
    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n),
        ytmp(n), ynew(n), yerr(n);
    rhs(t, y, k1);

    double g_prev = event ? event->value(t, y) : 0.0;
    if (event && ((event->direction <= 0 && g_prev <= 0.0) ||
                  (event->direction > 0 && g_prev >= 0.0))) {
        sol.event_hit = true;
        sol.event_time = t;
        sol.event_state = y;
        return sol;
    }

    // initial step: crude scale from rhs magnitude
    double h = cfg.t_max > t0 ? (cfg.t_max - t0) : 1.0;
    {
        double ynorm = 0, fnorm = 0;
        for (size_t i = 0; i < n; ++i) {
            ynorm = std::max(ynorm, std::abs(y[i]));
            fnorm = std::max(fnorm, std::abs(k1[i]));
        }
        if (fnorm > 0) h = std::min(h, 0.01 * std::max(ynorm, 1.0) / fnorm);
        h = std::max(h, 1e-8);
    }
    if (cfg.max_step > 0) h = std::min(h, cfg.max_step);

    const double t_end = cfg.t_max;
    while (t < t_end) {
        if (t + h > t_end) h = t_end - t;
        if (h <= std::abs(t) * std::numeric_limits<double>::epsilon() * 4 ||
            h < std::numeric_limits<double>::min() * 1e4) {
            std::ostringstream msg;
            msg << "step-size underflow at t=" << t;
            throw StepSizeUnderflow(t, y, msg.str());
        }

        for (size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
        rhs(t + c2 * h, ytmp, k2);
        for (size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, ytmp, k3);
        for (size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, ytmp, k4);
        for (size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] +
                                  a54 * k4[i]);
        rhs(t + c5 * h, ytmp, k5);
        for (size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                  a64 * k4[i] + a65 * k5[i]);
        rhs(t + h, ytmp, k6);
        for (size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                                  b5 * k5[i] + b6 * k6[i]);
        rhs(t + h, ynew, k7);

        double err = 0.0;
        for (size_t i = 0; i < n; ++i) {
            yerr[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                           e6 * k6[i] + e7 * k7[i]);
            const double sc = cfg.abs_tol +
                              cfg.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            const double r = yerr[i] / sc;
            err += r * r;
        }
        err = std::sqrt(err / n);

        if (err <= 1.0) {
            // accepted: build dense segment, advance
            DenseSegment seg;
            seg.t0 = t;
            seg.h = h;
            seg.r1 = y;
            seg.r2.resize(n);
            seg.r3.resize(n);
            seg.r4.resize(n);
            seg.r5.resize(n);
            for (size_t i = 0; i < n; ++i) {
                const double dy = ynew[i] - y[i];
                seg.r2[i] = dy;
                seg.r3[i] = h * k1[i] - dy;
                seg.r4[i] = dy - h * k7[i] - seg.r3[i];
                seg.r5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] +
                                 d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
            }
            const double t_new = t + h;
            if (event) {
                const double g_new = event->value(t_new, ynew);
                const bool crossed =
                    (g_prev > 0 && g_new <= 0 && event->direction <= 0) ||
                    (g_prev < 0 && g_new >= 0 && event->direction >= 0);
                if (crossed) {
                    double lo = t, hi = t_new;
                    double glo = g_prev;
                    for (int it = 0; it < 200 && (hi - lo) > 1e-12 * std::max(1.0, std::abs(hi)); ++it) {
                        const double mid = 0.5 * (lo + hi);
                        const double gm = event->value(mid, seg.eval(mid));
                        if ((glo > 0) == (gm > 0)) {
                            lo = mid;
                            glo = gm;
                        } else {
                            hi = mid;
                        }
                    }
                    sol.event_hit = true;
                    sol.event_time = hi;
                    sol.event_state = seg.eval(hi);
                    sol.times.push_back(hi);
                    sol.states.push_back(sol.event_state);
                    return sol;
                }
                g_prev = g_new;
            }
            t = t_new;
            y = ynew;
            k1 = k7;  // FSAL
            sol.times.push_back(t);
            sol.states.push_back(y);
            double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
            h *= std::clamp(fac, 0.2, 5.0);
        } else {
            h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 1.0);
        }
        if (cfg.max_step > 0) h = std::min(h, cfg.max_step);
    }
    sol.reached_t_max = true;
    return sol;
}

}  // namespace gravicollapse
