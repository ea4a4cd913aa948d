#include "gravicollapse/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gravicollapse {

double find_root(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, int max_iter) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0))
        throw std::invalid_argument("find_root: bracket does not change sign");
    if (std::abs(fa) < std::abs(fb)) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    double c = a, fc = fa, d = b - a;
    bool mflag = true;
    for (int i = 0; i < max_iter; ++i) {
        const double tol = rel_tol * std::max(1.0, std::abs(b));
        if (fb == 0.0 || std::abs(b - a) < tol) return b;
        double s;
        if (fa != fc && fb != fc) {
            // inverse quadratic interpolation
            s = a * fb * fc / ((fa - fb) * (fa - fc)) +
                b * fa * fc / ((fb - fa) * (fb - fc)) +
                c * fa * fb / ((fc - fa) * (fc - fb));
        } else {
            s = b - fb * (b - a) / (fb - fa);  // secant
        }
        const double lo = (3 * a + b) / 4;
        bool bad = !((s > std::min(lo, b) && s < std::max(lo, b))) ||
                   (mflag && std::abs(s - b) >= std::abs(b - c) / 2) ||
                   (!mflag && std::abs(s - b) >= std::abs(c - d) / 2) ||
                   (mflag && std::abs(b - c) < tol) ||
                   (!mflag && std::abs(c - d) < tol);
        if (bad) {
            s = 0.5 * (a + b);
            mflag = true;
        } else {
            mflag = false;
        }
        const double fs = f(s);
        d = c;
        c = b;
        fc = fb;
        if ((fa > 0) != (fs > 0)) {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
        if (std::abs(fa) < std::abs(fb)) {
            std::swap(a, b);
            std::swap(fa, fb);
        }
    }
    return b;
}

double minimize_golden(const std::function<double(double)>& f, double a, double b,
                       double rel_tol, int max_iter) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < max_iter && (b - a) > rel_tol * (std::abs(a) + std::abs(b)); ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace gravicollapse
