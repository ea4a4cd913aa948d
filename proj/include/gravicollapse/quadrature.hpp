#ifndef GRAVICOLLAPSE_QUADRATURE_HPP
#define GRAVICOLLAPSE_QUADRATURE_HPP

#include <functional>

namespace gravicollapse {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 200;
    double upper_cutoff = 12.0;  // in multiples of sigma; Gaussian tail mass < 1e-30
};

struct QuadratureResult {
    double value;
    double error_estimate;
    int subdivisions;
};

// Adaptive Gauss-Kronrod 15(7) on a finite interval. Throws std::runtime_error
// (carrying the achieved error estimate) if the tolerance is not met within
// the subdivision budget.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureConfig& cfg = {});

}  // namespace gravicollapse

#endif
