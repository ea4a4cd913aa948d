#ifndef GRAVICOLLAPSE_ROOTFIND_HPP
#define GRAVICOLLAPSE_ROOTFIND_HPP

#include <functional>

namespace gravicollapse {

// Brent's method on a sign-changing bracket [a,b]. Throws std::invalid_argument
// if f(a) and f(b) have the same sign.
double find_root(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-14, int max_iter = 200);

// Golden-section search for the minimum of a unimodal f on [a,b].
double minimize_golden(const std::function<double(double)>& f, double a, double b,
                       double rel_tol = 1e-10, int max_iter = 300);

}  // namespace gravicollapse

#endif
