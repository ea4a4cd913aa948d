#ifndef GRAVICOLLAPSE_ODE_HPP
#define GRAVICOLLAPSE_ODE_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gravicollapse {

struct IntegratorConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    double max_step = 0.0;  // 0 = no cap
    double t_max = 0.0;
    double event_epsilon = 1e-9;  // event radius threshold, in units of sigma0
};

// Thrown when the adaptive step shrinks below machine resolution; carries the
// last accepted state.
struct StepSizeUnderflow : std::runtime_error {
    double t;
    std::vector<double> state;
    StepSizeUnderflow(double t_, std::vector<double> y, const std::string& what)
        : std::runtime_error(what), t(t_), state(std::move(y)) {}
};

using OdeRhs = std::function<void(double t, const std::vector<double>& y,
                                  std::vector<double>& dydt)>;

// Scalar event function; a root with the requested crossing direction stops
// the integration. direction: -1 downward, +1 upward, 0 either.
struct EventSpec {
    std::function<double(double, const std::vector<double>&)> value;
    int direction = -1;
};

struct OdeSolution {
    std::vector<double> times;
    std::vector<std::vector<double>> states;  // one entry per accepted step (plus t0 and event row)
    bool event_hit = false;
    double event_time = 0.0;
    std::vector<double> event_state;
    bool reached_t_max = false;
};

// Dormand-Prince 5(4) with dense output. The event root, if any, is located on
// the dense interpolant by bisection to ~1e-12 relative time accuracy; the
// event row is appended to the series and the integration stops there.
OdeSolution integrate_ode(const OdeRhs& rhs, double t0, std::vector<double> y0,
                          const IntegratorConfig& cfg,
                          const EventSpec* event = nullptr);

}  // namespace gravicollapse

#endif
