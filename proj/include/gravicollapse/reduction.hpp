#ifndef GRAVICOLLAPSE_REDUCTION_HPP
#define GRAVICOLLAPSE_REDUCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "gravicollapse/fields.hpp"
#include "gravicollapse/ode.hpp"

namespace gravicollapse {

struct RadialState {
    double t;
    double r;
    double u;
};

enum class WidthMode { FrozenWidth, SpreadingWidth };

const char* width_mode_name(WidthMode m);

// Policy for <u^2> in the ensemble-average reduction time. Envelope drops the
// e^{-r0^2/2 sigma0^2} anchor term (r0 >> sigma0 limit), giving
// <u^2> = (1/sqrt(pi)) G m/sigma0; FixedR0 anchors at r0 = sigma0 and
// integrates over [0, sigma0] where u^2 stays non-negative.
enum class AveragePolicy { Envelope, FixedR0 };

struct ReductionResult {
    double fall_time_numeric = 0.0;
    double tau_width_formula;  // (sigma0^3/(G m))^{1/2}
    double tau_mass_formula;   // hbar^3/(G^2 m^5)
    double tau_dp;             // hbar/|U_g(sigma0) - U_g(0)|
    double tau_avg;            // sigma0/sqrt(<u^2>)
    std::vector<RadialState> series;
    WidthMode mode = WidthMode::FrozenWidth;
    bool validity_flag = false;  // hbar^2 t^2/(4 m^2 sigma0^4) < 0.1 at fall time
};

// Thrown when no center crossing occurs before t_max; carries the final state.
struct NoCrossingError : std::runtime_error {
    RadialState final_state;
    NoCrossingError(const RadialState& s, const std::string& what)
        : std::runtime_error(what), final_state(s) {}
};

struct QuantumTrajectory {
    std::vector<RadialState> series;
    bool truncated = false;  // t_max reached before any natural stop
};

// r'' = hbar^2 r / (4 m^2 sigma(t)^4), the repulsive quantum-dominant motion.
QuantumTrajectory integrate_quantum_dominant(const PacketSpec& p, double r0,
                                             double u0,
                                             const IntegratorConfig& ic);

// r'' = -sqrt(2/pi) (G m / sigma^3) r e^{-r^2/2 sigma^2}; the fall time is the
// first crossing of r = event_epsilon * sigma0, located by bisection on the
// dense output.
ReductionResult integrate_gravity_dominant(const PacketSpec& p, double r0,
                                           double u0, WidthMode mode,
                                           const IntegratorConfig& ic);

// Infall speed from the frozen-width first integral with u(r0) = 0; negative.
// Throws std::domain_error for r > r0.
double velocity_field(const PacketSpec& p, double r, double r0);

// Time of flight from sigma0 down to r via the quartic expansion of the first
// integral: u^2 = (1/4) sqrt(2/pi) (G m/sigma0^3) (sigma0^2 - r^2)(3 - r^2/sigma0^2).
// The square-root endpoint at r' = sigma0 is removed by the substitution
// r' = sigma0 cos(theta). Valid on 0 <= r <= sigma0.
double time_of_flight_elliptic(const PacketSpec& p, double r,
                               const QuadratureConfig& cfg = {});

// r(t) = sigma0 cos[ sqrt2 (2/pi)^{1/4} (G m/sigma0^3)^{1/2} t ], small-t model.
double arccos_model(const PacketSpec& p, double t);

// companion parabolic fall r(t) = sigma0 - (1/2) g_psi t^2
double parabolic_model(const PacketSpec& p, double t);

// self-gravitational acceleration g_psi = G m / sigma0^2
double g_psi(const PacketSpec& p);

// Analytic tau fields only (series empty, fall_time_numeric 0).
ReductionResult reduction_times(const PacketSpec& p,
                                AveragePolicy policy = AveragePolicy::Envelope);

struct SweepRow {
    double mass;
    std::optional<ReductionResult> result;
    std::string error;  // non-empty when the row's integration failed
};

// One FrozenWidth reduction per mass, r0 = sigma0, u0 = 0. Rows are
// independent; workers > 1 fans them out, with results in input order.
std::vector<SweepRow> mass_sweep(const std::vector<double>& masses,
                                 double sigma0, const UnitSystem& units,
                                 const IntegratorConfig& ic,
                                 unsigned workers = 1);

}  // namespace gravicollapse

#endif
