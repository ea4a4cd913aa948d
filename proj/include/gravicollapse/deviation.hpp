#ifndef GRAVICOLLAPSE_DEVIATION_HPP
#define GRAVICOLLAPSE_DEVIATION_HPP

#include <vector>

#include "gravicollapse/fields.hpp"
#include "gravicollapse/ode.hpp"

namespace gravicollapse {

struct DeviationState {
    double t;
    double xi;
    double xi_dot;
};

// Omega = -(lapQ/3m + 4 pi G m rho/3), split into its two parts. For the
// Gaussian packet quantum_part >= 0 (lapQ < 0) and gravity_part <= 0 always.
struct OmegaValue {
    double omega;
    double quantum_part;  // -lapQ/(3m) = hbar^2/(4 m^2 sigma^4)
    double gravity_part;  // -(4 pi G m/3) rho(r)
};

OmegaValue omega(const PacketSpec& p, double r, double sigma);

enum class DeviationRegime { Transition, QuantumDominant, GravityDominant, Full };

// xi'' = Omega xi with the regime selecting which parts of Omega are kept.
// Coefficients are frozen at the reference radius r=0 and sigma=sigma0 (the
// paper's r ~ 0 evaluation); Transition is returned in closed form,
// xi(t) = xi_dot0 t + xi0.
std::vector<DeviationState> integrate_deviation(const PacketSpec& p,
                                                DeviationRegime regime,
                                                double xi0, double xi_dot0,
                                                double t_end,
                                                const IntegratorConfig& ic = {});

// Same equation with Omega evaluated along a concurrently integrated radial
// trajectory of the full (quantum + gravity) force law, starting from r0 at rest.
std::vector<DeviationState> integrate_deviation_coupled(
    const PacketSpec& p, double r0, double xi0, double xi_dot0, double t_end,
    const IntegratorConfig& ic = {});

}  // namespace gravicollapse

#endif
