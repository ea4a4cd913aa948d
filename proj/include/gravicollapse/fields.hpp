#ifndef GRAVICOLLAPSE_FIELDS_HPP
#define GRAVICOLLAPSE_FIELDS_HPP

#include "gravicollapse/quadrature.hpp"
#include "gravicollapse/wavepacket.hpp"

namespace gravicollapse {

// Closed-form fields of the (optionally frozen-width) Gaussian packet.
// The self-gravity potential is gauge-fixed to vanish at infinity,
//   U_g(r) = -sqrt(2/pi) (G m^2 / sigma) exp(-r^2/2 sigma^2),
// the unique negative form whose radial gradient reproduces the force
//   f_g(r) = -sqrt(2/pi) (G m^2 / sigma^3) r exp(-r^2/2 sigma^2).
// The implied average <U_g> = -(1/(2 sqrt(pi))) G m^2/sigma0 is therefore
// model-dependent (only its order of magnitude is fixed by the physics).

struct FieldSample {
    double r;
    double Q;      // quantum potential
    double f_q;    // quantum force (radially outward, >= 0)
    double U_g;    // self-gravity potential (<= 0)
    double f_g;    // self-gravity force (<= 0)
    double lapQ;   // Laplacian of Q (r-independent)
};

// hbar^2 (6 sigma^2 - r^2) / (8 m sigma^4)
double quantum_potential(const PacketSpec& p, double r, double sigma);

// +hbar^2 r / (4 m sigma^4)
double quantum_force(const PacketSpec& p, double r, double sigma);

double gravity_potential(const PacketSpec& p, double r, double sigma);

double gravity_force(const PacketSpec& p, double r, double sigma);

// True Newtonian potential of the Gaussian ball, -G m^2 erf(r/(sqrt2 sigma))/r;
// comparison field only, the model dynamics uses gravity_potential.
double gravity_potential_newtonian(const PacketSpec& p, double r, double sigma);

// -3 hbar^2 / (4 m sigma^4), independent of r
double laplacian_Q(const PacketSpec& p, double sigma);

FieldSample sample_fields(const PacketSpec& p, double r, double sigma);

enum class FieldKind { Q, Ug, Fq, Fg };

struct FieldAverage {
    double quadrature;   // \int_0^inf rho(r) field(r) 4 pi r^2 dr
    double closed_form;  // exact prefactor expression
    double rounded;      // the paper-style order-of-magnitude estimate
};

// Stationary (sigma = sigma0) ensemble average of a field, both by adaptive
// quadrature and in closed form. The two must agree to ~10x the quadrature
// tolerance; callers may assert that.
FieldAverage average(FieldKind kind, const PacketSpec& p,
                     const QuadratureConfig& cfg = {});

}  // namespace gravicollapse

#endif
