#ifndef GRAVICOLLAPSE_WAVEPACKET_HPP
#define GRAVICOLLAPSE_WAVEPACKET_HPP

#include <cstdint>
#include <vector>

#include "gravicollapse/units.hpp"

namespace gravicollapse {

// The two physical degrees of freedom of every computation: particle mass m
// and initial packet width sigma0, in the chosen unit system.
struct PacketSpec {
    double mass;
    double sigma0;
    UnitSystem units = UnitSystem::planck();

    void validate() const;  // throws std::invalid_argument on non-positive inputs
};

struct EnsembleSpec {
    PacketSpec packet;
    std::size_t count;
    std::uint64_t seed;
};

// sigma(t) = sigma0 * sqrt(1 + hbar^2 t^2 / (4 m^2 sigma0^4))
double width(const PacketSpec& p, double t);

// isotropic probability density (2 pi)^{-3/2} sigma(t)^{-3} exp(-r^2/2 sigma(t)^2)
double density(const PacketSpec& p, double r, double t);

// exact free pilot-wave trajectory x0 * sigma(t)/sigma0
double free_trajectory(const PacketSpec& p, double x0, double t);

// Radial initial positions drawn from 4 pi r^2 rho(r,0) by inverse-CDF on the
// radial marginal (deterministic under a fixed seed).
std::vector<double> sample_initial_positions(const EnsembleSpec& e);

// Inverse of the radial CDF erf(x/sqrt2) - sqrt(2/pi) x exp(-x^2/2), x = r/sigma.
double radial_quantile(double u, double sigma);

}  // namespace gravicollapse

#endif
