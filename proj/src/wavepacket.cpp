#include "gravicollapse/wavepacket.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "gravicollapse/rootfind.hpp"

namespace gravicollapse {

void PacketSpec::validate() const {
    if (!(mass > 0.0)) throw std::invalid_argument("PacketSpec: mass must be > 0");
    if (!(sigma0 > 0.0)) throw std::invalid_argument("PacketSpec: sigma0 must be > 0");
}

double width(const PacketSpec& p, double t) {
    const double hbar = p.units.hbar;
    const double a = hbar * t / (2.0 * p.mass * p.sigma0 * p.sigma0);
    return p.sigma0 * std::sqrt(1.0 + a * a);
}

double density(const PacketSpec& p, double r, double t) {
    const double s = width(p, t);
    const double x = r / s;
    return std::pow(2.0 * M_PI, -1.5) / (s * s * s) * std::exp(-0.5 * x * x);
}

double free_trajectory(const PacketSpec& p, double x0, double t) {
    return x0 * width(p, t) / p.sigma0;
}

namespace {

// CDF of the radial marginal of the isotropic Gaussian (Maxwell form).
double radial_cdf(double x) {
    return std::erf(x / std::sqrt(2.0)) -
           std::sqrt(2.0 / M_PI) * x * std::exp(-0.5 * x * x);
}

}  // namespace

double radial_quantile(double u, double sigma) {
    if (u <= 0.0) return 0.0;
    // bracket: CDF(10) ~ 1 - 1e-21, beyond any representable uniform draw's gap
    double hi = 10.0;
    while (radial_cdf(hi) < u) hi *= 2.0;
    const double x = find_root([u](double v) { return radial_cdf(v) - u; },
                               0.0, hi, 1e-14);
    return sigma * x;
}

std::vector<double> sample_initial_positions(const EnsembleSpec& e) {
    e.packet.validate();
    if (e.count < 1) throw std::invalid_argument("EnsembleSpec: count must be >= 1");
    std::mt19937_64 gen(e.seed);
    std::vector<double> out;
    out.reserve(e.count);
    for (std::size_t i = 0; i < e.count; ++i) {
        // explicit 53-bit mapping so the sequence is platform-independent
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        out.push_back(radial_quantile(u, e.packet.sigma0));
    }
    return out;
}

}  // namespace gravicollapse
