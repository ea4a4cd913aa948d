#include "gravicollapse/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace gravicollapse {

double quantum_potential(const PacketSpec& p, double r, double sigma) {
    const double h2 = p.units.hbar * p.units.hbar;
    return h2 * (6.0 * sigma * sigma - r * r) /
           (8.0 * p.mass * sigma * sigma * sigma * sigma);
}

double quantum_force(const PacketSpec& p, double r, double sigma) {
    const double h2 = p.units.hbar * p.units.hbar;
    return h2 * r / (4.0 * p.mass * sigma * sigma * sigma * sigma);
}

double gravity_potential(const PacketSpec& p, double r, double sigma) {
    const double x = r / sigma;
    return -std::sqrt(2.0 / M_PI) * p.units.G * p.mass * p.mass / sigma *
           std::exp(-0.5 * x * x);
}

double gravity_force(const PacketSpec& p, double r, double sigma) {
    const double x = r / sigma;
    return -std::sqrt(2.0 / M_PI) * p.units.G * p.mass * p.mass /
           (sigma * sigma * sigma) * r * std::exp(-0.5 * x * x);
}

double gravity_potential_newtonian(const PacketSpec& p, double r, double sigma) {
    const double gm2 = p.units.G * p.mass * p.mass;
    if (r == 0.0) return -gm2 * std::sqrt(2.0 / M_PI) / sigma;  // r->0 limit
    return -gm2 * std::erf(r / (std::sqrt(2.0) * sigma)) / r;
}

double laplacian_Q(const PacketSpec& p, double sigma) {
    const double h2 = p.units.hbar * p.units.hbar;
    return -3.0 * h2 / (4.0 * p.mass * sigma * sigma * sigma * sigma);
}

FieldSample sample_fields(const PacketSpec& p, double r, double sigma) {
    return {r,
            quantum_potential(p, r, sigma),
            quantum_force(p, r, sigma),
            gravity_potential(p, r, sigma),
            gravity_force(p, r, sigma),
            laplacian_Q(p, sigma)};
}

FieldAverage average(FieldKind kind, const PacketSpec& p,
                     const QuadratureConfig& cfg) {
    p.validate();
    const double s = p.sigma0;
    const double h2 = p.units.hbar * p.units.hbar;
    const double gm2 = p.units.G * p.mass * p.mass;

    auto field = [&](double r) {
        switch (kind) {
            case FieldKind::Q: return quantum_potential(p, r, s);
            case FieldKind::Ug: return gravity_potential(p, r, s);
            case FieldKind::Fq: return quantum_force(p, r, s);
            case FieldKind::Fg: return gravity_force(p, r, s);
        }
        throw std::invalid_argument("average: unknown field kind");
    };

    // integrate in x = r/sigma so tolerances are scale-free over wide (m, sigma0)
    auto integrand = [&](double x) {
        const double r = x * s;
        const double rho = std::pow(2.0 * M_PI, -1.5) / (s * s * s) *
                           std::exp(-0.5 * x * x);
        return rho * field(r) * 4.0 * M_PI * r * r * s;  // dr = s dx
    };
    const double quad = integrate(integrand, 0.0, cfg.upper_cutoff, cfg).value;

    double closed = 0.0, rounded = 0.0;
    switch (kind) {
        case FieldKind::Q:
            closed = 3.0 * h2 / (8.0 * p.mass * s * s);
            rounded = h2 / (p.mass * s * s);
            break;
        case FieldKind::Ug:
            closed = -gm2 / (2.0 * std::sqrt(M_PI) * s);
            rounded = -gm2 / s;
            break;
        case FieldKind::Fq:
            closed = 0.5 * std::sqrt(2.0 / M_PI) * h2 / (p.mass * s * s * s);
            rounded = h2 / (p.mass * s * s * s);
            break;
        case FieldKind::Fg:
            closed = -gm2 / (M_PI * s * s);
            rounded = -gm2 / (s * s);
            break;
    }
    return {quad, closed, rounded};
}

}  // namespace gravicollapse
