#include "gravicollapse/criterion.hpp"

#include <cassert>
#include <cmath>

#include "gravicollapse/rootfind.hpp"

namespace gravicollapse {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::QuantumDominant: return "quantum-dominant";
        case Regime::Transition: return "transition";
        case Regime::GravityDominant: return "gravity-dominant";
    }
    return "unknown";
}

double critical_width(double m, const UnitSystem& u) {
    return u.hbar * u.hbar / (u.G * m * m * m);
}

double critical_mass(double sigma0, const UnitSystem& u) {
    return std::cbrt(u.hbar * u.hbar / (u.G * sigma0));
}

double width_by_force_balance(double m, const UnitSystem& u) {
    const double scale = critical_width(m, u);
    auto net = [&](double sigma) {
        const double h2 = u.hbar * u.hbar;
        const double fq = 0.5 * std::sqrt(2.0 / M_PI) * h2 / (m * sigma * sigma * sigma);
        const double fg = -u.G * m * m / (M_PI * sigma * sigma);
        return fq + fg;
    };
    // net > 0 below the balance width, < 0 above; bracket around the scale
    const double lo = 0.1 * scale, hi = 10.0 * scale;
    assert(net(lo) > 0 && net(hi) < 0);
    return find_root(net, lo, hi, 1e-14);
}

double mean_energy(double m, const UnitSystem& u, double sigma) {
    const double h2 = u.hbar * u.hbar;
    return 3.0 * h2 / (8.0 * m * sigma * sigma) -
           u.G * m * m / (2.0 * std::sqrt(M_PI) * sigma);
}

double width_by_energy_min(double m, const UnitSystem& u,
                           const QuadratureConfig& /*cfg*/) {
    const double scale = critical_width(m, u);
    const double h2 = u.hbar * u.hbar;
    auto dE = [&](double sigma) {
        return -3.0 * h2 / (4.0 * m * sigma * sigma * sigma) +
               u.G * m * m / (2.0 * std::sqrt(M_PI) * sigma * sigma);
    };
    const double lo = 0.1 * scale, hi = 30.0 * scale;
    assert(dE(lo) < 0 && dE(hi) > 0);
    const double root = find_root(dE, lo, hi, 1e-14);
    // second-derivative positivity at the root (interior minimum)
    const double h = 1e-5 * root;
    assert(dE(root + h) - dE(root - h) > 0);
    return root;
}

CriterionResult criterion(double m, const UnitSystem& u) {
    CriterionResult res;
    res.sigma_canonical = critical_width(m, u);
    res.sigma_force_balance = width_by_force_balance(m, u);
    res.sigma_energy_min = width_by_energy_min(m, u);
    res.m_c = critical_mass(res.sigma_canonical, u);
    res.prefactors = {
        {"canonical", 1.0},
        {"force_balance", res.sigma_force_balance / res.sigma_canonical},
        {"energy_min", res.sigma_energy_min / res.sigma_canonical},
    };
    return res;
}

RegimeReport classify(const PacketSpec& p, double band) {
    p.validate();
    const UnitSystem& u = p.units;
    const double s = p.sigma0;

    const double quantum_part =
        u.hbar * u.hbar / (4.0 * p.mass * p.mass * s * s * s * s);
    const double rho0 = density(p, 0.0, 0.0);
    const double gravity_part = -(4.0 * M_PI * u.G * p.mass / 3.0) * rho0;

    const FieldAverage fq = average(FieldKind::Fq, p);
    const FieldAverage fg = average(FieldKind::Fg, p);
    const double ratio = std::abs(fg.closed_form) / fq.closed_form;

    Regime regime;
    if (std::abs(ratio - 1.0) <= band)
        regime = Regime::Transition;
    else if (ratio > 1.0)
        regime = Regime::GravityDominant;
    else
        regime = Regime::QuantumDominant;

    return {regime, quantum_part + gravity_part, fq.closed_form, fg.closed_form,
            ratio, band};
}

}  // namespace gravicollapse
