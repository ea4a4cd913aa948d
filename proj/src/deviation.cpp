#include "gravicollapse/deviation.hpp"

#include <cmath>
#include <stdexcept>

namespace gravicollapse {

OmegaValue omega(const PacketSpec& p, double r, double sigma) {
    const double quantum_part = -laplacian_Q(p, sigma) / (3.0 * p.mass);
    const double x = r / sigma;
    const double rho = std::pow(2.0 * M_PI, -1.5) / (sigma * sigma * sigma) *
                       std::exp(-0.5 * x * x);
    const double gravity_part = -(4.0 * M_PI * p.units.G * p.mass / 3.0) * rho;
    return {quantum_part + gravity_part, quantum_part, gravity_part};
}

std::vector<DeviationState> integrate_deviation(const PacketSpec& p,
                                                DeviationRegime regime,
                                                double xi0, double xi_dot0,
                                                double t_end,
                                                const IntegratorConfig& ic) {
    p.validate();
    if (!(t_end > 0.0))
        throw std::invalid_argument("integrate_deviation: t_end must be > 0");

    if (regime == DeviationRegime::Transition) {
        // Omega = 0 exactly; emit the closed-form line on a uniform grid
        std::vector<DeviationState> out;
        const int n = 200;
        for (int i = 0; i <= n; ++i) {
            const double t = t_end * i / n;
            out.push_back({t, xi0 + xi_dot0 * t, xi_dot0});
        }
        return out;
    }

    const OmegaValue w = omega(p, 0.0, p.sigma0);
    double coeff = 0.0;
    switch (regime) {
        case DeviationRegime::QuantumDominant: coeff = w.quantum_part; break;
        case DeviationRegime::GravityDominant: coeff = w.gravity_part; break;
        case DeviationRegime::Full: coeff = w.omega; break;
        case DeviationRegime::Transition: break;  // handled above
    }

    IntegratorConfig cfg = ic;
    cfg.t_max = t_end;
    auto rhs = [coeff](double, const std::vector<double>& y,
                       std::vector<double>& dydt) {
        dydt[0] = y[1];
        dydt[1] = coeff * y[0];
    };
    OdeSolution sol = integrate_ode(rhs, 0.0, {xi0, xi_dot0}, cfg);
    std::vector<DeviationState> out;
    out.reserve(sol.times.size());
    for (std::size_t i = 0; i < sol.times.size(); ++i)
        out.push_back({sol.times[i], sol.states[i][0], sol.states[i][1]});
    return out;
}

std::vector<DeviationState> integrate_deviation_coupled(
    const PacketSpec& p, double r0, double xi0, double xi_dot0, double t_end,
    const IntegratorConfig& ic) {
    p.validate();
    if (!(t_end > 0.0))
        throw std::invalid_argument("integrate_deviation_coupled: t_end must be > 0");
    IntegratorConfig cfg = ic;
    cfg.t_max = t_end;
    const PacketSpec pk = p;
    auto rhs = [pk](double, const std::vector<double>& y,
                    std::vector<double>& dydt) {
        const double r = y[0];
        const double s = pk.sigma0;
        const double acc = (quantum_force(pk, r, s) + gravity_force(pk, r, s)) / pk.mass;
        dydt[0] = y[1];
        dydt[1] = acc;
        const OmegaValue w = omega(pk, r, s);
        dydt[2] = y[3];
        dydt[3] = w.omega * y[2];
    };
    OdeSolution sol = integrate_ode(rhs, 0.0, {r0, 0.0, xi0, xi_dot0}, cfg);
    std::vector<DeviationState> out;
    out.reserve(sol.times.size());
    for (std::size_t i = 0; i < sol.times.size(); ++i)
        out.push_back({sol.times[i], sol.states[i][2], sol.states[i][3]});
    return out;
}

}  // namespace gravicollapse
