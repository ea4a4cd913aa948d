#include "gravicollapse/reduction.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gravicollapse/quadrature.hpp"

namespace gravicollapse {

const char* width_mode_name(WidthMode m) {
    return m == WidthMode::FrozenWidth ? "frozen" : "spreading";
}

namespace {

std::vector<RadialState> to_series(const OdeSolution& sol) {
    std::vector<RadialState> out;
    out.reserve(sol.times.size());
    for (std::size_t i = 0; i < sol.times.size(); ++i)
        out.push_back({sol.times[i], sol.states[i][0], sol.states[i][1]});
    return out;
}

void fill_analytic(const PacketSpec& p, AveragePolicy policy, ReductionResult& res) {
    const UnitSystem& u = p.units;
    const double m = p.mass, s = p.sigma0;
    res.tau_width_formula = std::sqrt(s * s * s / (u.G * m));
    res.tau_mass_formula =
        std::pow(u.hbar, 3) / (u.G * u.G * std::pow(m, 5));
    const double dU = std::sqrt(2.0 / M_PI) * (1.0 - std::exp(-0.5)) *
                      u.G * m * m / s;
    res.tau_dp = u.hbar / dU;
    double u2_avg;
    if (policy == AveragePolicy::Envelope) {
        u2_avg = (1.0 / std::sqrt(M_PI)) * u.G * m / s;
    } else {
        // anchored at r0 = sigma0, integrated over [0, sigma0]
        auto integrand = [&](double x) {
            const double rho = std::pow(2.0 * M_PI, -1.5) * std::exp(-0.5 * x * x);
            const double u2 = 2.0 * std::sqrt(2.0 / M_PI) * (u.G * m / s) *
                              (std::exp(-0.5 * x * x) - std::exp(-0.5));
            return rho * u2 * 4.0 * M_PI * x * x;  // scale-free in x = r/sigma0
        };
        u2_avg = integrate(integrand, 0.0, 1.0).value;
    }
    res.tau_avg = s / std::sqrt(u2_avg);
}

}  // namespace

QuantumTrajectory integrate_quantum_dominant(const PacketSpec& p, double r0,
                                             double u0,
                                             const IntegratorConfig& ic) {
    p.validate();
    if (r0 < 0.0)
        throw std::invalid_argument("integrate_quantum_dominant: r0 must be >= 0");
    if (!(ic.t_max > 0.0))
        throw std::invalid_argument("integrate_quantum_dominant: t_max must be > 0");
    const PacketSpec pk = p;
    auto rhs = [pk](double t, const std::vector<double>& y,
                    std::vector<double>& dydt) {
        const double s = width(pk, t);
        const double h2 = pk.units.hbar * pk.units.hbar;
        dydt[0] = y[1];
        dydt[1] = h2 * y[0] / (4.0 * pk.mass * pk.mass * s * s * s * s);
    };
    OdeSolution sol = integrate_ode(rhs, 0.0, {r0, u0}, ic);
    return {to_series(sol), sol.reached_t_max};
}

ReductionResult integrate_gravity_dominant(const PacketSpec& p, double r0,
                                           double u0, WidthMode mode,
                                           const IntegratorConfig& ic) {
    p.validate();
    if (!(r0 > 0.0))
        throw std::invalid_argument("integrate_gravity_dominant: r0 must be > 0");

    IntegratorConfig cfg = ic;
    if (cfg.t_max <= 0.0) {
        // generous default: 50 free-fall scales
        cfg.t_max = 50.0 * std::sqrt(p.sigma0 * p.sigma0 * p.sigma0 /
                                     (p.units.G * p.mass));
    }

    const PacketSpec pk = p;
    const bool frozen = mode == WidthMode::FrozenWidth;
    auto rhs = [pk, frozen](double t, const std::vector<double>& y,
                            std::vector<double>& dydt) {
        const double s = frozen ? pk.sigma0 : width(pk, t);
        dydt[0] = y[1];
        dydt[1] = gravity_force(pk, y[0], s) / pk.mass;
    };

    const double threshold = cfg.event_epsilon * p.sigma0;
    EventSpec event{[threshold](double, const std::vector<double>& y) {
                        return y[0] - threshold;
                    },
                    -1};
    OdeSolution sol = integrate_ode(rhs, 0.0, {r0, u0}, cfg, &event);
    if (!sol.event_hit) {
        RadialState last{sol.times.back(), sol.states.back()[0],
                         sol.states.back()[1]};
        std::ostringstream msg;
        msg << "no center crossing before t_max=" << cfg.t_max << " (r="
            << last.r << ", u=" << last.u
            << "); mass may be below the gravity-dominant range";
        throw NoCrossingError(last, msg.str());
    }

    ReductionResult res;
    res.fall_time_numeric = sol.event_time;
    res.series = to_series(sol);
    res.mode = mode;
    fill_analytic(p, AveragePolicy::Envelope, res);
    const double a = p.units.hbar * sol.event_time /
                     (2.0 * p.mass * p.sigma0 * p.sigma0);
    res.validity_flag = a * a < 0.1;
    return res;
}

double velocity_field(const PacketSpec& p, double r, double r0) {
    p.validate();
    if (r < 0.0 || r > r0)
        throw std::domain_error("velocity_field: requires 0 <= r <= r0");
    const double s = p.sigma0;
    const double u2 = 2.0 * std::sqrt(2.0 / M_PI) * (p.units.G * p.mass / s) *
                      (std::exp(-0.5 * r * r / (s * s)) -
                       std::exp(-0.5 * r0 * r0 / (s * s)));
    return -std::sqrt(u2);
}

double time_of_flight_elliptic(const PacketSpec& p, double r,
                               const QuadratureConfig& cfg) {
    p.validate();
    const double s = p.sigma0;
    if (r < 0.0 || r > s)
        throw std::domain_error("time_of_flight_elliptic: requires 0 <= r <= sigma0");
    // r' = sigma0 cos(theta) removes the sqrt endpoint at r' = sigma0:
    // t = 2 (pi/2)^{1/4} sqrt(sigma0^3/(G m)) \int_0^{acos(r/s)} dtheta/sqrt(3 - cos^2 theta)
    const double theta_max = std::acos(r / s);
    auto integrand = [](double th) {
        const double c = std::cos(th);
        return 1.0 / std::sqrt(3.0 - c * c);
    };
    const double integral = integrate(integrand, 0.0, theta_max, cfg).value;
    return 2.0 * std::pow(M_PI / 2.0, 0.25) *
           std::sqrt(s * s * s / (p.units.G * p.mass)) * integral;
}

double g_psi(const PacketSpec& p) {
    return p.units.G * p.mass / (p.sigma0 * p.sigma0);
}

double arccos_model(const PacketSpec& p, double t) {
    const double w = std::sqrt(2.0) * std::pow(2.0 / M_PI, 0.25) *
                     std::sqrt(p.units.G * p.mass /
                               (p.sigma0 * p.sigma0 * p.sigma0));
    return p.sigma0 * std::cos(w * t);
}

double parabolic_model(const PacketSpec& p, double t) {
    return p.sigma0 - 0.5 * g_psi(p) * t * t;
}

ReductionResult reduction_times(const PacketSpec& p, AveragePolicy policy) {
    p.validate();
    ReductionResult res;
    fill_analytic(p, policy, res);
    return res;
}

std::vector<SweepRow> mass_sweep(const std::vector<double>& masses,
                                 double sigma0, const UnitSystem& units,
                                 const IntegratorConfig& ic, unsigned workers) {
    std::vector<SweepRow> rows(masses.size());
    auto run_row = [&](std::size_t i) {
        rows[i].mass = masses[i];
        try {
            PacketSpec p{masses[i], sigma0, units};
            rows[i].result = integrate_gravity_dominant(p, sigma0, 0.0,
                                                        WidthMode::FrozenWidth, ic);
        } catch (const std::exception& e) {
            rows[i].error = e.what();
        }
    };
    if (workers <= 1 || masses.size() <= 1) {
        for (std::size_t i = 0; i < masses.size(); ++i) run_row(i);
    } else {
        std::vector<std::thread> pool;
        const unsigned n = std::min<std::size_t>(workers, masses.size());
        for (unsigned w = 0; w < n; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < masses.size(); i += n) run_row(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    return rows;
}

}  // namespace gravicollapse
