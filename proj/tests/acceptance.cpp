// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gravicollapse/criterion.hpp"
#include "gravicollapse/deviation.hpp"
#include "gravicollapse/reduction.hpp"

using namespace gravicollapse;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const char* title, bool pass, double seconds, double limit) {
    const bool in_time = seconds < limit;
    if (!pass || !in_time) ++failures;
    std::printf("[%s] criterion %2d: %-58s (%.3fs%s)\n",
                pass && in_time ? "PASS" : "FAIL", id, title, seconds,
                in_time ? "" : ", over time limit");
}

void criterion_case(int id, const char* title, double time_limit,
                    const std::function<bool()>& body) {
    const auto start = Clock::now();
    bool pass = false;
    try {
        pass = body();
    } catch (const std::exception& e) {
        std::printf("       exception: %s\n", e.what());
    }
    const double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    report(id, title, pass, secs, time_limit);
}

bool close(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

double interp_r(const std::vector<RadialState>& s, double t) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i].t >= t) {
            const auto& a = s[i - 1];
            const auto& b = s[i];
            return a.r + (t - a.t) / (b.t - a.t) * (b.r - a.r);
        }
    }
    return s.back().r;
}

std::string capture(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return {};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
}

}  // namespace

int main() {
    const UnitSystem planck = UnitSystem::planck();
    const PacketSpec unit{1.0, 1.0, planck};

    criterion_case(1, "proton benchmark (SI critical width, tau_mass)", 1e-3, [&] {
        const double sigma = critical_width(1.67e-27, UnitSystem::si());
        const double tau =
            reduction_times({1.67e-27, sigma, UnitSystem::si()}).tau_mass_formula;
        return sigma >= 3.4e22 && sigma <= 3.8e22 && tau >= 1e52 && tau <= 4e52;
    });

    criterion_case(2, "closed-form vs quadrature averages, 1e-8 rel", 1.0, [&] {
        std::mt19937_64 gen(2024);
        std::uniform_real_distribution<double> mag(-3.0, 3.0);
        for (int i = 0; i < 10; ++i) {
            const PacketSpec p{std::pow(10.0, mag(gen)), std::pow(10.0, mag(gen)),
                               planck};
            for (FieldKind k :
                 {FieldKind::Q, FieldKind::Ug, FieldKind::Fq, FieldKind::Fg}) {
                const FieldAverage a = average(k, p);
                if (!close(a.quadrature, a.closed_form, 1e-8)) return false;
            }
        }
        return true;
    });

    criterion_case(3, "criterion triangulation, 1e-8 rel, m-independent", 1.0, [&] {
        const double want_fb = std::sqrt(M_PI / 2.0);
        const double want_em = 1.5 * std::sqrt(M_PI);
        for (double m : {0.5, 1.0, 2.0, 4.0}) {
            const double scale = critical_width(m, planck);
            if (!close(scale, 1.0 / (m * m * m), 1e-14)) return false;
            if (!close(width_by_force_balance(m, planck) / scale, want_fb, 1e-8))
                return false;
            if (!close(width_by_energy_min(m, planck) / scale, want_em, 1e-8))
                return false;
        }
        return true;
    });

    criterion_case(4, "mass sweep: decreasing fall times, sqrt(m) scaling", 5.0, [&] {
        IntegratorConfig ic;
        const auto rows = mass_sweep({2.0, 4.0, 5.0}, 1.0, planck, ic);
        double prev_fall = 1e300, ref = -1.0;
        for (const auto& row : rows) {
            if (!row.result) return false;
            const double fall = row.result->fall_time_numeric;
            if (fall >= prev_fall) return false;
            prev_fall = fall;
            const double scaled = fall * std::sqrt(row.mass);
            if (ref < 0) ref = scaled;
            if (std::abs(scaled - ref) / ref > 0.10) return false;
        }
        return true;
    });

    criterion_case(5, "quantum-dominant spreading, lighter above heavier", 5.0, [&] {
        IntegratorConfig ic;
        ic.t_max = 3.0;
        std::vector<std::vector<RadialState>> runs;
        for (double m : {0.5, 1.0, 2.0}) {
            const auto tr =
                integrate_quantum_dominant({m, 1.0, planck}, 1.0, 0.0, ic);
            for (std::size_t i = 1; i < tr.series.size(); ++i)
                if (tr.series[i].r < tr.series[i - 1].r) return false;
            runs.push_back(tr.series);
        }
        for (double t = 0.25; t <= 3.0; t += 0.25) {
            const double light = interp_r(runs[0], t);
            const double mid = interp_r(runs[1], t);
            const double heavy = interp_r(runs[2], t);
            if (!(light > mid && mid > heavy)) return false;
        }
        return true;
    });

    criterion_case(6, "parabola 1% / arccos 5% / elliptic 15% consistency", 5.0, [&] {
        IntegratorConfig ic;
        ic.rel_tol = 1e-10;
        ic.abs_tol = 1e-13;
        const ReductionResult res =
            integrate_gravity_dominant(unit, 1.0, 0.0, WidthMode::FrozenWidth, ic);
        for (double t = 0.0; t <= 0.1; t += 0.005) {
            if (std::abs(interp_r(res.series, t) - parabolic_model(unit, t)) > 0.01)
                return false;
        }
        for (double t = 0.0; t <= 0.3; t += 0.01) {
            if (std::abs(interp_r(res.series, t) - arccos_model(unit, t)) > 0.05)
                return false;
        }
        for (double r : {0.25, 0.5, 0.75}) {
            double t_cross = -1.0;
            for (std::size_t i = 1; i < res.series.size(); ++i) {
                if (res.series[i].r <= r && res.series[i - 1].r > r) {
                    const auto& a = res.series[i - 1];
                    const auto& b = res.series[i];
                    t_cross = a.t + (a.r - r) / (a.r - b.r) * (b.t - a.t);
                    break;
                }
            }
            if (t_cross <= 0.0) return false;
            const double t_model = time_of_flight_elliptic(unit, r);
            if (std::abs(t_model - t_cross) / t_cross > 0.15) return false;
        }
        return true;
    });

    criterion_case(7, "frozen-width energy first integral, residual < 1e-7", 2.0, [&] {
        IntegratorConfig ic;  // default rel_tol 1e-9
        const ReductionResult res =
            integrate_gravity_dominant(unit, 1.0, 0.0, WidthMode::FrozenWidth, ic);
        double u_max2 = 0.0;
        for (const auto& s : res.series) u_max2 = std::max(u_max2, s.u * s.u);
        const double c = 2.0 * std::sqrt(2.0 / M_PI);
        for (const auto& s : res.series) {
            const double residual =
                s.u * s.u - c * (std::exp(-0.5 * s.r * s.r) - std::exp(-0.5));
            if (std::abs(residual) / u_max2 > 1e-7) return false;
        }
        return true;
    });

    criterion_case(8, "deviation sign laws and constant-coefficient oracles", 2.0, [&] {
        const auto lin =
            integrate_deviation(unit, DeviationRegime::Transition, 1.5, 0.25, 4.0);
        for (const auto& s : lin)
            if (s.xi != 1.5 + 0.25 * s.t) return false;

        const auto qd =
            integrate_deviation(unit, DeviationRegime::QuantumDominant, 1.0, 0.0, 3.0);
        const OmegaValue w = omega(unit, 0.0, 1.0);
        for (const auto& s : qd) {
            if (std::abs(s.xi - std::cosh(0.5 * s.t)) > 1e-6 * std::cosh(0.5 * s.t))
                return false;
            if (s.xi > 0 && !(w.quantum_part * s.xi > 0)) return false;
        }

        const auto gd =
            integrate_deviation(unit, DeviationRegime::GravityDominant, 1.0, 0.0, 2.0);
        const double om = std::sqrt(-w.gravity_part);
        for (const auto& s : gd) {
            const double expect = std::cos(om * s.t);
            if (expect < 0) break;
            if (std::abs(s.xi - expect) > 1e-6) return false;
            if (s.xi > 0 && !(w.gravity_part * s.xi < 0)) return false;
        }
        return true;
    });

    criterion_case(9, "tau coherence at the critical width", 1e-3, [&] {
        for (double m : {0.5, 1.0, 2.0}) {
            const double s = critical_width(m, planck);
            const ReductionResult r = reduction_times({m, s, planck});
            if (!close(r.tau_width_formula, r.tau_mass_formula, 1e-12)) return false;
            const double rd = r.tau_dp / r.tau_width_formula;
            const double ra = r.tau_avg / r.tau_width_formula;
            if (rd < 0.1 || rd > 10.0 || ra < 0.1 || ra > 10.0) return false;
        }
        return true;
    });

    criterion_case(10, "byte-identical sweep/reduce under 1, 2, 8 workers", 10.0, [&] {
        const std::string cli = GRAVICOLLAPSE_CLI_PATH;
        const std::string sweep_args = " sweep --masses 2,4,5 --sigma0 1";
        const std::string reduce_args = " reduce --mass 2 --sigma0 1 --out-format csv";
        std::string sweep_ref, reduce_ref;
        for (const char* n : {"1", "2", "8"}) {
            const std::string env = std::string("GRAVICOLLAPSE_THREADS=") + n;
            const std::string s = capture(env + " " + cli + sweep_args);
            const std::string r = capture(env + " " + cli + reduce_args);
            if (s.empty() || r.empty()) return false;
            if (sweep_ref.empty()) {
                sweep_ref = s;
                reduce_ref = r;
            } else if (s != sweep_ref || r != reduce_ref) {
                return false;
            }
            // repeated run, same worker count
            if (capture(env + " " + cli + sweep_args) != sweep_ref) return false;
        }
        return true;
    });

    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criterion(s) failed\n", failures);
    return failures;
}
