#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gravicollapse/criterion.hpp"
#include "gravicollapse/deviation.hpp"
#include "gravicollapse/reduction.hpp"

using namespace gravicollapse;

namespace {

// 17 significant digits: lossless double round-trip for golden files.
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct JsonWriter {
    std::ostringstream out;
    bool first = true;

    void open() { out << "{"; first = true; }
    void close() { out << "}"; }
    void key(const std::string& k) {
        if (!first) out << ",";
        first = false;
        out << "\"" << k << "\":";
    }
    void field(const std::string& k, double v) { key(k); out << num(v); }
    void field(const std::string& k, const std::string& v) {
        key(k);
        out << "\"" << v << "\"";
    }
    void field(const std::string& k, bool v) { key(k); out << (v ? "true" : "false"); }
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open --out-path " + out_path);
        f << text;
    }
}

std::string series_csv(const std::vector<RadialState>& series,
                       const PacketSpec& p, WidthMode mode) {
    std::ostringstream csv;
    csv << "# units=" << p.units.name() << "\n";
    csv << "t,r,u,sigma\n";
    for (const auto& s : series) {
        const double sigma = mode == WidthMode::FrozenWidth ? p.sigma0 : width(p, s.t);
        csv << num(s.t) << "," << num(s.r) << "," << num(s.u) << ","
            << num(sigma) << "\n";
    }
    return csv.str();
}

void summary_fields(JsonWriter& j, const ReductionResult& r) {
    j.field("fall_time_numeric", r.fall_time_numeric);
    j.field("tau_width_formula", r.tau_width_formula);
    j.field("tau_mass_formula", r.tau_mass_formula);
    j.field("tau_dp", r.tau_dp);
    j.field("tau_avg", r.tau_avg);
    j.field("mode", std::string(width_mode_name(r.mode)));
    j.field("validity_flag", r.validity_flag);
}

unsigned env_workers() {
    const char* v = std::getenv("GRAVICOLLAPSE_THREADS");
    if (!v) return 1;
    const long n = std::strtol(v, nullptr, 10);
    return n > 0 ? static_cast<unsigned>(n) : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bohmian pilot-wave self-gravity toolkit: criterion widths, "
                 "field tables, regime maps, and reduction-time integration"};
    app.require_subcommand(1);

    std::string units_name = "planck";
    double mass = 1.0, sigma0 = 1.0, r0 = -1.0, u0 = 0.0;
    double t_max = 0.0, rel_tol = 1e-9, abs_tol = 1e-12, band = 0.05;
    double r_max = -1.0;
    int samples = 101;
    std::string mode_name = "frozen", out_format = "json", out_path;
    std::vector<double> masses;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd, bool needs_mass = true) {
        if (needs_mass) cmd->add_option("--mass", mass);
        cmd->add_option("--units", units_name)->check(CLI::IsMember({"planck", "si"}));
        cmd->add_option("--sigma0", sigma0);
        cmd->add_option("--out-format", out_format)->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out-path", out_path);
    };

    auto* c_criterion = app.add_subcommand("criterion",
        "threshold widths (canonical, force balance, energy minimum) and critical mass");
    add_common(c_criterion);

    auto* c_fields = app.add_subcommand("fields",
        "radial table of Q, f_q, U_g, f_g, rho");
    add_common(c_fields);
    c_fields->add_option("--r-max", r_max);
    c_fields->add_option("--samples", samples)->check(CLI::PositiveNumber);

    auto* c_regimes = app.add_subcommand("regimes",
        "regime classification over a mass list at fixed sigma0");
    add_common(c_regimes);
    c_regimes->add_option("--masses", masses)->delimiter(',');
    c_regimes->add_option("--band", band);

    auto* c_trajectory = app.add_subcommand("trajectory",
        "quantum-dominant trajectory series");
    add_common(c_trajectory);
    c_trajectory->add_option("--r0", r0);
    c_trajectory->add_option("--u0", u0);
    c_trajectory->add_option("--t-max", t_max);
    c_trajectory->add_option("--rel-tol", rel_tol);
    c_trajectory->add_option("--abs-tol", abs_tol);

    auto* c_reduce = app.add_subcommand("reduce",
        "gravity-dominant infall with numeric and analytic reduction times");
    add_common(c_reduce);
    c_reduce->add_option("--r0", r0);
    c_reduce->add_option("--u0", u0);
    c_reduce->add_option("--mode", mode_name)->check(CLI::IsMember({"frozen", "spreading"}));
    c_reduce->add_option("--t-max", t_max);
    c_reduce->add_option("--rel-tol", rel_tol);
    c_reduce->add_option("--abs-tol", abs_tol);

    auto* c_sweep = app.add_subcommand("sweep",
        "fall time vs mass table, frozen width, r0 = sigma0");
    add_common(c_sweep, false);
    c_sweep->add_option("--masses", masses)->required()->delimiter(',');
    c_sweep->add_option("--t-max", t_max);
    c_sweep->add_option("--rel-tol", rel_tol);
    c_sweep->add_option("--abs-tol", abs_tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 exit codes: 0 for help, non-zero for argument errors
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const UnitSystem units =
        units_name == "si" ? UnitSystem::si() : UnitSystem::planck();
    PacketSpec packet{mass, sigma0, units};
    IntegratorConfig ic;
    ic.rel_tol = rel_tol;
    ic.abs_tol = abs_tol;
    ic.t_max = t_max;
    if (r0 < 0.0) r0 = sigma0;
    if (r_max < 0.0) r_max = 4.0 * sigma0;

    try {
        if (*c_criterion) {
            const CriterionResult cr = criterion(mass, units);
            const ReductionResult taus =
                reduction_times({mass, cr.sigma_canonical, units});
            JsonWriter j;
            j.open();
            j.field("units", std::string(units.name()));
            j.field("mass", mass);
            j.field("sigma_canonical", cr.sigma_canonical);
            j.field("sigma_force_balance", cr.sigma_force_balance);
            j.field("sigma_energy_min", cr.sigma_energy_min);
            j.field("m_c", cr.m_c);
            for (const auto& [k, v] : cr.prefactors) j.field("prefactor_" + k, v);
            j.field("tau_width_formula", taus.tau_width_formula);
            j.field("tau_mass_formula", taus.tau_mass_formula);
            j.close();
            emit(j.out.str() + "\n", out_path);
        } else if (*c_fields) {
            packet.validate();
            std::ostringstream csv;
            csv << "# units=" << units.name() << "\n";
            csv << "r,Q,f_q,U_g,f_g,rho\n";
            for (int i = 0; i < samples; ++i) {
                const double r = r_max * i / (samples - 1);
                const FieldSample fs = sample_fields(packet, r, sigma0);
                csv << num(r) << "," << num(fs.Q) << "," << num(fs.f_q) << ","
                    << num(fs.U_g) << "," << num(fs.f_g) << ","
                    << num(density(packet, r, 0.0)) << "\n";
            }
            emit(csv.str(), out_path);
        } else if (*c_regimes) {
            if (masses.empty()) masses = {mass};
            std::ostringstream csv;
            csv << "# units=" << units.name() << "\n";
            csv << "mass,sigma0,regime,balance_ratio,omega0,fq_avg,fg_avg\n";
            for (double m : masses) {
                const RegimeReport rep = classify({m, sigma0, units}, band);
                csv << num(m) << "," << num(sigma0) << "," << regime_name(rep.regime)
                    << "," << num(rep.balance_ratio) << "," << num(rep.omega0)
                    << "," << num(rep.fq_avg) << "," << num(rep.fg_avg) << "\n";
            }
            emit(csv.str(), out_path);
        } else if (*c_trajectory) {
            if (ic.t_max <= 0.0) ic.t_max = 5.0;
            const QuantumTrajectory tr =
                integrate_quantum_dominant(packet, r0, u0, ic);
            emit(series_csv(tr.series, packet, WidthMode::SpreadingWidth), out_path);
        } else if (*c_reduce) {
            const WidthMode mode = mode_name == "frozen" ? WidthMode::FrozenWidth
                                                         : WidthMode::SpreadingWidth;
            const ReductionResult res =
                integrate_gravity_dominant(packet, r0, u0, mode, ic);
            if (out_format == "csv") {
                emit(series_csv(res.series, packet, mode), out_path);
            } else {
                JsonWriter j;
                j.open();
                j.field("units", std::string(units.name()));
                j.field("mass", mass);
                j.field("sigma0", sigma0);
                j.field("r0", r0);
                summary_fields(j, res);
                j.close();
                emit(j.out.str() + "\n", out_path);
            }
        } else if (*c_sweep) {
            const auto rows = mass_sweep(masses, sigma0, units, ic, env_workers());
            std::ostringstream csv;
            csv << "# units=" << units.name() << "\n";
            csv << "mass,fall_time_numeric,tau_width_formula,tau_mass_formula,"
                   "tau_dp,tau_avg,validity_flag,error\n";
            for (const auto& row : rows) {
                csv << num(row.mass) << ",";
                if (row.result) {
                    const auto& r = *row.result;
                    csv << num(r.fall_time_numeric) << "," << num(r.tau_width_formula)
                        << "," << num(r.tau_mass_formula) << "," << num(r.tau_dp)
                        << "," << num(r.tau_avg) << ","
                        << (r.validity_flag ? "true" : "false") << ",\n";
                } else {
                    csv << ",,,,,," << row.error << "\n";
                }
            }
            emit(csv.str(), out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
