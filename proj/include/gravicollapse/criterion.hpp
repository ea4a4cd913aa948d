#ifndef GRAVICOLLAPSE_CRITERION_HPP
#define GRAVICOLLAPSE_CRITERION_HPP

#include <map>
#include <string>

#include "gravicollapse/fields.hpp"

namespace gravicollapse {

// Quantum-classical threshold computed three independent ways. All three
// widths scale as hbar^2/(G m^3); only the O(1) prefactor differs:
// canonical 1, force balance sqrt(pi/2), mean-energy minimum 3 sqrt(pi)/2.
struct CriterionResult {
    double sigma_canonical;
    double sigma_force_balance;
    double sigma_energy_min;
    double m_c;  // critical mass for sigma0 = sigma_canonical scale
    std::map<std::string, double> prefactors;  // method -> dimensionless
};

enum class Regime { QuantumDominant, Transition, GravityDominant };

const char* regime_name(Regime r);

struct RegimeReport {
    Regime regime;
    double omega0;          // Omega at r=0, time^-2
    double fq_avg;
    double fg_avg;
    double balance_ratio;   // |<f_g>| / <f_q>, strictly increasing in m
    double tolerance_band;
};

// hbar^2/(G m^3)
double critical_width(double m, const UnitSystem& u);

// (hbar^2/(G sigma0))^{1/3}
double critical_mass(double sigma0, const UnitSystem& u);

// root of <f_q>(sigma) + <f_g>(sigma) = 0; equals sqrt(pi/2) hbar^2/(G m^3)
double width_by_force_balance(double m, const UnitSystem& u);

// argmin of <E>(sigma) = <Q> + <U_g>; equals (3 sqrt(pi)/2) hbar^2/(G m^3).
// Located by a Brent root on the analytic d<E>/dsigma; the bracket is
// guaranteed interior (<E> -> +inf as sigma->0, -> 0- as sigma->inf).
double width_by_energy_min(double m, const UnitSystem& u,
                           const QuadratureConfig& cfg = {});

// Mean energy <Q>(sigma) + <U_g>(sigma) at frozen width sigma.
double mean_energy(double m, const UnitSystem& u, double sigma);

CriterionResult criterion(double m, const UnitSystem& u);

RegimeReport classify(const PacketSpec& p, double band = 0.05);

}  // namespace gravicollapse

#endif
