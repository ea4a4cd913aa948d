#ifndef GRAVICOLLAPSE_UNITS_HPP
#define GRAVICOLLAPSE_UNITS_HPP

#include <string>

namespace gravicollapse {

// CODATA-2018 values, pinned so tests have a fixed reference.
inline constexpr double kHbarSI = 1.054571817e-34;  // J s
inline constexpr double kGravSI = 6.67430e-11;      // m^3 kg^-1 s^-2
inline constexpr double kLightSI = 2.99792458e8;    // m/s

enum class UnitSystemKind { SI, Planck };

struct UnitSystem {
    UnitSystemKind kind;
    double hbar;
    double G;
    double c;

    static UnitSystem si() { return {UnitSystemKind::SI, kHbarSI, kGravSI, kLightSI}; }
    static UnitSystem planck() { return {UnitSystemKind::Planck, 1.0, 1.0, 1.0}; }

    const char* name() const { return kind == UnitSystemKind::SI ? "si" : "planck"; }
};

enum class Dimension {
    Mass,
    Length,
    Time,
    Energy,
    Force,
    Acceleration,
    Velocity,
    Dimensionless
};

const char* dimension_name(Dimension d);

struct Quantity {
    double value;
    Dimension dimension;
};

// Size of the system's unit for a dimension, expressed in SI units.
// SI scales are 1; Planck scales are built from the pinned SI constants
// (mass sqrt(hbar c/G), length sqrt(hbar G/c^3), time sqrt(hbar G/c^5), ...).
double unit_scale(const UnitSystem& u, Dimension d);

// Rescales q from one unit system to another. Throws std::invalid_argument
// for an unsupported dimension.
Quantity convert(const Quantity& q, const UnitSystem& from, const UnitSystem& to);

}  // namespace gravicollapse

#endif
