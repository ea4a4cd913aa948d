#include "gravicollapse/units.hpp"

#include <cmath>
#include <stdexcept>

namespace gravicollapse {

const char* dimension_name(Dimension d) {
    switch (d) {
        case Dimension::Mass: return "mass";
        case Dimension::Length: return "length";
        case Dimension::Time: return "time";
        case Dimension::Energy: return "energy";
        case Dimension::Force: return "force";
        case Dimension::Acceleration: return "acceleration";
        case Dimension::Velocity: return "velocity";
        case Dimension::Dimensionless: return "dimensionless";
    }
    return "unknown";
}

double unit_scale(const UnitSystem& u, Dimension d) {
    if (u.kind == UnitSystemKind::SI) return 1.0;
    // Planck scales from the pinned SI constants.
    const double m_p = std::sqrt(kHbarSI * kLightSI / kGravSI);
    const double l_p = std::sqrt(kHbarSI * kGravSI / std::pow(kLightSI, 3));
    const double t_p = std::sqrt(kHbarSI * kGravSI / std::pow(kLightSI, 5));
    switch (d) {
        case Dimension::Mass: return m_p;
        case Dimension::Length: return l_p;
        case Dimension::Time: return t_p;
        case Dimension::Energy: return m_p * kLightSI * kLightSI;
        case Dimension::Force: return m_p * kLightSI * kLightSI / l_p;
        case Dimension::Acceleration: return kLightSI / t_p;
        case Dimension::Velocity: return kLightSI;
        case Dimension::Dimensionless: return 1.0;
    }
    throw std::invalid_argument(std::string("unsupported dimension: ") +
                                dimension_name(d));
}

Quantity convert(const Quantity& q, const UnitSystem& from, const UnitSystem& to) {
    const double s_from = unit_scale(from, q.dimension);
    const double s_to = unit_scale(to, q.dimension);
    return {q.value * (s_from / s_to), q.dimension};
}

}  // namespace gravicollapse
