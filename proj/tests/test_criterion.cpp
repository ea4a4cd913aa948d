#include <cmath>

#include "doctest.h"
#include "gravicollapse/criterion.hpp"

using namespace gravicollapse;

namespace {

// plain bisection, independent of the Brent path in the implementation
double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((flo > 0) == (fm > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("canonical width and critical mass") {
    const UnitSystem pl = UnitSystem::planck();
    CHECK(critical_width(1.0, pl) == 1.0);
    CHECK(critical_width(2.0, pl) == doctest::Approx(1.0 / 8).epsilon(1e-14));
    CHECK(critical_mass(1.0, pl) == doctest::Approx(1.0).epsilon(1e-14));

    const UnitSystem si = UnitSystem::si();
    CHECK(critical_width(1.67e-27, si) == doctest::Approx(3.58e22).epsilon(0.02));
    CHECK(critical_mass(3.58e22, si) == doctest::Approx(1.67e-27).epsilon(0.02));

    for (double m : {0.3, 1.0, 4.7}) {
        CHECK(critical_mass(critical_width(m, pl), pl) ==
              doctest::Approx(m).epsilon(1e-12));
        CHECK(critical_mass(critical_width(m, si), si) ==
              doctest::Approx(m).epsilon(1e-12));
    }
}

TEST_CASE("force-balance width") {
    const UnitSystem pl = UnitSystem::planck();
    const double target = std::sqrt(M_PI / 2.0);
    CHECK(width_by_force_balance(1.0, pl) == doctest::Approx(target).epsilon(1e-10));
    // bisection oracle on the same closed-form balance
    const double oracle = bisect(
        [&](double s) {
            return 0.5 * std::sqrt(2.0 / M_PI) / (s * s * s) - 1.0 / (M_PI * s * s);
        },
        0.1, 10.0);
    CHECK(width_by_force_balance(1.0, pl) == doctest::Approx(oracle).epsilon(1e-10));
    // m-independent prefactor
    for (double m : {0.5, 1.0, 2.0, 4.0}) {
        CHECK(width_by_force_balance(m, pl) / critical_width(m, pl) ==
              doctest::Approx(target).epsilon(1e-10));
    }
}

TEST_CASE("energy-minimum width") {
    const UnitSystem pl = UnitSystem::planck();
    const double target = 1.5 * std::sqrt(M_PI);
    CHECK(width_by_energy_min(1.0, pl) == doctest::Approx(target).epsilon(1e-8));
    // grid-search oracle on <E>(sigma) = A/sigma^2 - B/sigma
    const double A = 3.0 / 8, B = 1.0 / (2.0 * std::sqrt(M_PI));
    double best = 0, best_val = 1e300;
    for (double s = 0.5; s < 10.0; s += 1e-5) {
        const double v = A / (s * s) - B / s;
        if (v < best_val) {
            best_val = v;
            best = s;
        }
    }
    CHECK(width_by_energy_min(1.0, pl) == doctest::Approx(best).epsilon(1e-4));
    CHECK(width_by_energy_min(1.0, pl) == doctest::Approx(2.0 * A / B).epsilon(1e-10));
    // negative bound state at the minimum, value -B^2/4A
    CHECK(mean_energy(1.0, pl, target) ==
          doctest::Approx(-B * B / (4.0 * A)).epsilon(1e-10));
    CHECK(mean_energy(1.0, pl, target) < 0.0);
    for (double m : {0.5, 1.0, 2.0, 4.0}) {
        CHECK(width_by_energy_min(m, pl) / critical_width(m, pl) ==
              doctest::Approx(target).epsilon(1e-8));
    }
}

TEST_CASE("the three prefactors are O(1) of each other") {
    const CriterionResult c = criterion(1.0, UnitSystem::planck());
    const double pf[3] = {c.prefactors.at("canonical"),
                          c.prefactors.at("force_balance"),
                          c.prefactors.at("energy_min")};
    for (double a : pf)
        for (double b : pf) {
            CHECK(a / b <= 3.0);
            CHECK(a / b >= 1.0 / 3.0);
        }
    CHECK(pf[0] == doctest::Approx(1.0));
    CHECK(pf[1] == doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-10));
    CHECK(pf[2] == doctest::Approx(1.5 * std::sqrt(M_PI)).epsilon(1e-8));
}

TEST_CASE("regime classification") {
    const UnitSystem pl = UnitSystem::planck();
    const RegimeReport at_balance = classify({1.0, std::sqrt(M_PI / 2.0), pl});
    CHECK(at_balance.regime == Regime::Transition);
    CHECK(at_balance.balance_ratio == doctest::Approx(1.0).epsilon(1e-10));

    const RegimeReport heavy = classify({2.0, 1.0, pl});
    CHECK(heavy.regime == Regime::GravityDominant);
    // ratio(m) = m^3 sigma0 / (sqrt(pi/2) hbar^2/G)
    CHECK(heavy.balance_ratio ==
          doctest::Approx(8.0 / std::sqrt(M_PI / 2.0)).epsilon(1e-10));

    const RegimeReport light = classify({0.5, 1.0, pl});
    CHECK(light.regime == Regime::QuantumDominant);
}

TEST_CASE("classification is monotone in mass") {
    auto rank = [](Regime r) {
        return r == Regime::QuantumDominant ? 0 : r == Regime::Transition ? 1 : 2;
    };
    int prev = 0;
    double prev_ratio = 0.0;
    for (double m = 0.2; m < 4.0; m += 0.05) {
        const RegimeReport rep = classify({m, 1.0, UnitSystem::planck()});
        CHECK(rank(rep.regime) >= prev);
        CHECK(rep.balance_ratio > prev_ratio);
        prev = rank(rep.regime);
        prev_ratio = rep.balance_ratio;
    }
}

TEST_CASE("omega at r=0 flips sign at ~0.94 canonical widths") {
    const double flip = 3.0 * std::pow(2.0 * M_PI, 1.5) / (16.0 * M_PI);
    CHECK(flip == doctest::Approx(0.93998560298).epsilon(1e-9));
    const RegimeReport below = classify({1.0, flip * 0.999, UnitSystem::planck()});
    const RegimeReport above = classify({1.0, flip * 1.001, UnitSystem::planck()});
    CHECK(below.omega0 > 0.0);
    CHECK(above.omega0 < 0.0);
}
