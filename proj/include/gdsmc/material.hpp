// Copyright 2026 The gdsmc Project Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#pragma once

/// @file
/// Monolayer graphene near a Dirac point: dispersion, equilibrium
/// distributions, density of states, and the material parameter set every
/// other module reads from.
///
/// Wave vectors are measured from the Dirac point and the Dirac energy is the
/// zero of energy, so ε(k) = ±γ|k| with γ = ħ v_F.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Core>

#include "gdsmc/constants.hpp"

namespace gdsmc {

using Vec2 = Eigen::Vector2d;

/// Band index: +1 conduction, -1 valence.
enum class Band : int { conduction = +1, valence = -1 };

inline constexpr int band_sign(Band b) { return static_cast<int>(b); }

/// One simulated electron: wave vector (1/nm, from the Dirac point) and band.
struct Particle {
    Vec2 k = Vec2::Zero();
    Band band = Band::conduction;
};

/// Material constants in internal units plus the derived quantities γ and r_s.
///
/// The factory `suspended_graphene()` holds the default parameter set
/// (deformation potentials, phonon energies, sound speed, areal density) used
/// throughout; individual fields can be overridden through the run config.
struct Material_params {
    double v_F = 0.0;          ///< Fermi speed (nm/ps)
    double v_p = 0.0;          ///< sound speed (nm/ps)
    double sigma_m = 0.0;      ///< areal mass density (eV ps²/nm⁴)
    double D_ac = 0.0;         ///< acoustic deformation potential (eV)
    double hbar_omega_O = 0.0; ///< optical phonon energy (eV)
    double D_O = 0.0;          ///< optical coupling (eV/nm)
    double hbar_omega_K = 0.0; ///< K phonon energy (eV)
    double D_K = 0.0;          ///< K coupling (eV/nm)
    double T = 300.0;          ///< lattice temperature (K)
    double g_s = 2.0;          ///< spin degeneracy
    double g_v = 2.0;          ///< valley degeneracy
    double kappa = 1.0;        ///< background dielectric constant
    double gamma = 0.0;        ///< ħ v_F (eV nm), derived
    double r_s = 0.0;          ///< Wigner-Seitz radius, derived

    /// Recompute γ and r_s from the primary fields.
    void finalize() {
        gamma = constants::hbar * v_F;
        r_s = constants::e_sq / (kappa * gamma) * std::sqrt(4.0 / (g_s * g_v));
    }

    /// Throws std::invalid_argument when a physical constant is non-positive.
    void validate() const;

    /// Suspended monolayer defaults (κ = 1, room temperature).
    static Material_params suspended_graphene();
};

inline void Material_params::validate() const {
    auto positive = [](double x, const char* name) {
        if (!(x > 0.0))
            throw std::invalid_argument(std::string("Material_params: ") + name +
                                        " must be positive");
    };
    positive(v_F, "v_F");
    positive(v_p, "v_p");
    positive(sigma_m, "sigma_m");
    positive(D_ac, "D_ac");
    positive(hbar_omega_O, "hbar_omega_O");
    positive(D_O, "D_O");
    positive(hbar_omega_K, "hbar_omega_K");
    positive(D_K, "D_K");
    positive(T, "T");
    positive(g_s, "g_s");
    positive(g_v, "g_v");
    positive(kappa, "kappa");
}

inline Material_params Material_params::suspended_graphene() {
    namespace c = constants;
    Material_params m;
    m.v_F = 1.0e8 * c::cm_per_s;             // 10^8 cm/s
    m.v_p = 2.0e6 * c::cm_per_s;             // 2x10^6 cm/s
    m.sigma_m = 7.6e-8 * c::g_per_cm2;       // 7.6e-8 g/cm^2
    m.D_ac = 6.8;                            // eV
    m.hbar_omega_O = 164.6 * c::meV;         // 164.6 meV
    m.D_O = 1.0e9 * c::eV_per_cm;            // 10^9 eV/cm
    m.hbar_omega_K = 124.0 * c::meV;         // 124 meV
    m.D_K = 3.5e8 * c::eV_per_cm;            // 3.5e8 eV/cm
    m.T = 300.0;
    m.g_s = 2.0;
    m.g_v = 2.0;
    m.kappa = 1.0;
    m.finalize();
    return m;
}

/// Band energy ε(k) = ±γ|k| (eV).
template <typename Scalar>
Scalar energy(const Eigen::Matrix<Scalar, 2, 1>& k, Band band, Scalar gamma) {
    return static_cast<Scalar>(band_sign(band)) * gamma * k.norm();
}

inline double energy(const Vec2& k, Band band, const Material_params& m) {
    return energy<double>(k, band, m.gamma);
}

/// Group velocity v = ±v_F k/|k| (nm/ps). Its magnitude is v_F for every
/// k ≠ 0; at k = 0 the direction is undefined and the caller must resample.
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 1> velocity(const Eigen::Matrix<Scalar, 2, 1>& k, Band band,
                                     Scalar v_F) {
    const Scalar norm = k.norm();
    if (!(norm > Scalar(0)))
        throw std::domain_error("velocity: undefined direction at the Dirac point (k = 0)");
    return (static_cast<Scalar>(band_sign(band)) * v_F / norm) * k;
}

inline Vec2 velocity(const Vec2& k, Band band, const Material_params& m) {
    return velocity<double>(k, band, m.v_F);
}

/// Fermi-Dirac occupation 1/(1+exp((ε-ε_F)/k_B T)), saturating to 0 or 1
/// instead of overflowing.
template <typename Scalar>
Scalar fermi_dirac(Scalar eps, Scalar eps_F, Scalar temperature) {
    const Scalar x = (eps - eps_F) / (Scalar(constants::k_B) * temperature);
    if (x > Scalar(500)) return Scalar(0);
    if (x < Scalar(-500)) return Scalar(1);
    if (x > Scalar(0)) {
        const Scalar e = std::exp(-x);
        return e / (Scalar(1) + e);
    }
    return Scalar(1) / (Scalar(1) + std::exp(x));
}

/// Bose-Einstein occupation 1/(exp(ħω/k_B T) - 1) for ħω, T > 0.
template <typename Scalar>
Scalar bose_einstein(Scalar hbar_omega, Scalar temperature) {
    return Scalar(1) / std::expm1(hbar_omega / (Scalar(constants::k_B) * temperature));
}

/// Density of states g_s g_v |ε| / (2π γ²) per unit area and energy.
template <typename Scalar>
Scalar density_of_states(Scalar eps, Scalar gamma, Scalar g_s, Scalar g_v) {
    return g_s * g_v * std::abs(eps) / (Scalar(2) * std::numbers::pi_v<Scalar> * gamma * gamma);
}

inline double density_of_states(double eps, const Material_params& m) {
    return density_of_states<double>(eps, m.gamma, m.g_s, m.g_v);
}

/// Fermi momentum k_F = sqrt(4πn/(g_s g_v)) of a carrier density n > 0.
template <typename Scalar>
Scalar fermi_momentum(Scalar n, Scalar g_s, Scalar g_v) {
    if (!(n > Scalar(0)))
        throw std::domain_error("fermi_momentum: density must be positive");
    return std::sqrt(Scalar(4) * std::numbers::pi_v<Scalar> * n / (g_s * g_v));
}

inline double fermi_momentum(double n, const Material_params& m) {
    return fermi_momentum<double>(n, m.g_s, m.g_v);
}

/// Carrier density of a conduction-band Fermi-Dirac distribution,
/// n = g_s g_v/(2π)² ∫ f d²k = g_s g_v/(2πγ²) ∫₀^∞ ε f(ε) dε,
/// evaluated by composite-Simpson quadrature of the radial integral.
inline double fermi_dirac_density(double eps_F, double temperature, const Material_params& m) {
    const double kT = constants::k_B * temperature;
    // Integrand decays like exp(-(eps-eps_F)/kT); 60 kT of headroom makes the
    // truncated tail < 1e-24 of the total.
    const double eps_hi = std::max(eps_F, 0.0) + 60.0 * kT;
    const int n = 4000; // even
    const double h = eps_hi / n;
    auto g = [&](double eps) { return eps * fermi_dirac(eps, eps_F, temperature); };
    double acc = g(0.0) + g(eps_hi);
    for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * g(i * h);
    const double integral = acc * h / 3.0;
    return m.g_s * m.g_v / (2.0 * std::numbers::pi * m.gamma * m.gamma) * integral;
}

} // namespace gdsmc
