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
/// Static RPA screening of the electron-electron interaction.
///
/// Every e-e matrix element divides by ε(q)q = q + C_ε Π̃(q), where Π̃ is the
/// zero-temperature polarizability of the Dirac sea normalized to 1 below
/// 2k_F, and C_ε = (r_s k_F/2)(g_s g_v)^{3/2} collects the interaction
/// strength. Screening parameters are frozen at the initial carrier density
/// for the whole run.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gdsmc/material.hpp"

namespace gdsmc {

/// Dimensionless static polarizability Π̃(q): identically 1 for q < 2k_F,
/// then 1 + πq/(8k_F) - sqrt(q²-4k_F²)/(2q) - q/(4k_F)·asin(2k_F/q).
/// Continuous at q = 2k_F; within 1e-9·k_F of the edge the inner branch is
/// used (the two branches agree there by continuity).
template <typename Scalar>
Scalar pi_tilde(Scalar q, Scalar k_F) {
    if (!(k_F > Scalar(0))) throw std::domain_error("pi_tilde: k_F must be positive");
    const Scalar edge = Scalar(2) * k_F;
    if (q < edge + Scalar(1e-9) * k_F) return Scalar(1);
    return Scalar(1) + std::numbers::pi_v<Scalar> * q / (Scalar(8) * k_F) -
           std::sqrt(q * q - edge * edge) / (Scalar(2) * q) -
           q / (Scalar(4) * k_F) * std::asin(edge / q);
}

/// Intra-band part Π̃⁻(q) = πq/(8k_F) of the textbook decomposition.
template <typename Scalar>
Scalar pi_tilde_minus(Scalar q, Scalar k_F) {
    return std::numbers::pi_v<Scalar> * q / (Scalar(8) * k_F);
}

/// Inter-band part Π̃⁺(q) of the decomposition; Π̃⁻ + Π̃⁺ must reproduce
/// pi_tilde() identically (asserted by the acceptance suite).
template <typename Scalar>
Scalar pi_tilde_plus(Scalar q, Scalar k_F) {
    const Scalar edge = Scalar(2) * k_F;
    if (q < edge)
        return Scalar(1) - std::numbers::pi_v<Scalar> * q / (Scalar(8) * k_F);
    return Scalar(1) - std::sqrt(q * q - edge * edge) / (Scalar(2) * q) -
           q / (Scalar(4) * k_F) * std::asin(edge / q);
}

/// Screening inputs of one run: the (frozen) Fermi momentum and C_ε.
struct Screening_params {
    double k_F = 0.0;   ///< Fermi momentum (1/nm)
    double C_eps = 0.0; ///< screening constant (1/nm)
    double r_s = 0.0;
    double g_s = 2.0;
    double g_v = 2.0;

    /// Build from material constants and a Fermi momentum.
    static Screening_params from_material(const Material_params& m, double k_F) {
        if (!(k_F > 0.0))
            throw std::invalid_argument("Screening_params: k_F must be positive");
        Screening_params s;
        s.k_F = k_F;
        s.r_s = m.r_s;
        s.g_s = m.g_s;
        s.g_v = m.g_v;
        s.C_eps = 0.5 * m.r_s * k_F * std::pow(m.g_s * m.g_v, 1.5);
        return s;
    }
};

/// ε(q)q = q + C_ε Π̃(q) (1/nm); strictly positive, tending to C_ε as q → 0,
/// so the screened interaction has no Coulomb singularity.
inline double screened_denominator(double q, const Screening_params& s) {
    return q + s.C_eps * pi_tilde(q, s.k_F);
}

} // namespace gdsmc
