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
/// Internal unit system and physical constants.
///
/// All quantities inside the library live in (eV, nm, ps) units, which keeps
/// every magnitude of the simulation near unity: ħ ~ 1e-3 eV ps, wave vectors
/// ~ 1 nm⁻¹, rates ~ 1 ps⁻¹. Charge never appears on its own; the Coulomb
/// interaction enters through e² in Gaussian convention (eV nm).

namespace gdsmc {
namespace constants {

/// Reduced Planck constant (eV ps).
inline constexpr double hbar = 6.582119e-4;

/// Boltzmann constant (eV / K).
inline constexpr double k_B = 8.617333e-5;

/// Squared elementary charge, Gaussian convention (eV nm).
inline constexpr double e_sq = 1.43996;

// Unit conversions between the table units customary in the graphene
// literature and the internal system.

/// cm/s → nm/ps.
inline constexpr double cm_per_s = 1.0e-5;

/// g/cm² → eV ps² / nm⁴  (1 g = 1 erg s²/cm², 1 erg = 6.241509074e11 eV).
inline constexpr double g_per_cm2 = 6.241509074e11 * 1.0e24 / 1.0e14 / 1.0e14;

/// eV/cm → eV/nm.
inline constexpr double eV_per_cm = 1.0e-7;

/// meV → eV.
inline constexpr double meV = 1.0e-3;

/// 1/cm² → 1/nm².
inline constexpr double per_cm2 = 1.0e-14;

} // namespace constants
} // namespace gdsmc
