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
/// Electron-phonon scattering: out-scattering rates and final-state sampling
/// for the elastic acoustic channel, the merged LO/TO optical channel, and
/// the K-phonon channel (conduction band, unipolar mode).
///
/// Rates are the golden-rule transition rates integrated in closed form over
/// the final circle |k'| = (ε ∓ ħω)/γ, without Pauli factors: blocking is
/// enforced by rejection when an event is applied. The sum-over-states
/// convention is Σ_k' → A/(2π)² ∫dk' with the (2π)⁻² already carried by the
/// squared matrix elements, which gives
///
///   acoustic (elastic):        λ = D_ac² k_B T ε / (4 ħ σ_m v_p² γ²)
///   optical LO+TO (isotropic): λ = D_O² ħ (n ∓ ...)(ε ± ħω_O) / (σ_m ħω_O γ²)
///   K (1-cosϑ weighted):       λ = D_K² ħ (...)(ε ± ħω_K) / (σ_m ħω_K γ²),
///
/// absorption carrying n_q and emission (n_q + 1) with a threshold at ħω.
/// The angular factors (1+cosϑ), 1, (1-cosϑ) integrate identically to 2π over
/// the circle but reappear in the sampled scattering angle.

#include <array>
#include <cmath>
#include <vector>

#include "gdsmc/material.hpp"
#include "gdsmc/rng.hpp"

namespace gdsmc {

enum class Phonon_kind { acoustic_elastic, optical, k_phonon };
enum class Phonon_direction { absorption, emission, not_applicable };

/// One concrete scattering process (kind, direction).
struct Phonon_channel {
    Phonon_kind kind = Phonon_kind::acoustic_elastic;
    Phonon_direction direction = Phonon_direction::not_applicable;

    /// Energy transferred to the electron (eV): +ħω absorption, -ħω emission,
    /// 0 elastic.
    double energy_shift(const Material_params& m) const {
        if (direction == Phonon_direction::not_applicable) return 0.0;
        const double hw = kind == Phonon_kind::optical ? m.hbar_omega_O : m.hbar_omega_K;
        return direction == Phonon_direction::absorption ? hw : -hw;
    }
};

/// The five channels in canonical order (also the CSV column order).
inline constexpr std::array<Phonon_channel, 5> phonon_channels() {
    return {{{Phonon_kind::acoustic_elastic, Phonon_direction::not_applicable},
             {Phonon_kind::optical, Phonon_direction::absorption},
             {Phonon_kind::optical, Phonon_direction::emission},
             {Phonon_kind::k_phonon, Phonon_direction::absorption},
             {Phonon_kind::k_phonon, Phonon_direction::emission}}};
}

/// Precomputed rate coefficients; rates come out in 1/ps for ε in eV.
struct Phonon_params {
    double ac_slope = 0.0;  ///< λ_ac = ac_slope · ε
    double opt_coeff = 0.0; ///< λ_opt = opt_coeff · occupation · (ε ± ħω_O)
    double k_coeff = 0.0;
    double n_O = 0.0; ///< Bose-Einstein occupations at the lattice temperature
    double n_K = 0.0;
    double hbar_omega_O = 0.0;
    double hbar_omega_K = 0.0;

    static Phonon_params from_material(const Material_params& m) {
        namespace c = constants;
        Phonon_params p;
        const double gamma_sq = m.gamma * m.gamma;
        p.ac_slope = m.D_ac * m.D_ac * c::k_B * m.T /
                     (4.0 * c::hbar * m.sigma_m * m.v_p * m.v_p * gamma_sq);
        p.opt_coeff = m.D_O * m.D_O * c::hbar / (m.sigma_m * m.hbar_omega_O * gamma_sq);
        p.k_coeff = m.D_K * m.D_K * c::hbar / (m.sigma_m * m.hbar_omega_K * gamma_sq);
        p.n_O = bose_einstein(m.hbar_omega_O, m.T);
        p.n_K = bose_einstein(m.hbar_omega_K, m.T);
        p.hbar_omega_O = m.hbar_omega_O;
        p.hbar_omega_K = m.hbar_omega_K;
        return p;
    }
};

/// Elastic acoustic out-scattering rate at electron energy ε >= 0 (1/ps).
inline double acoustic_rate(double eps, const Phonon_params& p) {
    return p.ac_slope * std::max(eps, 0.0);
}

/// LO+TO optical rate. Emission vanishes below the ħω_O threshold (the final
/// state would change band, which unipolar mode forbids).
inline double optical_rate(double eps, Phonon_direction dir, const Phonon_params& p) {
    if (dir == Phonon_direction::absorption)
        return p.opt_coeff * p.n_O * (eps + p.hbar_omega_O);
    return eps > p.hbar_omega_O ? p.opt_coeff * (p.n_O + 1.0) * (eps - p.hbar_omega_O) : 0.0;
}

/// K-phonon rate; same structure with the K coupling and energy.
inline double k_phonon_rate(double eps, Phonon_direction dir, const Phonon_params& p) {
    if (dir == Phonon_direction::absorption)
        return p.k_coeff * p.n_K * (eps + p.hbar_omega_K);
    return eps > p.hbar_omega_K ? p.k_coeff * (p.n_K + 1.0) * (eps - p.hbar_omega_K) : 0.0;
}

inline double phonon_rate(double eps, const Phonon_channel& ch, const Phonon_params& p) {
    switch (ch.kind) {
    case Phonon_kind::acoustic_elastic: return acoustic_rate(eps, p);
    case Phonon_kind::optical: return optical_rate(eps, ch.direction, p);
    case Phonon_kind::k_phonon: return k_phonon_rate(eps, ch.direction, p);
    }
    return 0.0;
}

/// Total electron-phonon out-scattering rate; monotone increasing in ε.
inline double phonon_total_rate(double eps, const Phonon_params& p) {
    double tot = 0.0;
    for (const auto& ch : phonon_channels()) tot += phonon_rate(eps, ch, p);
    return tot;
}

/// Uniform-in-energy lookup table of the five channel rates, used by the
/// free-flight loop instead of re-evaluating the closed forms.
class Phonon_rate_table {
  public:
    Phonon_rate_table() = default;

    /// Tabulate on [0, eps_max] with the given number of intervals. The grid
    /// is clipped so that no interval straddles an emission threshold, keeping
    /// linear interpolation exact (the rates are piecewise linear in ε).
    Phonon_rate_table(const Phonon_params& params, double eps_max, int n_bins);

    double eps_max() const { return eps_max_; }
    double spacing() const { return d_eps_; }
    int n_channels() const { return 5; }

    /// Interpolated rate of channel `ch` (canonical order) at energy eps.
    double rate(double eps, int ch) const;

    /// Interpolated total rate.
    double total(double eps) const;

    const Phonon_params& params() const { return params_; }

  private:
    Phonon_params params_;
    double eps_max_ = 0.0;
    double d_eps_ = 0.0;
    // rows_[i*5 + ch]; node i at energy i*d_eps_.
    std::vector<double> rows_;
};

/// Draw the post-scattering wave vector for a particle at k: the magnitude is
/// fixed by the channel's energy shift, the scattering angle ϑ relative to k
/// follows (1+cosϑ)/2π (acoustic), 1/2π (optical) or (1-cosϑ)/2π (K) by
/// rejection sampling.
///
/// Preconditions: the channel rate at energy(k) is positive (emission above
/// threshold) and |k| > 0.
Vec2 sample_phonon_final_state(const Vec2& k, const Phonon_channel& channel,
                               const Material_params& m, Counter_rng& rng);

} // namespace gdsmc
