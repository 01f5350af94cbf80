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
/// Ensemble Monte Carlo loop: free flight in a constant field, majorant-based
/// event selection with self-scattering, Pauli-exclusion rejection against
/// the occupancy grid, and observable recording.
///
/// Two schedulers implement the same physics:
///
///  * serial — the fidelity reference. A global event queue orders candidate
///    events of all particles in time; one RNG stream; the occupancy grid is
///    updated immediately at every accepted event (and cell membership is
///    migrated at every candidate event, so the estimate also tracks field
///    drift). Identical (config, seed) runs are bitwise reproducible.
///
///  * parallel — particles are partitioned across workers inside sub-steps of
///    length tau_sync during which the grid and partner positions are frozen
///    snapshots. Every particle draws from its own counter-based stream, and
///    accepted events are committed at the barrier in (time, particle) order
///    with conflicting events dropped, so the result is independent of the
///    worker count.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdsmc/ee_scattering.hpp"
#include "gdsmc/material.hpp"
#include "gdsmc/occupancy_grid.hpp"
#include "gdsmc/phonon.hpp"
#include "gdsmc/rng.hpp"
#include "gdsmc/screening.hpp"

namespace gdsmc {

enum class Run_mode { serial, parallel };
enum class Init_scheme {
    stratified, ///< deterministic per-cell loading; occupancy regular to one quantum
    rejection   ///< i.i.d. Fermi-Dirac rejection sampling on the k-box
};

struct Sim_config {
    Material_params material = Material_params::suspended_graphene();
    double eps_F = 0.15;         ///< Fermi energy (eV)
    Vec2 E_field = Vec2::Zero(); ///< electric field (kV/cm)
    int n_particles = 20000;
    double t_end = 5.0;    ///< ps
    double dt_obs = 0.025; ///< observable sampling interval (ps)
    std::uint64_t seed = 1;
    bool ee_enabled = true;
    Run_mode mode = Run_mode::serial;
    double tau_sync = 0.005; ///< parallel sub-step (ps)
    int n_threads = 0;       ///< 0: hardware limit; capped by GRAPHENE_DSMC_THREADS
    Init_scheme init = Init_scheme::stratified;

    int grid_n = 100;         ///< occupancy cells per side
    double eps_k_max = 1.2;   ///< box edge energy γ·k_max (eV) when k_max_nm == 0
    double k_max_nm = 0.0;    ///< explicit box radius (1/nm); overrides eps_k_max

    int ee_m = 64;
    double ee_beta_max = 4.0;
    bool ee_both_branches = false;
    bool ee_beta_weighted = false;

    double k_max() const { return k_max_nm > 0.0 ? k_max_nm : eps_k_max / material.gamma; }
    Grid_spec grid_spec() const { return Grid_spec{grid_n, k_max()}; }

    /// Throws std::invalid_argument on hard errors; returns a human-readable
    /// warning ("" if none) for soft ones (unipolar validity).
    std::string validate() const;
};

struct Time_series {
    struct Row {
        double t;   ///< ps
        double Vx;  ///< nm/ps
        double Vy;  ///< nm/ps
        double W;   ///< eV
        double rho; ///< 1/nm²
    };
    std::vector<Row> rows;
};

struct Run_diagnostics {
    std::int64_t candidate_events = 0;
    std::int64_t self_scatterings = 0;
    std::int64_t phonon_events[5] = {0, 0, 0, 0, 0}; ///< accepted, canonical order
    std::int64_t phonon_pauli_rejected = 0;
    std::int64_t phonon_box_rejected = 0;
    std::int64_t ee_events = 0;
    std::int64_t ee_pauli_rejected = 0;
    std::int64_t ee_box_rejected = 0;
    std::int64_t ee_degenerate_null = 0;
    std::int64_t majorant_violations = 0;
    std::int64_t majorant_refreshes = 0;
    std::int64_t parallel_dropped_events = 0;
    double majorant_final = 0.0;          ///< Γ_max at run end (1/ps)
    double fd_tail_fraction = 0.0;        ///< FD mass outside the box at init
    std::vector<double> max_occupancy_samples; ///< max_ij f_ij at each observable time
};

struct Run_result {
    Time_series series;
    Occupancy_grid final_grid;
    std::vector<Particle> final_ensemble;
    Run_diagnostics diag;
    double rho = 0.0; ///< initial carrier density (1/nm²)
    double k_F = 0.0; ///< Fermi momentum of rho (1/nm)
};

/// Raised when a particle leaves the k-box; the box must be enlarged.
struct Box_exit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// i.i.d. Fermi-Dirac sample of n particles by rejection on the disc
/// |k| <= k_max (conduction band).
std::vector<Particle> init_ensemble_rejection(double eps_F, double temperature,
                                              const Material_params& m, double k_max,
                                              int n, Counter_rng& rng);

/// Deterministic per-cell loading: cell counts are the largest-remainder
/// rounding of the Fermi-Dirac cell targets rescaled to sum to exactly n;
/// particle positions are uniform within their cell. Keeps every cell within
/// one quantization step of its target, which is what makes the hard Pauli
/// bound hold from t = 0.
std::vector<Particle> init_ensemble_stratified(double eps_F, double temperature,
                                               const Material_params& m,
                                               const Grid_spec& spec, int n,
                                               Counter_rng& rng);

/// Fraction of the Fermi-Dirac density lying outside |k| <= k_max.
double fd_tail_fraction(double eps_F, double temperature, const Material_params& m,
                        double k_max);

struct Observables {
    Vec2 V = Vec2::Zero(); ///< mean velocity (nm/ps)
    double W = 0.0;        ///< mean energy (eV)
};

/// Ensemble means of velocity and energy.
Observables observables(std::span<const Particle> ensemble, const Material_params& m);

/// Uniformly random partner index in [0, n) \ {self}.
inline int select_ee_partner(int n, int self, Counter_rng& rng) {
    if (n < 2) throw std::logic_error("select_ee_partner: need at least two particles");
    int j = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n - 1)));
    return j >= self ? j + 1 : j;
}

/// Channel index with cumulative rate exceeding r, or -1 (self-scattering).
inline int pick_channel(std::span<const double> rates, double r) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rates.size(); ++i) {
        acc += rates[i];
        if (r < acc) return static_cast<int>(i);
    }
    return -1;
}

/// Pauli rejection for a single-particle transition: accept iff f(k') < η.
inline bool pauli_accept_single(double f_final, Counter_rng& rng) {
    return f_final < rng.uniform();
}

/// Pauli rejection for a pair transition; both η draws always happen.
inline bool pauli_accept_pair(double f1, double f2, Counter_rng& rng) {
    const double eta1 = rng.uniform();
    const double eta2 = rng.uniform();
    return f1 < eta1 && f2 < eta2;
}

/// Run a homogeneous unipolar simulation. Deterministic given (config, seed)
/// in serial mode; parallel results do not depend on the worker count.
Run_result run(const Sim_config& cfg);

} // namespace gdsmc
