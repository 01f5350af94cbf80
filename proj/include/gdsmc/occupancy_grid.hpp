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
/// Cellwise estimate f_ij of the distribution function over the k-space box,
/// maintained incrementally from the particle ensemble. Used for e-e partner
/// statistics and Pauli-exclusion rejection.
///
/// The box is the square [-k_max, k_max]² split into N×N cells with half-open
/// membership [low, high) on both axes (the exact upper edge is folded into
/// the last cell). Each simulated particle carries a statistical weight
/// W_stat (carriers per unit area), so a cell holding `count` particles
/// estimates
///
///   f_ij = count · W_stat · (2π)² / (g_s g_v Δk²),
///
/// i.e. one particle contributes one quantization step to f.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gdsmc/material.hpp"

namespace gdsmc {

inline int band_index(Band b) { return b == Band::conduction ? 0 : 1; }

struct Grid_spec {
    int n_cells = 100;    ///< cells per side
    double k_max = 0.0;   ///< box half-width (1/nm)
};

class Occupancy_grid {
  public:
    Occupancy_grid() = default;

    /// w_stat: carrier areal density represented by one simulated particle
    /// (1/nm²), normally rho / N_p.
    Occupancy_grid(const Grid_spec& spec, double w_stat, double g_s, double g_v);

    /// Build from scratch by binning an ensemble; deterministic.
    /// Throws on any particle outside the box.
    static Occupancy_grid estimate(std::span<const Particle> ensemble,
                                   const Grid_spec& spec, double w_stat, double g_s,
                                   double g_v);

    int n() const { return n_; }
    double k_max() const { return k_max_; }
    double delta_k() const { return delta_k_; }
    double w_stat() const { return w_stat_; }
    /// Occupancy added by a single particle (the quantization step).
    double quantum() const { return quantum_; }

    /// Flat cell index of k; throws std::out_of_range when k leaves the box.
    int flat_cell(const Vec2& k) const {
        const int i = axis_cell(k.x()), j = axis_cell(k.y());
        return i * n_ + j;
    }

    Vec2 center(int i, int j) const {
        return {-k_max_ + (i + 0.5) * delta_k_, -k_max_ + (j + 0.5) * delta_k_};
    }

    void increment(const Vec2& k, Band b) { increment_cell(flat_cell(k), b); }
    void decrement(const Vec2& k, Band b) { decrement_cell(flat_cell(k), b); }

    void increment_cell(int flat, Band b) { ++counts_[band_index(b)][flat]; }

    /// Throws std::logic_error on decrement of an empty cell (bookkeeping
    /// corruption; fatal by contract).
    void decrement_cell(int flat, Band b) {
        int& c = counts_[band_index(b)][flat];
        if (c <= 0)
            throw std::logic_error("Occupancy_grid: decrement of empty cell " +
                                   std::to_string(flat));
        --c;
    }

    int count(int i, int j, Band b) const { return counts_[band_index(b)][i * n_ + j]; }

    /// Unclamped occupancy estimate of cell (i, j).
    double occupancy(int i, int j, Band b) const {
        return counts_[band_index(b)][i * n_ + j] * quantum_;
    }

    /// Occupancy at wave vector k, clamped to [0, 1] (counting noise can push
    /// the raw estimate slightly above one).
    double lookup(const Vec2& k, Band b) const {
        const double f = counts_[band_index(b)][flat_cell(k)] * quantum_;
        return f < 0.0 ? 0.0 : (f > 1.0 ? 1.0 : f);
    }

    std::int64_t total_count(Band b) const;
    double max_occupancy(Band b) const;

    /// Carrier density carried by band b: g_s g_v/(2π)² Σ f_ij Δk², which
    /// telescopes to w_stat · total_count.
    double density(Band b) const { return w_stat_ * static_cast<double>(total_count(b)); }

    std::span<const int> counts(Band b) const { return counts_[band_index(b)]; }

    bool operator==(const Occupancy_grid& other) const {
        return n_ == other.n_ && k_max_ == other.k_max_ &&
               counts_[0] == other.counts_[0] && counts_[1] == other.counts_[1];
    }

  private:
    int axis_cell(double x) const {
        if (x < -k_max_ || x > k_max_)
            throw std::out_of_range("Occupancy_grid: wave vector component " +
                                    std::to_string(x) + " outside box of half-width " +
                                    std::to_string(k_max_));
        int i = static_cast<int>((x + k_max_) / delta_k_);
        return i >= n_ ? n_ - 1 : i; // fold the exact top edge into the last cell
    }

    int n_ = 0;
    double k_max_ = 0.0;
    double delta_k_ = 0.0;
    double w_stat_ = 0.0;
    double quantum_ = 0.0;
    std::vector<int> counts_[2]; // [band][i*n + j], 0 = conduction, 1 = valence
};

} // namespace gdsmc
