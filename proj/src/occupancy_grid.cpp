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

#include "gdsmc/occupancy_grid.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

namespace gdsmc {

Occupancy_grid::Occupancy_grid(const Grid_spec& spec, double w_stat, double g_s,
                               double g_v)
    : n_(spec.n_cells), k_max_(spec.k_max), w_stat_(w_stat) {
    if (n_ < 1 || !(k_max_ > 0.0))
        throw std::invalid_argument("Occupancy_grid: need n_cells >= 1 and k_max > 0");
    delta_k_ = 2.0 * k_max_ / n_;
    const double two_pi = 2.0 * std::numbers::pi;
    quantum_ = w_stat_ * two_pi * two_pi / (g_s * g_v * delta_k_ * delta_k_);
    counts_[0].assign(static_cast<std::size_t>(n_) * n_, 0);
    counts_[1].assign(static_cast<std::size_t>(n_) * n_, 0);
}

Occupancy_grid Occupancy_grid::estimate(std::span<const Particle> ensemble,
                                        const Grid_spec& spec, double w_stat, double g_s,
                                        double g_v) {
    Occupancy_grid grid(spec, w_stat, g_s, g_v);
    for (const Particle& p : ensemble) grid.increment(p.k, p.band);
    return grid;
}

std::int64_t Occupancy_grid::total_count(Band b) const {
    const auto& c = counts_[band_index(b)];
    return std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

double Occupancy_grid::max_occupancy(Band b) const {
    const auto& c = counts_[band_index(b)];
    if (c.empty()) return 0.0;
    return *std::max_element(c.begin(), c.end()) * quantum_;
}

} // namespace gdsmc
