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

#include "gdsmc/phonon.hpp"

#include <numbers>
#include <stdexcept>

namespace gdsmc {

Phonon_rate_table::Phonon_rate_table(const Phonon_params& params, double eps_max,
                                     int n_bins)
    : params_(params), eps_max_(eps_max) {
    if (!(eps_max > 0.0) || n_bins < 2)
        throw std::invalid_argument("Phonon_rate_table: need eps_max > 0 and n_bins >= 2");
    d_eps_ = eps_max / n_bins;
    // Snap the spacing so both thresholds land on grid nodes; each rate is
    // then linear within every interval and interpolation is exact.
    for (double hw : {params.hbar_omega_O, params.hbar_omega_K}) {
        if (hw < eps_max) {
            const double n_below = std::max(1.0, std::round(hw / d_eps_));
            d_eps_ = hw / n_below;
        }
    }
    const int n_nodes = static_cast<int>(std::ceil(eps_max / d_eps_)) + 1;
    eps_max_ = (n_nodes - 1) * d_eps_;
    rows_.resize(static_cast<std::size_t>(n_nodes) * 5);
    const auto channels = phonon_channels();
    for (int i = 0; i < n_nodes; ++i) {
        const double eps = i * d_eps_;
        for (int ch = 0; ch < 5; ++ch)
            rows_[static_cast<std::size_t>(i) * 5 + ch] =
                phonon_rate(eps, channels[static_cast<std::size_t>(ch)], params_);
    }
}

double Phonon_rate_table::rate(double eps, int ch) const {
    if (eps <= 0.0) return rows_[static_cast<std::size_t>(ch)];
    const double x = eps / d_eps_;
    const int n_last = static_cast<int>(rows_.size() / 5) - 1;
    int i = static_cast<int>(x);
    if (i >= n_last) {
        // Extrapolate linearly beyond the table; the rates are linear there.
        const auto channels = phonon_channels();
        return phonon_rate(eps, channels[static_cast<std::size_t>(ch)], params_);
    }
    const double w = x - i;
    const double lo = rows_[static_cast<std::size_t>(i) * 5 + ch];
    const double hi = rows_[static_cast<std::size_t>(i + 1) * 5 + ch];
    return lo + w * (hi - lo);
}

double Phonon_rate_table::total(double eps) const {
    double tot = 0.0;
    for (int ch = 0; ch < 5; ++ch) tot += rate(eps, ch);
    return tot;
}

namespace {

/// Scattering angle with density ∝ (1 + s·cosϑ) on [-π, π), s ∈ {-1, 0, +1}.
double sample_angle(int s, Counter_rng& rng) {
    if (s == 0) return (2.0 * rng.uniform() - 1.0) * std::numbers::pi;
    for (;;) {
        const double theta = (2.0 * rng.uniform() - 1.0) * std::numbers::pi;
        const double accept = 0.5 * (1.0 + s * std::cos(theta));
        if (rng.uniform() < accept) return theta;
    }
}

} // namespace

Vec2 sample_phonon_final_state(const Vec2& k, const Phonon_channel& channel,
                               const Material_params& m, Counter_rng& rng) {
    const double k_norm = k.norm();
    if (!(k_norm > 0.0))
        throw std::domain_error("sample_phonon_final_state: |k| = 0");
    const double eps = m.gamma * k_norm;
    const double eps_final = eps + channel.energy_shift(m);
    if (eps_final < 0.0)
        throw std::logic_error(
            "sample_phonon_final_state: emission below threshold (rate must be 0)");
    const int s = channel.kind == Phonon_kind::acoustic_elastic ? +1
                  : channel.kind == Phonon_kind::k_phonon       ? -1
                                                                : 0;
    const double theta = sample_angle(s, rng);
    const double ct = std::cos(theta), st = std::sin(theta);
    const Vec2 dir(ct * k.x() - st * k.y(), st * k.x() + ct * k.y());
    return (eps_final / (m.gamma * k_norm)) * dir;
}

} // namespace gdsmc
