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
/// Screened electron-electron scattering: matrix element and the occupancy-
/// weighted rate quadratures over the final-state conics.
///
/// The out-scattering rate of an electron at k1 against the cell estimate
/// f_ij is
///
///   λ(k1) = P · Σ_ij f_ij ∫ |M̃|²(q(β), q'(β)) dΓ/dβ dβ,
///   P     = r_s² κ² v_F g_s g_v Δk² / (256 π),
///
/// where the integral runs over the ellipse (intra-band) or over the included
/// hyperbola branch(es) clipped to the k-box (inter-band), the companion k2 of
/// cell (i, j) is the cell midpoint, q = |k1-k1'|, q' = |k1-k2'|, and
///
///   |M̃|² = Ṽ(q)² + Ṽ(q')² - Ṽ(q)Ṽ(q'),
///   Ṽ(q) = (1+cos φ_{k1,k1'})(1+cos φ_{k2,k2'}) / (ε(q)q),
///
/// with the exchange potential Ṽ(q') carrying the crossed angle factors. All
/// interaction constants (e², κ, r_s, sample area) have been absorbed into P;
/// see docs/ee_rate_normalization.md for the derivation. The β mesh is
/// uniform and the quadrature trapezoidal; P·Δβ/2 is the per-node constant of
/// the fully discrete form.

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gdsmc/conic.hpp"
#include "gdsmc/material.hpp"
#include "gdsmc/screening.hpp"

namespace gdsmc {

/// |M̃|² from the two momentum transfers and the four chirality cosines.
inline double matrix_element_sq_cos(double q, double qp, double c11, double c22,
                                    double c12, double c21,
                                    const Screening_params& scr) {
    const double v1 = (1.0 + c11) * (1.0 + c22) / screened_denominator(q, scr);
    const double v2 = (1.0 + c12) * (1.0 + c21) / screened_denominator(qp, scr);
    return v1 * v1 + v2 * v2 - v1 * v2; // >= 0: x² + y² - xy = (x - y/2)² + 3y²/4
}

/// |M̃|² with the angle arguments φ_{k1,k1'}, φ_{k2,k2'}, φ_{k1,k2'},
/// φ_{k2,k1'} (unsigned angles in [0, π]).
inline double matrix_element_sq(double q, double qp, double phi11, double phi22,
                                double phi12, double phi21,
                                const Screening_params& scr) {
    return matrix_element_sq_cos(q, qp, std::cos(phi11), std::cos(phi22),
                                 std::cos(phi12), std::cos(phi21), scr);
}

/// Quadrature setup and rate prefactor. Shared by rate evaluation and, for
/// the β-weighted sampling option, by final-state selection.
struct Ee_rate_params {
    int m = 64;               ///< β nodes per conic (even, >= 8)
    double beta_max = 4.0;    ///< hyperbola parameter truncation
    double k_max = 0.0;       ///< box radius for the Ω clipping (1/nm)
    bool both_branches = false; ///< integrate/sample both hyperbola branches
    bool beta_weighted = false; ///< sample β ∝ |M̃|² dΓ/dβ instead of uniformly
    double prefactor = 0.0;   ///< P above (1/(nm ps))

    std::vector<double> cos_beta, sin_beta;       ///< intra nodes β_k = 2πk/m
    std::vector<double> cosh_beta, sinh_beta;     ///< inter nodes, m+1 points

    static Ee_rate_params make(const Material_params& mat, double delta_k, double k_max,
                               int m = 64, double beta_max = 4.0,
                               bool both_branches = false, bool beta_weighted = false) {
        if (m < 8 || m % 2 != 0)
            throw std::invalid_argument("Ee_rate_params: m must be even and >= 8");
        if (!(beta_max > 0.0))
            throw std::invalid_argument("Ee_rate_params: beta_max must be positive");
        Ee_rate_params p;
        p.m = m;
        p.beta_max = beta_max;
        p.k_max = k_max;
        p.both_branches = both_branches;
        p.beta_weighted = beta_weighted;
        p.prefactor = mat.r_s * mat.r_s * mat.kappa * mat.kappa * mat.v_F * mat.g_s *
                      mat.g_v * delta_k * delta_k / (256.0 * std::numbers::pi);
        p.cos_beta.resize(m);
        p.sin_beta.resize(m);
        for (int k = 0; k < m; ++k) {
            const double beta = 2.0 * std::numbers::pi * k / m;
            p.cos_beta[static_cast<std::size_t>(k)] = std::cos(beta);
            p.sin_beta[static_cast<std::size_t>(k)] = std::sin(beta);
        }
        p.cosh_beta.resize(m + 1);
        p.sinh_beta.resize(m + 1);
        for (int k = 0; k <= m; ++k) {
            const double beta = -beta_max + 2.0 * beta_max * k / m;
            p.cosh_beta[static_cast<std::size_t>(k)] = std::cosh(beta);
            p.sinh_beta[static_cast<std::size_t>(k)] = std::sinh(beta);
        }
        return p;
    }
};

namespace detail {

/// g̃(β) = |M̃|² dΓ/dβ for one outgoing configuration of the pair (k1, k2).
/// Zero-norm outgoing states (ellipse through the Dirac point) contribute
/// with their angle factor collapsed to 1.
inline double ee_integrand(const Vec2& k1, const Vec2& k2, double n1, double n2,
                           const Vec2& k1p, const Vec2& k2p, double arc,
                           const Screening_params& scr) {
    const double n1p = k1p.norm(), n2p = k2p.norm();
    const double q = (k1 - k1p).norm();
    const double qp = (k1 - k2p).norm();
    const double c11 = n1p > 0.0 ? k1.dot(k1p) / (n1 * n1p) : 0.0;
    const double c22 = n2p > 0.0 ? k2.dot(k2p) / (n2 * n2p) : 0.0;
    const double c12 = n2p > 0.0 ? k1.dot(k2p) / (n1 * n2p) : 0.0;
    const double c21 = n1p > 0.0 ? k2.dot(k1p) / (n2 * n1p) : 0.0;
    return matrix_element_sq_cos(q, qp, c11, c22, c12, c21, scr) * arc;
}

} // namespace detail

/// Trapezoidal ∫₀^{2π} g̃ dβ over the full ellipse (the curve is closed, so
/// all m nodes carry equal weight Δβ).
inline double intra_quadrature(const Ellipse_geom& g, const Ee_rate_params& p,
                               const Screening_params& scr) {
    const double n1 = g.k1.norm(), n2 = g.k2.norm();
    if (!(n1 > 0.0) || !(n2 > 0.0)) return 0.0;
    double acc = 0.0;
    for (int k = 0; k < p.m; ++k) {
        const double cb = p.cos_beta[static_cast<std::size_t>(k)];
        const double sb = p.sin_beta[static_cast<std::size_t>(k)];
        const double x = g.a * cb, y = g.b * sb;
        const Vec2 offset(x * g.axis.x() - y * g.axis.y(),
                          x * g.axis.y() + y * g.axis.x());
        const Vec2 k1p = g.center + offset;
        const Vec2 k2p = g.center - offset;
        acc += detail::ee_integrand(g.k1, g.k2, n1, n2, k1p, k2p, g.arc_density(sb, cb),
                                    scr);
    }
    return acc * (2.0 * std::numbers::pi / p.m);
}

/// Trapezoidal ∫ g̃ dβ over β ∈ [-β_max, β_max] of one or both hyperbola
/// branches, with nodes outside the box |k'| <= k_max dropped (Γ̂ ∩ Ω).
inline double inter_quadrature(const Hyperbola_geom& g, const Ee_rate_params& p,
                               const Screening_params& scr) {
    if (!g.feasible) return 0.0;
    const double n1 = g.k1.norm(), n2 = g.k2.norm();
    if (!(n1 > 0.0) || !(n2 > 0.0)) return 0.0;
    const double d_beta = 2.0 * p.beta_max / p.m;
    const int n_branches = (p.both_branches && !g.degenerate) ? 2 : 1;
    double acc = 0.0;
    for (int ib = 0; ib < n_branches; ++ib) {
        const int branch = ib == 0 ? g.branch : -g.branch;
        for (int k = 0; k <= p.m; ++k) {
            const double ch = p.cosh_beta[static_cast<std::size_t>(k)];
            const double sh = p.sinh_beta[static_cast<std::size_t>(k)];
            const double x = branch * g.a * ch, y = g.b * sh;
            const Vec2 offset(x * g.axis.x() - y * g.axis.y(),
                              x * g.axis.y() + y * g.axis.x());
            const Vec2 k1p = g.center + offset;
            const Vec2 k2p = g.center - offset;
            if (k1p.norm() > p.k_max || k2p.norm() > p.k_max) continue;
            const double w = (k == 0 || k == p.m) ? 0.5 : 1.0;
            acc += w * detail::ee_integrand(g.k1, g.k2, n1, n2, k1p, k2p,
                                            g.arc_density(sh, ch), scr);
        }
    }
    return acc * d_beta;
}

/// Intra-band e-e rate of a conduction (or valence) electron at k1 against
/// the same-band occupancy of `grid` (1/ps).
///
/// `early_stop`: once the accumulated rate exceeds this threshold the cell
/// loop returns immediately; the result is then a lower bound of λ that is
/// already >= early_stop, which is all the event-selection thinning needs.
///
/// GridView requires n(), occupancy(i, j, band), center(i, j).
template <class GridView>
double intra_rate(const Vec2& k1, const GridView& grid, Band band,
                  const Ee_rate_params& p, const Screening_params& scr,
                  double early_stop = std::numeric_limits<double>::infinity()) {
    const double n1 = k1.norm();
    if (!(n1 > 0.0)) return 0.0;
    const int n = grid.n();
    const double scale = p.prefactor * (2.0 * std::numbers::pi / p.m);
    const double stop_acc = early_stop / scale;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double f = grid.occupancy(i, j, band);
            if (!(f > 0.0)) continue;
            const Vec2 k2 = grid.center(i, j);
            const double n2 = k2.norm();
            if (!(n2 > 0.0)) continue;

            // Inlined ellipse_from_pair: the per-cell constant part.
            const Vec2 sum = k1 + k2;
            const double a = 0.5 * (n1 + n2);
            double c = 0.5 * sum.norm();
            if (c > a) c = a;
            const double b = std::sqrt((a - c) * (a + c));
            const Vec2 center = 0.5 * sum;
            Vec2 axis(1.0, 0.0);
            if (2.0 * c >= 1e-12 * (n1 + n2)) axis = sum / (2.0 * c);

            double cell_acc = 0.0;
            for (int k = 0; k < p.m; ++k) {
                const double cb = p.cos_beta[static_cast<std::size_t>(k)];
                const double sb = p.sin_beta[static_cast<std::size_t>(k)];
                const double x = a * cb, y = b * sb;
                const Vec2 offset(x * axis.x() - y * axis.y(),
                                  x * axis.y() + y * axis.x());
                const Vec2 k1p = center + offset;
                const Vec2 k2p = center - offset;
                const double arc =
                    std::sqrt(a * a * sb * sb + b * b * cb * cb);
                cell_acc +=
                    detail::ee_integrand(k1, k2, n1, n2, k1p, k2p, arc, scr);
            }
            acc += f * cell_acc;
            if (acc >= stop_acc) return acc * scale;
        }
    }
    return acc * scale;
}

/// Inter-band e-e rate of a conduction electron at k1 against the valence
/// occupancy of `grid` (1/ps).
template <class GridView>
double inter_rate(const Vec2& k1, const GridView& grid, const Ee_rate_params& p,
                  const Screening_params& scr,
                  double early_stop = std::numeric_limits<double>::infinity()) {
    const double n1 = k1.norm();
    if (!(n1 > 0.0)) return 0.0;
    const int n = grid.n();
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double f = grid.occupancy(i, j, Band::valence);
            if (!(f > 0.0)) continue;
            const Vec2 k2 = grid.center(i, j);
            if (!(k2.norm() > 0.0)) continue;
            const Hyperbola_geom g = hyperbola_from_pair<double>(k1, k2);
            acc += f * p.prefactor * inter_quadrature(g, p, scr);
            if (acc >= early_stop) return acc;
        }
    }
    return acc;
}

/// Analytic occupancy on the same cell layout as Occupancy_grid, for rate
/// dumps and quadrature oracles that want a noise-free f.
class Analytic_grid {
  public:
    Analytic_grid(int n_cells, double k_max)
        : n_(n_cells), k_max_(k_max), delta_k_(2.0 * k_max / n_cells) {
        f_[0].assign(static_cast<std::size_t>(n_) * n_, 0.0);
        f_[1].assign(static_cast<std::size_t>(n_) * n_, 0.0);
    }

    int n() const { return n_; }
    double delta_k() const { return delta_k_; }

    Vec2 center(int i, int j) const {
        return {-k_max_ + (i + 0.5) * delta_k_, -k_max_ + (j + 0.5) * delta_k_};
    }

    double occupancy(int i, int j, Band b) const {
        return f_[b == Band::conduction ? 0 : 1][static_cast<std::size_t>(i) * n_ + j];
    }

    void set(int i, int j, Band b, double value) {
        f_[b == Band::conduction ? 0 : 1][static_cast<std::size_t>(i) * n_ + j] = value;
    }

    /// Fill one band from f(k) evaluated at the cell midpoints.
    template <class F>
    void fill(Band b, F&& f) {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) set(i, j, b, f(center(i, j)));
    }

  private:
    int n_;
    double k_max_;
    double delta_k_;
    std::vector<double> f_[2];
};

} // namespace gdsmc
