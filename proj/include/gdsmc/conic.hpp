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
/// Conic-section kinematics of binary e-e collisions.
///
/// With linear bands, conservation of total wave vector and of total |k|
/// confines the outgoing pair of an intra-band collision to an ellipse whose
/// foci are the Dirac point and k1+k2; the inter-band signed law |k1'|-|k2'| =
/// |k1|-|k2| puts them on one branch of the analogous hyperbola. Both conics
/// are parametrized in a frame centered halfway between the foci with the
/// major axis along k1+k2, so a point at parameter β immediately yields both
/// outgoing wave vectors and conservation holds by construction.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <Eigen/Core>

namespace gdsmc {

template <typename Scalar>
struct Ellipse_geom_t {
    using V = Eigen::Matrix<Scalar, 2, 1>;
    Scalar a = 0; ///< major semi-axis = (|k1|+|k2|)/2
    Scalar b = 0; ///< minor semi-axis
    Scalar c = 0; ///< focal half-distance = |k1+k2|/2
    V center = V::Zero();
    V axis = V::UnitX(); ///< unit vector of the major axis (cos θ, sin θ)
    V k1 = V::Zero(), k2 = V::Zero();
    bool degenerate = false; ///< collinear pair, b ≈ 0 (zero transverse measure)

    Scalar theta() const { return std::atan2(axis.y(), axis.x()); }

    /// Arc-length density dΓ/dβ = sqrt(a² sin²β + b² cos²β).
    Scalar arc_density(Scalar sin_b, Scalar cos_b) const {
        return std::sqrt(a * a * sin_b * sin_b + b * b * cos_b * cos_b);
    }
};

using Ellipse_geom = Ellipse_geom_t<double>;

/// Ellipse of outgoing states for the incoming pair (k1, k2).
/// Throws std::domain_error when both wave vectors vanish.
template <typename Scalar>
Ellipse_geom_t<Scalar> ellipse_from_pair(const Eigen::Matrix<Scalar, 2, 1>& k1,
                                         const Eigen::Matrix<Scalar, 2, 1>& k2) {
    Ellipse_geom_t<Scalar> g;
    g.k1 = k1;
    g.k2 = k2;
    const Scalar n1 = k1.norm(), n2 = k2.norm();
    if (!(n1 + n2 > Scalar(0)))
        throw std::domain_error("ellipse_from_pair: degenerate pair k1 = k2 = 0");
    const Eigen::Matrix<Scalar, 2, 1> sum = k1 + k2;
    g.a = (n1 + n2) / Scalar(2);
    g.c = sum.norm() / Scalar(2);
    if (g.c > g.a) g.c = g.a; // rounding guard; c <= a by the triangle inequality
    g.b = std::sqrt((g.a - g.c) * (g.a + g.c));
    g.center = sum / Scalar(2);
    g.axis = (sum.norm() < Scalar(1e-12) * (n1 + n2))
                 ? Eigen::Matrix<Scalar, 2, 1>::UnitX()
                 : Eigen::Matrix<Scalar, 2, 1>(sum / sum.norm());
    g.degenerate = g.b < Scalar(1e-9) * g.a;
    return g;
}

/// Outgoing pair (k1', k2') at ellipse parameter β. k1'+k2' equals k1+k2
/// exactly; |k1'|+|k2'| equals 2a up to rounding.
template <typename Scalar>
std::pair<Eigen::Matrix<Scalar, 2, 1>, Eigen::Matrix<Scalar, 2, 1>>
intra_final_state(const Ellipse_geom_t<Scalar>& g, Scalar beta) {
    const Scalar cb = std::cos(beta), sb = std::sin(beta);
    const Scalar x = g.a * cb, y = g.b * sb;
    const Eigen::Matrix<Scalar, 2, 1> offset(x * g.axis.x() - y * g.axis.y(),
                                             x * g.axis.y() + y * g.axis.x());
    return {g.center + offset, g.center - offset};
}

/// Ellipse parameter of a point p on (or near) the conic, such that
/// intra_final_state(g, beta_of_point(g, p)).first reproduces p.
template <typename Scalar>
Scalar beta_of_point(const Ellipse_geom_t<Scalar>& g,
                     const Eigen::Matrix<Scalar, 2, 1>& p) {
    const Eigen::Matrix<Scalar, 2, 1> u = p - g.center;
    const Scalar x = u.dot(g.axis);
    const Scalar y = -u.x() * g.axis.y() + u.y() * g.axis.x();
    if (g.b == Scalar(0)) return x >= Scalar(0) ? Scalar(0) : std::numbers::pi_v<Scalar>;
    return std::atan2(y / g.b, x / g.a);
}

template <typename Scalar>
struct Hyperbola_geom_t {
    using V = Eigen::Matrix<Scalar, 2, 1>;
    Scalar a = 0; ///< major semi-axis = ||k1|-|k2||/2
    Scalar b = 0; ///< minor semi-axis, c² = a² + b²
    Scalar c = 0; ///< focal half-distance = |k1+k2|/2
    V center = V::Zero();
    V axis = V::UnitX();
    V k1 = V::Zero(), k2 = V::Zero();
    int branch = +1;         ///< sign-consistent branch: +1 when |k1| > |k2|
    bool degenerate = false; ///< |k1| = |k2|: locus is the perpendicular bisector
    bool feasible = true;

    Scalar theta() const { return std::atan2(axis.y(), axis.x()); }

    /// dΓ/dβ = sqrt(a² sinh²β + b² cosh²β).
    Scalar arc_density(Scalar sinh_b, Scalar cosh_b) const {
        return std::sqrt(a * a * sinh_b * sinh_b + b * b * cosh_b * cosh_b);
    }
};

using Hyperbola_geom = Hyperbola_geom_t<double>;

/// Hyperbola of outgoing states for an inter-band pair with k1 in the
/// conduction and k2 in the valence band. Foci at the Dirac point and k1+k2.
template <typename Scalar>
Hyperbola_geom_t<Scalar> hyperbola_from_pair(const Eigen::Matrix<Scalar, 2, 1>& k1,
                                             const Eigen::Matrix<Scalar, 2, 1>& k2) {
    Hyperbola_geom_t<Scalar> g;
    g.k1 = k1;
    g.k2 = k2;
    const Scalar n1 = k1.norm(), n2 = k2.norm();
    const Eigen::Matrix<Scalar, 2, 1> sum = k1 + k2;
    g.a = std::abs(n1 - n2) / Scalar(2);
    g.c = sum.norm() / Scalar(2);
    if (g.c < g.a) {
        // Unreachable for finite inputs (|k1+k2| >= ||k1|-|k2||); kept as the
        // empty-geometry contract for corrupt inputs.
        g.feasible = false;
        return g;
    }
    g.b = std::sqrt((g.c - g.a) * (g.c + g.a));
    g.center = sum / Scalar(2);
    g.axis = (sum.norm() < Scalar(1e-12) * (n1 + n2 + Scalar(1)))
                 ? Eigen::Matrix<Scalar, 2, 1>::UnitX()
                 : Eigen::Matrix<Scalar, 2, 1>(sum / sum.norm());
    g.branch = n1 >= n2 ? +1 : -1;
    g.degenerate = g.a < Scalar(1e-12) * (n1 + n2);
    return g;
}

/// Outgoing pair at hyperbola parameter β on the given branch (+1: x' = +a
/// cosh β, the branch hugging the focus k1+k2). k1' + k2' = k1 + k2 exactly;
/// on the sign-consistent branch |k1'|-|k2'| = |k1|-|k2| up to rounding.
template <typename Scalar>
std::pair<Eigen::Matrix<Scalar, 2, 1>, Eigen::Matrix<Scalar, 2, 1>>
inter_final_state(const Hyperbola_geom_t<Scalar>& g, Scalar beta, int branch) {
    const Scalar ch = std::cosh(beta), sh = std::sinh(beta);
    const Scalar x = static_cast<Scalar>(branch) * g.a * ch, y = g.b * sh;
    const Eigen::Matrix<Scalar, 2, 1> offset(x * g.axis.x() - y * g.axis.y(),
                                             x * g.axis.y() + y * g.axis.x());
    return {g.center + offset, g.center - offset};
}

} // namespace gdsmc
