#pragma once

#include "perspec/geometry.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace perspec {

/// Free-standing corner: two thin walls of equal length meeting at a vertex.
/// Both faces of each wall reflect returns.
template <typename Scalar>
struct CornerSpec {
    Scalar wall_length;
    Vec2<Scalar> vertex = Vec2<Scalar>::Zero();
    std::array<Scalar, 2> wall_dirs{};  // world-frame angles of the walls leaving the vertex
};

/// Viewing geometry of a corner. Wall angles are relative to the sight line
/// (sensor to vertex), counterclockwise-positive, in (-pi, pi]. The wall with
/// the larger magnitude tilts back toward the sensor and is the nearer one;
/// it is stored first.
template <typename Scalar>
struct CornerView {
    Scalar range;     // |LO|
    Scalar bearing;   // world-frame direction of the vertex from the sensor
    Scalar near_wall; // psi of the nearer wall, |near_wall| >= |far_wall|
    Scalar far_wall;  // psi of the farther wall
};

enum class Blockage { kNone, kFull, kPartial };

/// Result of the wall visibility analysis: the two wall integrals and the
/// total subtended angle of the visible surface.
template <typename Scalar>
struct WallVisibility {
    Blockage blockage;
    Scalar near_integral;  // g for the nearer wall
    Scalar far_integral;   // g for the farther wall (0 under full blockage)
    Scalar span;           // theta_U - theta_L, total subtended angle
};

namespace detail {

template <typename Scalar>
int sign_of(Scalar v) {
    return (v > Scalar(0)) - (v < Scalar(0));
}

// A wall leaving the vertex at relative angle psi reaches the sensor only when
// it points straight back (|psi| = pi) and is at least as long as the range.
template <typename Scalar>
void require_wall_clear_of_sensor(Scalar range, Scalar wall_length, Scalar psi) {
    if (std::abs(psi) == Scalar(kPi) && wall_length >= range)
        throw std::domain_error("corner: wall segment passes through the sensor");
}

}  // namespace detail

/// Sight-line-relative angle of a wall's far endpoint. Uses a two-argument
/// arctangent so endpoints behind the sensor's lateral line resolve to obtuse
/// angles; the result carries the sign of psi.
template <typename Scalar>
Scalar wall_endpoint_angle(Scalar range, Scalar wall_length, Scalar psi) {
    const Scalar y = wall_length * std::sin(psi);
    const Scalar x = range + wall_length * std::cos(psi);
    if (x == Scalar(0) && y == Scalar(0))
        throw std::domain_error("wall_endpoint_angle: endpoint coincides with the sensor");
    Scalar a = std::atan2(y, x);
    if (a <= Scalar(-kPi)) a += Scalar(kTwoPi);
    return a;
}

/// Integral of the fractional wall coordinate over ray angle, from the vertex
/// ray out to theta_end. theta_end and psi carry matching signs; an edge-on
/// wall (psi = 0) subtends nothing and integrates to zero.
template <typename Scalar>
Scalar wall_integral_h(Scalar theta_end, Scalar psi, Scalar range) {
    if (psi == Scalar(0) || theta_end == Scalar(0)) return Scalar(0);
    if (detail::sign_of(theta_end) != detail::sign_of(psi))
        throw std::domain_error("wall_integral_h: theta_end and psi must have matching signs");
    // Single log of the ratio; a non-positive ratio means theta_end walked
    // past the wall direction, which no valid endpoint angle can reach.
    const Scalar ratio = std::sin(psi - theta_end) / std::sin(psi);
    if (!(ratio > Scalar(0)))
        throw std::domain_error("wall_integral_h: ray range extends past the wall direction");
    return -range * (std::abs(theta_end) * std::cos(psi) +
                     std::sin(std::abs(psi)) * std::log(ratio));
}

/// Visibility of the two walls: either both are seen in full (opposite sides
/// of the sight line), or the nearer wall hides the farther one in full or in
/// part (same side). Comparisons use magnitudes so the mirrored negative-side
/// geometry classifies identically.
template <typename Scalar>
WallVisibility<Scalar> classify_visibility(const CornerView<Scalar>& view, Scalar wall_length) {
    const Scalar psi1 = view.near_wall;
    const Scalar psi2 = view.far_wall;
    if (std::abs(psi1) < std::abs(psi2))
        throw std::invalid_argument("classify_visibility: near wall must have |psi| >= far wall");
    detail::require_wall_clear_of_sensor(view.range, wall_length, psi1);
    detail::require_wall_clear_of_sensor(view.range, wall_length, psi2);

    const Scalar we1 = wall_endpoint_angle(view.range, wall_length, psi1);
    const Scalar we2 = wall_endpoint_angle(view.range, wall_length, psi2);

    if (detail::sign_of(psi1) != detail::sign_of(psi2)) {
        return {Blockage::kNone,
                wall_integral_h(we1, psi1, view.range),
                wall_integral_h(we2, psi2, view.range),
                std::abs(we1) + std::abs(we2)};
    }
    if (std::abs(we1) >= std::abs(we2)) {
        return {Blockage::kFull, wall_integral_h(we1, psi1, view.range), Scalar(0), std::abs(we1)};
    }
    // Partial blockage: the far wall is visible only beyond the near wall's
    // endpoint ray.
    return {Blockage::kPartial,
            wall_integral_h(we1, psi1, view.range),
            wall_integral_h(we2, psi2, view.range) - wall_integral_h(we1, psi2, view.range),
            std::abs(we2)};
}

/// World-frame point-cloud mean of the visible corner surface under dense
/// azimuth-uniform sampling.
template <typename Scalar>
Vec2<Scalar> corner_mean(const CornerView<Scalar>& view, const CornerSpec<Scalar>& spec) {
    const WallVisibility<Scalar> vis = classify_visibility(view, spec.wall_length);
    if (!(vis.span > Scalar(0)))
        throw std::domain_error("corner_mean: degenerate view, both walls edge-on");
    const Vec2<Scalar> u1 = unit_vector(view.near_wall + view.bearing);
    const Vec2<Scalar> u2 = unit_vector(view.far_wall + view.bearing);
    return spec.vertex + (vis.near_integral * u1 + vis.far_integral * u2) / vis.span;
}

/// Change in the corner's point-cloud mean between two viewpoints. The
/// perspective error of a mean-aligning matcher is the negation of this shift.
template <typename Scalar>
Vec2<Scalar> corner_mean_shift(const CornerView<Scalar>& view1, const CornerView<Scalar>& view2,
                               const CornerSpec<Scalar>& spec) {
    return corner_mean(view2, spec) - corner_mean(view1, spec);
}

/// Builds a view from raw wall angles, normalizing and ordering them so the
/// nearer wall (larger |psi|) comes first.
template <typename Scalar>
CornerView<Scalar> make_corner_view(Scalar range, Scalar bearing, Scalar psi_a, Scalar psi_b) {
    if (!(range > Scalar(0))) throw std::invalid_argument("make_corner_view: range must be positive");
    psi_a = normalize_angle(psi_a);
    psi_b = normalize_angle(psi_b);
    if (psi_a == psi_b)
        throw std::invalid_argument("make_corner_view: coincident walls");
    if (std::abs(psi_a) < std::abs(psi_b)) std::swap(psi_a, psi_b);
    return {range, normalize_angle(bearing), psi_a, psi_b};
}

/// Derives the viewing geometry of a corner from the sensor position.
template <typename Scalar>
CornerView<Scalar> corner_view_from_world(const CornerSpec<Scalar>& spec, const Vec2<Scalar>& sensor) {
    const PolarCoord<Scalar> polar = to_polar(sensor, spec.vertex);
    return make_corner_view(polar.range, polar.bearing,
                            normalize_angle(spec.wall_dirs[0] - polar.bearing),
                            normalize_angle(spec.wall_dirs[1] - polar.bearing));
}

}  // namespace perspec
