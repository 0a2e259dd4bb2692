#pragma once

#include "perspec/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace perspec {

/// Cylindrical column, top view: a circle of the given radius.
template <typename Scalar>
struct CylinderSpec {
    Scalar radius;
    Vec2<Scalar> center = Vec2<Scalar>::Zero();
};

/// Viewing geometry of a cylinder: distance from the sensor to the center
/// and the world-frame bearing of the center as seen from the sensor.
template <typename Scalar>
struct CylinderView {
    Scalar range;    // |LO|, >= radius
    Scalar bearing;  // direction of O from L
};

/// Half-width of the azimuth interval over which the cylinder is visible,
/// asin(radius / range). The visible window is symmetric about the sight line.
template <typename Scalar>
Scalar limit_angle(Scalar radius, Scalar range) {
    if (!(radius > Scalar(0)) || !std::isfinite(range))
        throw std::domain_error("limit_angle: radius must be positive and range finite");
    if (range < radius)
        throw std::domain_error("limit_angle: sensor inside cylinder (range < radius)");
    return std::asin(radius / range);
}

/// Distance, projected on the sight line, from the sensor to the surface point
/// hit by a ray at angle theta off the sight line. Only the near intersection
/// is returned; the ray must fall inside the visible window.
template <typename Scalar>
Scalar surface_point_x(Scalar theta, Scalar range, Scalar radius) {
    const Scalar c = std::cos(theta);
    const Scalar s = std::sin(theta);
    Scalar under = radius * radius - s * s * range * range;
    // Tangency rounding: a ray at exactly the limit angle may land a hair
    // outside after rounding.
    if (under < Scalar(0)) {
        if (under < Scalar(-1e-12) * radius * radius)
            throw std::domain_error("surface_point_x: ray misses cylinder (|theta| > limit angle)");
        under = Scalar(0);
    }
    return range * c * c - c * std::sqrt(under);
}

/// Distance from the sensor to the point-cloud mean along the sight line,
/// assuming dense azimuth-uniform sampling of the visible arc.
template <typename Scalar>
Scalar mean_along_axis(Scalar range, Scalar radius) {
    const Scalar half_window = limit_angle(radius, range);
    const Scalar s = std::sin(half_window);
    const Scalar c = std::cos(half_window);
    return Scalar(0.5) * range *
           (Scalar(1) + (s / half_window) * (c - Scalar(0.5) * Scalar(kPi) * s));
}

/// Bundle of the axial mean distance and the mean position in the world frame.
template <typename Scalar>
struct CylinderMean {
    Scalar along_axis;    // distance from L to the mean, along the sight line
    Vec2<Scalar> world;   // mean position in the world frame
};

/// World-frame location of the point-cloud mean: the mean sits on the sight
/// line, short of the center by (range - along_axis).
template <typename Scalar>
Vec2<Scalar> cylinder_mean_world(const CylinderView<Scalar>& view, const CylinderSpec<Scalar>& spec) {
    const Scalar x_bar = mean_along_axis(view.range, spec.radius);
    return spec.center - (view.range - x_bar) * unit_vector(view.bearing);
}

template <typename Scalar>
CylinderMean<Scalar> cylinder_mean(const CylinderView<Scalar>& view, const CylinderSpec<Scalar>& spec) {
    return {mean_along_axis(view.range, spec.radius), cylinder_mean_world(view, spec)};
}

/// Change in the point-cloud mean between two viewpoints, with the cylinder
/// center as the common reference. The perspective error of a mean-aligning
/// matcher is the negation of this shift.
template <typename Scalar>
Vec2<Scalar> cylinder_mean_shift(const CylinderView<Scalar>& view1, const CylinderView<Scalar>& view2,
                                 const CylinderSpec<Scalar>& spec) {
    return cylinder_mean_world(view2, spec) - cylinder_mean_world(view1, spec);
}

/// Derives the viewing geometry from the sensor position.
template <typename Scalar>
CylinderView<Scalar> cylinder_view_from_world(const CylinderSpec<Scalar>& spec, const Vec2<Scalar>& sensor) {
    const PolarCoord<Scalar> polar = to_polar(sensor, spec.center);
    return {polar.range, polar.bearing};
}

}  // namespace perspec
