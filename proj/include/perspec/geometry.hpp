#pragma once

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>

namespace perspec {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

using Vec2d = Vec2<double>;

/// Wraps an angle into (-pi, pi], counterclockwise-positive.
template <typename Scalar>
Scalar normalize_angle(Scalar angle) {
    Scalar a = std::remainder(angle, Scalar(kTwoPi));
    if (a <= Scalar(-kPi)) a += Scalar(kTwoPi);
    return a;
}

/// Unit vector at the given angle from the +x axis.
template <typename Scalar>
Vec2<Scalar> unit_vector(Scalar angle) {
    return Vec2<Scalar>(std::cos(angle), std::sin(angle));
}

template <typename Scalar>
bool is_finite(const Vec2<Scalar>& v) {
    return std::isfinite(v.x()) && std::isfinite(v.y());
}

template <typename Scalar>
void require_finite(const Vec2<Scalar>& v, const char* what) {
    if (!is_finite(v)) throw std::invalid_argument(std::string(what) + ": non-finite components");
}

/// Sensor pose: position plus heading in (-pi, pi], 0 = +x axis.
template <typename Scalar>
struct Pose2 {
    Vec2<Scalar> position = Vec2<Scalar>::Zero();
    Scalar heading{};
};

template <typename Scalar>
Pose2<Scalar> make_pose(const Vec2<Scalar>& position, Scalar heading) {
    require_finite(position, "Pose2.position");
    if (!std::isfinite(heading)) throw std::invalid_argument("Pose2.heading: non-finite");
    return Pose2<Scalar>{position, normalize_angle(heading)};
}

/// Rotation followed by translation: p' = R(rotation) p + translation.
template <typename Scalar>
struct RigidTransform2 {
    Scalar rotation{};
    Vec2<Scalar> translation = Vec2<Scalar>::Zero();
};

template <typename Scalar>
Vec2<Scalar> transform_point(const RigidTransform2<Scalar>& t, const Vec2<Scalar>& p) {
    const Scalar c = std::cos(t.rotation);
    const Scalar s = std::sin(t.rotation);
    return Vec2<Scalar>(c * p.x() - s * p.y() + t.translation.x(),
                        s * p.x() + c * p.y() + t.translation.y());
}

template <typename Scalar>
RigidTransform2<Scalar> inverse(const RigidTransform2<Scalar>& t) {
    const Scalar c = std::cos(t.rotation);
    const Scalar s = std::sin(t.rotation);
    // R(-a) * (-translation)
    return RigidTransform2<Scalar>{-t.rotation,
                                   Vec2<Scalar>(-(c * t.translation.x() + s * t.translation.y()),
                                                -(-s * t.translation.x() + c * t.translation.y()))};
}

template <typename Scalar>
struct PolarCoord {
    Scalar range;
    Scalar bearing;  // (-pi, pi]
};

/// Polar coordinates of p as seen from origin. Throws if the points coincide
/// (the direction is undefined there).
template <typename Scalar>
PolarCoord<Scalar> to_polar(const Vec2<Scalar>& origin, const Vec2<Scalar>& p) {
    const Vec2<Scalar> d = p - origin;
    const Scalar r = d.norm();
    if (r == Scalar(0)) throw std::domain_error("to_polar: coincident points");
    Scalar bearing = std::atan2(d.y(), d.x());
    if (bearing <= Scalar(-kPi)) bearing += Scalar(kTwoPi);
    return {r, bearing};
}

template <typename Scalar>
Vec2<Scalar> from_polar(const Vec2<Scalar>& origin, Scalar range, Scalar bearing) {
    return origin + range * unit_vector(bearing);
}

}  // namespace perspec
