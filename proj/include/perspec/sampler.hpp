#pragma once

#include "perspec/geometry.hpp"
#include "perspec/scene.hpp"

#include <optional>

namespace perspec {

/// Nearest intersection of a ray with the scene within max_range, or nullopt
/// on a miss. Nearest-hit semantics produce self-occlusion and inter-object
/// shadowing without extra logic.
std::optional<Vec2d> cast_ray(const Vec2d& origin, double azimuth, const Scene& scene,
                              double max_range);

/// Full-turn scan from a pose: one ray per uniformly spaced azimuth, misses
/// dropped, hits kept in azimuth order. Throws if the pose sits inside a
/// circle or exactly on a wall.
PointCloud scan(const Pose2<double>& pose, const Scene& scene, const ScanConfig& config);

/// Arithmetic mean of the returns. Throws on an empty cloud.
Vec2d cloud_mean(const PointCloud& cloud);

}  // namespace perspec
