#pragma once

#include "perspec/geometry.hpp"

#include <cstddef>
#include <stdexcept>
#include <variant>
#include <vector>

namespace perspec {

struct CircleObstacle {
    Vec2d center;
    double radius;
};

/// Thin wall segment; both faces reflect returns.
struct SegmentObstacle {
    Vec2d a;
    Vec2d b;
};

using Obstacle = std::variant<CircleObstacle, SegmentObstacle>;

struct Scene {
    std::vector<Obstacle> obstacles;

    void add(const CircleObstacle& c) {
        require_finite(c.center, "CircleObstacle.center");
        if (!(c.radius > 0.0)) throw std::invalid_argument("CircleObstacle: radius must be positive");
        obstacles.emplace_back(c);
    }
    void add(const SegmentObstacle& s) {
        require_finite(s.a, "SegmentObstacle.a");
        require_finite(s.b, "SegmentObstacle.b");
        if (s.a == s.b) throw std::invalid_argument("SegmentObstacle: endpoints coincide");
        obstacles.emplace_back(s);
    }
};

/// Rotating-sensor scan: rays uniformly spaced in azimuth over a full turn.
/// The grid can be phase-shifted with start_azimuth; the implied angular
/// density is num_rays / 2pi points per radian.
struct ScanConfig {
    int num_rays = 360;
    double max_range = 100.0;
    double start_azimuth = 0.0;
};

/// Azimuth-ordered returns in the world frame, tagged with the scanning pose.
/// Misses produce no entry, so size() can be below num_rays.
struct PointCloud {
    std::vector<Vec2d> points;
    Pose2<double> source;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

}  // namespace perspec
