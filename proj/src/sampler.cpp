#include "perspec/sampler.hpp"

#include "perspec/parallel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace perspec {
namespace {

constexpr double kNoHit = std::numeric_limits<double>::infinity();

// Ray parameter of the nearest intersection with a circle, or +inf.
// Quadratic t^2 + 2 b t + c0 = 0; the smaller root comes from the product of
// roots so grazing rays near tangency keep full precision.
double ray_circle(const Vec2d& origin, const Vec2d& dir, const CircleObstacle& circle) {
    const Vec2d oc = origin - circle.center;
    const double b = oc.dot(dir);
    const double c0 = oc.squaredNorm() - circle.radius * circle.radius;
    const double disc = b * b - c0;
    if (disc < 0.0) return kNoHit;
    const double t_far = -b + std::sqrt(disc);
    if (t_far < 0.0) return kNoHit;  // circle entirely behind the origin
    const double t_near = (t_far != 0.0) ? c0 / t_far : 0.0;
    return (t_near >= 0.0) ? t_near : t_far;  // t_far covers an origin inside the circle
}

// Ray parameter of the intersection with a segment, or +inf. Both faces hit.
double ray_segment(const Vec2d& origin, const Vec2d& dir, const SegmentObstacle& seg) {
    const Vec2d e = seg.b - seg.a;
    const double denom = dir.x() * e.y() - dir.y() * e.x();
    if (denom == 0.0) return kNoHit;  // parallel (collinear grazing counts as a miss)
    const Vec2d m = seg.a - origin;
    const double t = (m.x() * e.y() - m.y() * e.x()) / denom;
    const double s = (m.x() * dir.y() - m.y() * dir.x()) / -denom;
    if (t < 0.0 || s < 0.0 || s > 1.0) return kNoHit;
    return t;
}

double nearest_hit(const Vec2d& origin, const Vec2d& dir, const Scene& scene, double max_range) {
    double best = kNoHit;
    for (const Obstacle& obstacle : scene.obstacles) {
        const double t = std::visit(
            [&](const auto& shape) {
                using T = std::decay_t<decltype(shape)>;
                if constexpr (std::is_same_v<T, CircleObstacle>)
                    return ray_circle(origin, dir, shape);
                else
                    return ray_segment(origin, dir, shape);
            },
            obstacle);
        if (t < best) best = t;
    }
    return (best <= max_range) ? best : kNoHit;
}

bool point_strictly_inside(const Vec2d& p, const CircleObstacle& c) {
    return (p - c.center).norm() < c.radius;
}

bool point_on_segment(const Vec2d& p, const SegmentObstacle& s) {
    const Vec2d e = s.b - s.a;
    const Vec2d m = p - s.a;
    const double cross = e.x() * m.y() - e.y() * m.x();
    if (cross != 0.0) return false;
    const double along = m.dot(e);
    return along >= 0.0 && along <= e.squaredNorm();
}

void validate_scan_inputs(const Pose2<double>& pose, const Scene& scene, const ScanConfig& config) {
    require_finite(pose.position, "scan: pose.position");
    if (!std::isfinite(pose.heading)) throw std::invalid_argument("scan: non-finite heading");
    if (config.num_rays < 1) throw std::invalid_argument("scan: num_rays must be >= 1");
    if (!(config.max_range > 0.0)) throw std::invalid_argument("scan: max_range must be positive");
    if (!std::isfinite(config.start_azimuth)) throw std::invalid_argument("scan: non-finite start_azimuth");
    for (const Obstacle& obstacle : scene.obstacles) {
        const bool blocked = std::visit(
            [&](const auto& shape) {
                using T = std::decay_t<decltype(shape)>;
                if constexpr (std::is_same_v<T, CircleObstacle>)
                    return point_strictly_inside(pose.position, shape);
                else
                    return point_on_segment(pose.position, shape);
            },
            obstacle);
        if (blocked) throw std::invalid_argument("scan: pose lies inside an obstacle");
    }
}

}  // namespace

std::optional<Vec2d> cast_ray(const Vec2d& origin, double azimuth, const Scene& scene,
                              double max_range) {
    const Vec2d dir = unit_vector(azimuth);
    const double t = nearest_hit(origin, dir, scene, max_range);
    if (t == kNoHit) return std::nullopt;
    return origin + t * dir;
}

PointCloud scan(const Pose2<double>& pose, const Scene& scene, const ScanConfig& config) {
    validate_scan_inputs(pose, scene, config);

    const std::size_t n = static_cast<std::size_t>(config.num_rays);
    const double step = kTwoPi / static_cast<double>(n);
    const double base = pose.heading + config.start_azimuth - kPi;

    // Chunks cover contiguous azimuth ranges; concatenating local buffers in
    // chunk order keeps the cloud azimuth-ordered for any worker count.
    const std::size_t n_chunks = std::min<std::size_t>(n, 64);
    const std::size_t per_chunk = (n + n_chunks - 1) / n_chunks;
    std::vector<std::vector<Vec2d>> buffers(n_chunks);

    parallel_chunks(n_chunks, 1, [&](std::size_t chunk_begin, std::size_t chunk_end) {
        for (std::size_t chunk = chunk_begin; chunk < chunk_end; ++chunk) {
            const std::size_t lo = chunk * per_chunk;
            const std::size_t hi = std::min(n, lo + per_chunk);
            std::vector<Vec2d>& out = buffers[chunk];
            for (std::size_t k = lo; k < hi; ++k) {
                const double azimuth = base + static_cast<double>(k) * step;
                const Vec2d dir(std::cos(azimuth), std::sin(azimuth));
                const double t = nearest_hit(pose.position, dir, scene, config.max_range);
                if (t != kNoHit) out.push_back(pose.position + t * dir);
            }
        }
    });

    PointCloud cloud;
    cloud.source = pose;
    std::size_t total = 0;
    for (const auto& buf : buffers) total += buf.size();
    cloud.points.reserve(total);
    for (const auto& buf : buffers) cloud.points.insert(cloud.points.end(), buf.begin(), buf.end());
    return cloud;
}

Vec2d cloud_mean(const PointCloud& cloud) {
    if (cloud.empty()) throw std::domain_error("cloud_mean: empty point cloud");
    // Neumaier-compensated sums keep the mean independent of point count at
    // oracle tolerances.
    double sum[2] = {0.0, 0.0};
    double comp[2] = {0.0, 0.0};
    for (const Vec2d& p : cloud.points) {
        for (int i = 0; i < 2; ++i) {
            const double v = p[i];
            const double t = sum[i] + v;
            if (std::abs(sum[i]) >= std::abs(v))
                comp[i] += (sum[i] - t) + v;
            else
                comp[i] += (v - t) + sum[i];
            sum[i] = t;
        }
    }
    const double n = static_cast<double>(cloud.size());
    return Vec2d((sum[0] + comp[0]) / n, (sum[1] + comp[1]) / n);
}

}  // namespace perspec
