#include "perspec/experiments.hpp"

#include "perspec/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace perspec {
namespace {

std::vector<double> sweep_positions(const DriveByScenario& s) {
    if (!(s.step > 0.0)) throw std::invalid_argument("drive-by: step must be positive");
    if (!(s.x_start < s.x_end)) throw std::invalid_argument("drive-by: x_start must precede x_end");
    const auto count = static_cast<std::size_t>(std::llround((s.x_end - s.x_start) / s.step)) + 1;
    std::vector<double> xs(count);
    for (std::size_t k = 0; k < count; ++k) xs[k] = s.x_start + static_cast<double>(k) * s.step;
    return xs;
}

// Proper segment intersection including touching endpoints.
bool segments_cross(const Vec2d& p1, const Vec2d& p2, const Vec2d& q1, const Vec2d& q2) {
    const auto orient = [](const Vec2d& a, const Vec2d& b, const Vec2d& c) {
        const double v = (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
        return (v > 0.0) - (v < 0.0);
    };
    const int o1 = orient(p1, p2, q1);
    const int o2 = orient(p1, p2, q2);
    const int o3 = orient(q1, q2, p1);
    const int o4 = orient(q1, q2, p2);
    if (o1 != o2 && o3 != o4) return true;
    const auto on = [&](const Vec2d& a, const Vec2d& b, const Vec2d& c) {
        return orient(a, b, c) == 0 && c.x() >= std::min(a.x(), b.x()) &&
               c.x() <= std::max(a.x(), b.x()) && c.y() >= std::min(a.y(), b.y()) &&
               c.y() <= std::max(a.y(), b.y());
    };
    return on(p1, p2, q1) || on(p1, p2, q2) || on(q1, q2, p1) || on(q1, q2, p2);
}

}  // namespace

CornerSpec<double> corner_preset_spec(CornerPreset preset, double lateral_offset) {
    CornerSpec<double> spec;
    spec.wall_length = 1.0;
    spec.vertex = Vec2d(0.0, lateral_offset);
    switch (preset) {
        case CornerPreset::kConvexV:
            spec.wall_dirs = {3.0 * kPi / 4.0, kPi / 4.0};
            break;
        case CornerPreset::kLShape:
            spec.wall_dirs = {kPi / 2.0, 0.0};
            break;
        case CornerPreset::kConcave:
            spec.wall_dirs = {-3.0 * kPi / 4.0, -kPi / 4.0};
            break;
    }
    return spec;
}

ErrorSeries cylinder_drive_by(const DriveByScenario& scenario) {
    if (scenario.lateral_offset < 1.0)
        throw std::invalid_argument("cylinder_drive_by: lateral offset below the radius puts the sensor inside the cylinder");
    const CylinderSpec<double> spec{1.0, Vec2d(0.0, scenario.lateral_offset)};
    const std::vector<double> xs = sweep_positions(scenario);

    ErrorSeries series;
    series.x = xs;
    series.eps_x.resize(xs.size());
    series.eps_y.resize(xs.size());
    const Vec2d initial =
        cylinder_mean_world(cylinder_view_from_world(spec, Vec2d(xs.front(), 0.0)), spec);
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const Vec2d mean =
            cylinder_mean_world(cylinder_view_from_world(spec, Vec2d(xs[k], 0.0)), spec);
        const Vec2d eps = -(mean - initial);
        series.eps_x[k] = eps.x();
        series.eps_y[k] = eps.y();
    }
    return series;
}

ErrorSeries corner_drive_by(const DriveByScenario& scenario, CornerPreset preset) {
    const CornerSpec<double> spec = corner_preset_spec(preset, scenario.lateral_offset);
    const std::vector<double> xs = sweep_positions(scenario);

    const Vec2d track_a(scenario.x_start, 0.0);
    const Vec2d track_b(xs.back(), 0.0);
    for (double dir : spec.wall_dirs) {
        const Vec2d tip = spec.vertex + spec.wall_length * unit_vector(dir);
        if (segments_cross(track_a, track_b, spec.vertex, tip))
            throw std::invalid_argument("corner_drive_by: trajectory intersects a wall");
    }

    ErrorSeries series;
    series.x = xs;
    series.eps_x.resize(xs.size());
    series.eps_y.resize(xs.size());
    const Vec2d initial = corner_mean(corner_view_from_world(spec, track_a), spec);
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const Vec2d mean = corner_mean(corner_view_from_world(spec, Vec2d(xs[k], 0.0)), spec);
        const Vec2d eps = -(mean - initial);
        series.eps_x[k] = eps.x();
        series.eps_y[k] = eps.y();
    }
    return series;
}

double viewing_angle_change(const Vec2d& object, double baseline) {
    if (!(baseline > 0.0)) throw std::invalid_argument("viewing_angle_change: baseline must be positive");
    const Vec2d from_first = object + Vec2d(baseline / 2.0, 0.0);
    const Vec2d from_second = object - Vec2d(baseline / 2.0, 0.0);
    const double n1 = from_first.norm();
    const double n2 = from_second.norm();
    if (n1 == 0.0 || n2 == 0.0)
        throw std::domain_error("viewing_angle_change: object coincides with a viewpoint");
    const double c = std::clamp(from_first.dot(from_second) / (n1 * n2), -1.0, 1.0);
    return std::acos(c);
}

AngleField viewing_angle_field(double half_extent_x, double half_extent_y, int res_x, int res_y,
                               double baseline) {
    if (res_x < 2 || res_y < 2)
        throw std::invalid_argument("viewing_angle_field: resolution must be >= 2 per axis");
    if (!(half_extent_x > 0.0) || !(half_extent_y > 0.0))
        throw std::invalid_argument("viewing_angle_field: extents must be positive");

    AngleField field;
    field.xs.resize(res_x);
    field.ys.resize(res_y);
    for (int i = 0; i < res_x; ++i)
        field.xs[i] = -half_extent_x + 2.0 * half_extent_x * i / (res_x - 1);
    for (int j = 0; j < res_y; ++j)
        field.ys[j] = -half_extent_y + 2.0 * half_extent_y * j / (res_y - 1);

    field.phi_deg.resize(res_y, res_x);
    for (int j = 0; j < res_y; ++j) {
        for (int i = 0; i < res_x; ++i) {
            const Vec2d object(field.xs[i], field.ys[j]);
            double value;
            try {
                value = viewing_angle_change(object, baseline) * 180.0 / kPi;
            } catch (const std::domain_error&) {
                value = std::numeric_limits<double>::quiet_NaN();
            }
            field.phi_deg(j, i) = value;
        }
    }
    return field;
}

VoxelBound voxel_worstcase_bound(int subdivisions) {
    if (subdivisions < 2)
        throw std::domain_error(
            "voxel_worstcase_bound: needs >= 2 cells per diameter; use single_voxel_annulus below that");
    // Worst alignment: the arc inside a cell connects opposite cell corners,
    // so the half chord is w sqrt(2) / 2 with w = 2 / n.
    const double half_angle = std::asin(std::sqrt(2.0) / subdivisions);
    return {subdivisions, half_angle, 1.0 - std::cos(half_angle), 2.0 * std::sin(half_angle)};
}

AnnulusBound single_voxel_annulus(double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("single_voxel_annulus: radius must be positive");
    return {kPi / 4.0 * radius, radius, 2.0 * radius};
}

namespace {

OracleCase evaluate_case(const Scene& scene, const Vec2d& analytic_mean, double range,
                         long long rays, double start_azimuth) {
    const Pose2<double> pose{Vec2d::Zero(), 0.0};
    OracleCase result;
    result.range_over_r = range;
    ScanConfig config;
    config.max_range = range + 2.0;
    config.start_azimuth = start_azimuth;

    config.num_rays = static_cast<int>(rays);
    result.err_base = (cloud_mean(scan(pose, scene, config)) - analytic_mean).norm();
    config.num_rays = static_cast<int>(2 * rays);
    result.err_double = (cloud_mean(scan(pose, scene, config)) - analytic_mean).norm();
    return result;
}

}  // namespace

double max_err_base(const std::vector<OracleCase>& cases) {
    double m = 0.0;
    for (const OracleCase& c : cases) m = std::max(m, c.err_base);
    return m;
}

double mean_err_base(const std::vector<OracleCase>& cases) {
    double s = 0.0;
    for (const OracleCase& c : cases) s += c.err_base;
    return s / static_cast<double>(cases.size());
}

double mean_err_double(const std::vector<OracleCase>& cases) {
    double s = 0.0;
    for (const OracleCase& c : cases) s += c.err_double;
    return s / static_cast<double>(cases.size());
}

OracleValidation run_oracle_validation(int views_per_object, long long rays, std::uint64_t seed) {
    if (views_per_object < 1) throw std::invalid_argument("oracle validation: views must be >= 1");
    if (rays < 100) throw std::invalid_argument("oracle validation: rays must be >= 100");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> range_dist(1.5, 20.0);
    std::uniform_real_distribution<double> bearing_dist(-kPi, kPi);
    std::uniform_real_distribution<double> phase_dist(0.0, kTwoPi);
    // Wall angles stay clear of edge-on (0 or pi) so every view subtends an
    // angle the ray grid can resolve.
    std::uniform_real_distribution<double> wall_mag_dist(0.15, kPi - 0.15);

    OracleValidation out;
    out.cylinder.reserve(static_cast<std::size_t>(views_per_object));
    out.corner.reserve(static_cast<std::size_t>(views_per_object));

    for (int i = 0; i < views_per_object; ++i) {
        const double range = range_dist(rng);
        const double bearing = bearing_dist(rng);
        const double phase = phase_dist(rng);
        const CylinderSpec<double> spec{1.0, range * unit_vector(bearing)};
        Scene scene;
        scene.add(CircleObstacle{spec.center, spec.radius});
        const Vec2d analytic = cylinder_mean_world(CylinderView<double>{range, bearing}, spec);
        out.cylinder.push_back(evaluate_case(scene, analytic, range, rays, phase));
    }

    std::uniform_int_distribution<int> sign_dist(0, 1);
    for (int i = 0; i < views_per_object; ++i) {
        const double range = range_dist(rng);
        const double bearing = bearing_dist(rng);
        const double phase = phase_dist(rng);
        const double psi_a = (sign_dist(rng) ? 1.0 : -1.0) * wall_mag_dist(rng);
        double psi_b = (sign_dist(rng) ? 1.0 : -1.0) * wall_mag_dist(rng);
        if (psi_a == psi_b) psi_b = -psi_b;  // coincident walls are invalid

        CornerSpec<double> spec;
        spec.wall_length = 1.0;
        spec.vertex = range * unit_vector(bearing);
        spec.wall_dirs = {bearing + psi_a, bearing + psi_b};
        Scene scene;
        for (double dir : spec.wall_dirs)
            scene.add(SegmentObstacle{spec.vertex, spec.vertex + unit_vector(dir)});

        const CornerView<double> view = make_corner_view(range, bearing, psi_a, psi_b);
        const Vec2d analytic = corner_mean(view, spec);
        out.corner.push_back(evaluate_case(scene, analytic, range, rays, phase));
    }
    return out;
}

}  // namespace perspec
