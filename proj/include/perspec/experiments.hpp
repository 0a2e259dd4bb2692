#pragma once

#include "perspec/corner.hpp"
#include "perspec/cylinder.hpp"
#include "perspec/geometry.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace perspec {

/// Straight-line pass of the sensor along the x-axis, with the object placed
/// at (0, lateral_offset). All lengths are in units of the object size
/// (cylinder radius / wall length).
struct DriveByScenario {
    double lateral_offset = 1.0;
    double x_start = -15.0;
    double x_end = 15.0;
    double step = 0.05;
};

/// Per-pose perspective error along a pass, relative to the starting pose.
struct ErrorSeries {
    std::vector<double> x;
    std::vector<double> eps_x;
    std::vector<double> eps_y;
};

enum class CornerPreset {
    kConvexV,  // walls canted 45 degrees away from the track, opening away
    kLShape,   // one wall along +y, one along +x, vertex nearest the track
    kConcave,  // walls canted 45 degrees toward the track, opening toward it
};

/// Unit corner at (0, lateral_offset) with the preset's wall orientations.
CornerSpec<double> corner_preset_spec(CornerPreset preset, double lateral_offset);

/// Perspective error of a unit-radius cylinder over the pass. The error at
/// each pose is the negated mean shift from the starting pose, so the series
/// begins at zero.
ErrorSeries cylinder_drive_by(const DriveByScenario& scenario);

/// Same pass for a unit corner in the given orientation. Wall indices are
/// re-sorted at every pose so the nearer wall stays first.
ErrorSeries corner_drive_by(const DriveByScenario& scenario, CornerPreset preset);

/// Angle subtended at an object by two viewpoints a baseline apart, centered
/// on the origin along the x-axis. Radians.
double viewing_angle_change(const Vec2d& object, double baseline);

/// Viewing-angle change evaluated over a regular grid, in degrees. Grid nodes
/// that coincide with a viewpoint evaluate to NaN.
struct AngleField {
    std::vector<double> xs;
    std::vector<double> ys;
    Eigen::MatrixXd phi_deg;  // (ys.size() x xs.size())
};

AngleField viewing_angle_field(double half_extent_x, double half_extent_y, int res_x, int res_y,
                               double baseline);

/// Worst-case per-voxel perspective error bounds when a unit circle spans n
/// cells per diameter and the arc inside a cell connects its corners. Lengths
/// are in units of the circle radius.
struct VoxelBound {
    int subdivisions;
    double half_angle;              // half the arc angle subtended inside the worst cell
    double radial_depth;            // convex-hull depth along the radial direction
    double circumferential_width;   // convex-hull width across it
};

VoxelBound voxel_worstcase_bound(int subdivisions);

/// Bounds for the single-voxel case: the point-cloud mean stays in the
/// annulus between pi/4 R and R from the center, and a half orbit moves it by
/// the full diameter.
struct AnnulusBound {
    double inner_radius;
    double outer_radius;
    double max_shift;
};

AnnulusBound single_voxel_annulus(double radius);

/// One randomized cross-validation case: distance between the analytic mean
/// and the sampled-scan mean, at the base ray count and at twice that count.
struct OracleCase {
    double range_over_r;
    double err_base;    // |analytic - sampled| / R at `rays`
    double err_double;  // same at 2 * `rays`
};

struct OracleValidation {
    std::vector<OracleCase> cylinder;
    std::vector<OracleCase> corner;
};

double max_err_base(const std::vector<OracleCase>& cases);
double mean_err_base(const std::vector<OracleCase>& cases);
double mean_err_double(const std::vector<OracleCase>& cases);

/// Scans randomized cylinder and corner views (range/R in [1.5, 20], walls
/// kept away from edge-on so the subtended angle stays resolvable) and
/// compares sampled cloud means against the closed-form means. Deterministic
/// for a fixed seed.
OracleValidation run_oracle_validation(int views_per_object, long long rays, std::uint64_t seed);

}  // namespace perspec
