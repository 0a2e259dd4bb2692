#include "perspec/runner.hpp"

#include "perspec/csv.hpp"
#include "perspec/experiments.hpp"
#include "perspec/sampler.hpp"
#include "perspec/svg.hpp"
#include "perspec/voxel.hpp"

#include <cmath>
#include <sstream>

namespace perspec::cli {
namespace {

using report::format_count;
using report::format_number;
using report::Table;

std::filesystem::path write_csv(const RunConfig& config, const std::string& name,
                                const Table& table) {
    const std::filesystem::path path = config.out_dir / name;
    report::write_file_atomic(path, report::to_csv(table));
    return path;
}

std::filesystem::path write_svg(const RunConfig& config, const std::string& name,
                                const std::string& content) {
    const std::filesystem::path path = config.out_dir / name;
    report::write_file_atomic(path, content);
    return path;
}

void write_summary(const RunConfig& config, ReportBundle& bundle) {
    Table table;
    table.header = {"check", "value", "threshold", "status"};
    for (const CheckRecord& c : bundle.summary)
        table.rows.push_back({c.name, format_number(c.value), format_number(c.threshold),
                              c.pass ? "pass" : "fail"});
    bundle.csv_paths.push_back(write_csv(config, "summary.csv", table));
}

Table series_table(const ErrorSeries& series) {
    Table table;
    table.header = {"x_over_R", "eps_x_over_R", "eps_y_over_R"};
    table.rows.reserve(series.x.size());
    for (std::size_t i = 0; i < series.x.size(); ++i)
        table.rows.push_back({format_number(series.x[i]), format_number(series.eps_x[i]),
                              format_number(series.eps_y[i])});
    return table;
}

void add_series_svg(const RunConfig& config, const ErrorSeries& series, const std::string& name,
                    const std::string& title, ReportBundle& bundle) {
    if (!config.svg) return;
    std::vector<report::LineSeries> lines(2);
    lines[0] = {"eps_x / R", "#1f6fb4", series.x, series.eps_x};
    lines[1] = {"eps_y / R", "#c45028", series.x, series.eps_y};
    bundle.svg_paths.push_back(
        write_svg(config, name, report::render_line_plot(lines, title, "x / R", "error / R")));
}

ReportBundle run_cylinder_sweep(const RunConfig& config) {
    const DriveByScenario scenario{config.y_over_r, config.x_start, config.x_end, config.step};
    const ErrorSeries series = cylinder_drive_by(scenario);
    ReportBundle bundle;
    bundle.csv_paths.push_back(write_csv(config, "cylinder_sweep.csv", series_table(series)));
    add_series_svg(config, series, "cylinder_sweep.svg", "Cylinder drive-by perspective error",
                   bundle);
    return bundle;
}

CornerPreset preset_from_name(const std::string& name) {
    if (name == "convexV") return CornerPreset::kConvexV;
    if (name == "Lshape") return CornerPreset::kLShape;
    return CornerPreset::kConcave;
}

ReportBundle run_corner_sweep(const RunConfig& config) {
    const DriveByScenario scenario{config.y_over_r, config.x_start, config.x_end, config.step};
    const ErrorSeries series = corner_drive_by(scenario, preset_from_name(config.preset));
    ReportBundle bundle;
    const std::string base = "corner_sweep_" + config.preset;
    bundle.csv_paths.push_back(write_csv(config, base + ".csv", series_table(series)));
    add_series_svg(config, series, base + ".svg",
                   "Corner drive-by perspective error (" + config.preset + ")", bundle);
    return bundle;
}

ReportBundle run_angle_field(const RunConfig& config) {
    if (!(config.baseline_d > 0.0)) throw ConfigError("key 'baseline-d': must be positive");
    const double half_extent = config.half_extent_over_d * config.baseline_d;
    const AngleField field = viewing_angle_field(half_extent, half_extent, config.resolution,
                                                 config.resolution, config.baseline_d);
    Table table;
    table.header = {"x_over_d", "y_over_d", "phi_deg"};
    table.rows.reserve(field.xs.size() * field.ys.size());
    for (std::size_t j = 0; j < field.ys.size(); ++j)
        for (std::size_t i = 0; i < field.xs.size(); ++i)
            table.rows.push_back({format_number(field.xs[i] / config.baseline_d),
                                  format_number(field.ys[j] / config.baseline_d),
                                  format_number(field.phi_deg(static_cast<Eigen::Index>(j),
                                                              static_cast<Eigen::Index>(i)))});
    ReportBundle bundle;
    bundle.csv_paths.push_back(write_csv(config, "angle_field.csv", table));
    if (config.svg) {
        const std::vector<double> levels = {2.0, 5.0, 10.0, 20.0, 40.0, 80.0, 120.0};
        bundle.svg_paths.push_back(write_svg(
            config, "angle_field.svg",
            report::render_contour_map(field.xs, field.ys, field.phi_deg, levels,
                                       "Viewing-angle change (degrees)")));
    }
    return bundle;
}

ReportBundle run_voxel_bounds(const RunConfig& config) {
    if (config.n_min < 2) throw ConfigError("key 'n-min': must be >= 2");
    if (config.n_max < config.n_min) throw ConfigError("key 'n-max': must be >= n-min");
    Table table;
    table.header = {"n", "phi_h_rad", "delta_r_over_R", "delta_phi_over_R"};
    for (int n = config.n_min; n <= config.n_max; ++n) {
        const VoxelBound bound = voxel_worstcase_bound(n);
        table.rows.push_back({format_count(n), format_number(bound.half_angle),
                              format_number(bound.radial_depth),
                              format_number(bound.circumferential_width)});
    }
    ReportBundle bundle;
    bundle.csv_paths.push_back(write_csv(config, "voxel_bounds.csv", table));
    return bundle;
}

ReportBundle run_oracle_validate(const RunConfig& config) {
    const OracleValidation validation =
        run_oracle_validation(config.views, config.rays, config.seed);

    Table table;
    table.header = {"object", "view", "r0_over_R", "err_over_R", "err_over_R_2x_rays"};
    const auto add_rows = [&table](const std::string& object, const std::vector<OracleCase>& cases) {
        for (std::size_t i = 0; i < cases.size(); ++i)
            table.rows.push_back({object, format_count(static_cast<long long>(i)),
                                  format_number(cases[i].range_over_r),
                                  format_number(cases[i].err_base),
                                  format_number(cases[i].err_double)});
    };
    add_rows("cylinder", validation.cylinder);
    add_rows("corner", validation.corner);

    ReportBundle bundle;
    bundle.csv_paths.push_back(write_csv(config, "oracle_validate.csv", table));

    const double tol = config.tolerance_over_r;
    const double cyl_max = max_err_base(validation.cylinder);
    const double cor_max = max_err_base(validation.corner);
    const double cyl_ratio = mean_err_double(validation.cylinder) / mean_err_base(validation.cylinder);
    const double cor_ratio = mean_err_double(validation.corner) / mean_err_base(validation.corner);
    bundle.summary.push_back({"cylinder_max_err_over_R", cyl_max, tol, cyl_max <= tol});
    bundle.summary.push_back({"corner_max_err_over_R", cor_max, tol, cor_max <= tol});
    bundle.summary.push_back({"cylinder_convergence_ratio", cyl_ratio, 0.6, cyl_ratio <= 0.6});
    bundle.summary.push_back({"corner_convergence_ratio", cor_ratio, 0.6, cor_ratio <= 0.6});
    write_summary(config, bundle);
    return bundle;
}

PointCloud to_sensor_frame(const PointCloud& world) {
    PointCloud out;
    out.source.heading = world.source.heading;
    out.points.reserve(world.size());
    for (const Vec2d& p : world.points) out.points.push_back(p - world.source.position);
    return out;
}

ReportBundle run_scanmatch_demo(const RunConfig& config) {
    if (config.demo_rays < 1000) throw ConfigError("key 'demo-rays': must be >= 1000");
    if (!(config.radius_m > 0.0)) throw ConfigError("key 'radius-m': must be positive");
    if (!(config.cell_size > 0.0)) throw ConfigError("key 'cell-size': must be positive");

    // Unit cylinder at the origin, two poses at range 2R separated laterally
    // by 0.5R. Clouds are expressed in each pose's sensor frame, as a matcher
    // would see them.
    const CylinderSpec<double> spec{1.0, Vec2d::Zero()};
    Scene scene;
    scene.add(CircleObstacle{spec.center, spec.radius});
    const double h = std::sqrt(4.0 - 0.0625);
    const Pose2<double> pose1{Vec2d(-0.25, -h), 0.0};
    const Pose2<double> pose2{Vec2d(0.25, -h), 0.0};

    ScanConfig scan_config;
    scan_config.num_rays = static_cast<int>(config.demo_rays);
    scan_config.max_range = 8.0;
    const PointCloud cloud1 = to_sensor_frame(scan(pose1, scene, scan_config));
    const PointCloud cloud2 = to_sensor_frame(scan(pose2, scene, scan_config));

    VoxelGrid grid{config.cell_size, Vec2d(-config.cell_size / 2.0, 0.0)};
    const MatchResult result = match(cloud1, cloud2, grid);

    const Vec2d true_displacement = pose2.position - pose1.position;
    const Vec2d estimated_displacement = -result.transform.translation;
    const Vec2d ego_error = estimated_displacement - true_displacement;
    const Vec2d analytic_eps = -cylinder_mean_shift(cylinder_view_from_world(spec, pose1.position),
                                                    cylinder_view_from_world(spec, pose2.position),
                                                    spec);

    // The worked bias-budget example: a tenth of the voxels biased by 3 m.
    std::vector<Vec2d> biases(10, Vec2d::Zero());
    biases[0] = Vec2d(3.0, 0.0);
    const std::vector<double> weights(biases.size(), 1.0);
    const Vec2d predicted = predict_solution_bias(biases, weights);

    Table table;
    table.header = {"quantity", "x", "y"};
    const auto add = [&table](const std::string& name, const Vec2d& v) {
        table.rows.push_back({name, format_number(v.x()), format_number(v.y())});
    };
    add("true_displacement_over_R", true_displacement);
    add("estimated_displacement_over_R", estimated_displacement);
    add("ego_error_over_R", ego_error);
    add("analytic_perspective_error_over_R", analytic_eps);
    add("ego_error_m", ego_error * config.radius_m);
    add("analytic_perspective_error_m", analytic_eps * config.radius_m);
    add("predicted_solution_bias_m", predicted);

    ReportBundle bundle;
    bundle.csv_paths.push_back(write_csv(config, "scanmatch_demo.csv", table));

    const double gap = (ego_error - analytic_eps).norm();
    bundle.summary.push_back({"matcher_vs_analytic_gap_over_R", gap, 1e-2, gap <= 1e-2});
    const double bias_err = (predicted - Vec2d(0.3, 0.0)).norm();
    bundle.summary.push_back({"solution_bias_example_err_m", bias_err, 0.0, bias_err == 0.0});
    write_summary(config, bundle);
    return bundle;
}

}  // namespace

ReportBundle run(const RunConfig& config) {
    switch (config.command) {
        case Command::kCylinderSweep: return run_cylinder_sweep(config);
        case Command::kCornerSweep: return run_corner_sweep(config);
        case Command::kAngleField: return run_angle_field(config);
        case Command::kVoxelBounds: return run_voxel_bounds(config);
        case Command::kOracleValidate: return run_oracle_validate(config);
        case Command::kScanmatchDemo: return run_scanmatch_demo(config);
    }
    throw ConfigError("unhandled command");
}

}  // namespace perspec::cli
