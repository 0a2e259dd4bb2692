#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace perspec::report {

struct LineSeries {
    std::string label;
    std::string color;
    std::vector<double> x;
    std::vector<double> y;
};

/// Simple polyline chart with axis ticks and a legend. A convenience view of
/// the CSV data, not a contract.
std::string render_line_plot(const std::vector<LineSeries>& series, const std::string& title,
                             const std::string& x_label, const std::string& y_label);

/// Isoline map of a scalar grid (marching squares at the given levels) over a
/// light value-shaded background.
std::string render_contour_map(const std::vector<double>& xs, const std::vector<double>& ys,
                               const Eigen::MatrixXd& values, const std::vector<double>& levels,
                               const std::string& title);

}  // namespace perspec::report
