#include "perspec/voxel.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace perspec {
namespace {

struct Accumulator {
    int count = 0;
    Vec2d mean = Vec2d::Zero();
    Eigen::Matrix2d m2 = Eigen::Matrix2d::Zero();  // sum of centered outer products (Welford)

    void add(const Vec2d& p) {
        ++count;
        const Vec2d delta = p - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (p - mean).transpose();
    }
};

std::vector<std::pair<CellIndex, std::pair<VoxelStats, VoxelStats>>> co_populated(
    const VoxelMap& a, const VoxelMap& b) {
    std::vector<std::pair<CellIndex, std::pair<VoxelStats, VoxelStats>>> cells;
    cells.reserve(std::min(a.size(), b.size()));
    for (const auto& [key, stats_a] : a) {
        const auto it = b.find(key);
        if (it != b.end()) cells.push_back({key, {stats_a, it->second}});
    }
    return cells;
}

Eigen::Matrix2d voxel_weight(const VoxelStats& reference, const VoxelGrid& grid,
                             Weighting weighting) {
    if (weighting == Weighting::kEqual) return Eigen::Matrix2d::Identity();
    // Inverse covariance of the first cloud, symmetrized, with a conditioning
    // floor so line-like distributions stay invertible.
    Eigen::Matrix2d cov = 0.5 * (reference.covariance + reference.covariance.transpose());
    cov += 1e-9 * grid.cell_size * grid.cell_size * Eigen::Matrix2d::Identity();
    return cov.inverse();
}

}  // namespace

CellIndex cell_of(const Vec2d& p, const VoxelGrid& grid) {
    return {static_cast<std::int64_t>(std::floor((p.x() - grid.origin.x()) / grid.cell_size)),
            static_cast<std::int64_t>(std::floor((p.y() - grid.origin.y()) / grid.cell_size))};
}

VoxelMap voxelize(const PointCloud& cloud, const VoxelGrid& grid, int min_points) {
    if (!(grid.cell_size > 0.0)) throw std::invalid_argument("voxelize: cell_size must be positive");
    if (min_points < 1) throw std::invalid_argument("voxelize: min_points must be >= 1");

    std::unordered_map<CellIndex, Accumulator, CellIndexHash> acc;
    for (const Vec2d& p : cloud.points) acc[cell_of(p, grid)].add(p);

    VoxelMap out;
    out.reserve(acc.size());
    for (const auto& [key, a] : acc) {
        if (a.count < min_points) continue;
        VoxelStats stats;
        stats.count = a.count;
        stats.mean = a.mean;
        if (a.count > 1) stats.covariance = a.m2 / static_cast<double>(a.count - 1);
        out.emplace(key, stats);
    }
    return out;
}

MatchResult match(const PointCloud& cloud1, const PointCloud& cloud2, const VoxelGrid& grid,
                  const MatchOptions& options) {
    const VoxelMap map1 = voxelize(cloud1, grid, options.min_points);
    const VoxelMap map2 = voxelize(cloud2, grid, options.min_points);
    auto cells = co_populated(map1, map2);
    if (cells.empty())
        throw std::domain_error("match: no voxel is populated by both clouds");
    if (options.estimate_rotation && cells.size() < 2)
        throw std::domain_error("match: rotation estimation needs at least two co-populated voxels");

    MatchResult result;
    result.voxels_used = static_cast<int>(cells.size());

    if (!options.estimate_rotation) {
        if (options.weighting == Weighting::kEqual) {
            // Exactly the arithmetic mean of the per-voxel differences.
            Vec2d sum = Vec2d::Zero();
            for (const auto& [key, pair] : cells) sum += pair.second.mean - pair.first.mean;
            result.transform.translation = sum / static_cast<double>(cells.size());
        } else {
            Eigen::Matrix2d info = Eigen::Matrix2d::Zero();
            Vec2d rhs = Vec2d::Zero();
            for (const auto& [key, pair] : cells) {
                const Eigen::Matrix2d w = voxel_weight(pair.first, grid, options.weighting);
                info += w;
                rhs += w * (pair.second.mean - pair.first.mean);
            }
            result.transform.translation = info.ldlt().solve(rhs);
        }
    } else {
        // Iterated small-angle least squares on the voxel means:
        // minimize sum_k w_k |R(theta) m1_k + t - m2_k|^2.
        double theta = 0.0;
        Vec2d t = Vec2d::Zero();
        const Eigen::Matrix2d j90 = (Eigen::Matrix2d() << 0.0, -1.0, 1.0, 0.0).finished();
        for (int iter = 0; iter < options.max_iterations; ++iter) {
            Eigen::Matrix3d normal = Eigen::Matrix3d::Zero();
            Eigen::Vector3d rhs = Eigen::Vector3d::Zero();
            const RigidTransform2<double> current{theta, t};
            for (const auto& [key, pair] : cells) {
                const Eigen::Matrix2d w = voxel_weight(pair.first, grid, options.weighting);
                const Vec2d mapped = transform_point(current, pair.first.mean);
                Eigen::Matrix<double, 2, 3> jac;
                jac.col(0) = j90 * mapped - j90 * t;  // d(mapped)/d(theta) about the current estimate
                jac.block<2, 2>(0, 1) = Eigen::Matrix2d::Identity();
                const Vec2d residual = pair.second.mean - mapped;
                normal += jac.transpose() * w * jac;
                rhs += jac.transpose() * w * residual;
            }
            const Eigen::Vector3d delta = normal.ldlt().solve(rhs);
            theta = normalize_angle(theta + delta[0]);
            t += delta.tail<2>();
            if (delta.cwiseAbs().maxCoeff() < 1e-14) break;
        }
        result.transform = {theta, t};
    }

    result.residuals.reserve(cells.size());
    for (const auto& [key, pair] : cells)
        result.residuals.push_back(pair.second.mean - transform_point(result.transform, pair.first.mean));
    return result;
}

Vec2d predict_solution_bias(const std::vector<Vec2d>& per_voxel_biases,
                            const std::vector<double>& weights) {
    if (per_voxel_biases.size() != weights.size())
        throw std::invalid_argument("predict_solution_bias: size mismatch");
    if (per_voxel_biases.empty())
        throw std::invalid_argument("predict_solution_bias: empty input");
    Vec2d weighted_sum = Vec2d::Zero();
    double total = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 0.0) throw std::invalid_argument("predict_solution_bias: negative weight");
        weighted_sum += weights[i] * per_voxel_biases[i];
        total += weights[i];
    }
    if (total == 0.0) throw std::invalid_argument("predict_solution_bias: weights sum to zero");
    return weighted_sum / total;
}

}  // namespace perspec
