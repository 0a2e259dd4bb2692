#pragma once

#include "perspec/geometry.hpp"
#include "perspec/scene.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace perspec {

/// Regular grid; cell (i, j) covers the half-open square
/// [origin + (i, j) w, origin + (i+1, j+1) w).
struct VoxelGrid {
    double cell_size = 1.0;
    Vec2d origin = Vec2d::Zero();
};

struct CellIndex {
    std::int64_t ix;
    std::int64_t iy;
    bool operator==(const CellIndex&) const = default;
};

struct CellIndexHash {
    std::size_t operator()(const CellIndex& c) const {
        const std::uint64_t a = static_cast<std::uint64_t>(c.ix) * 0x9e3779b97f4a7c15ull;
        const std::uint64_t b = static_cast<std::uint64_t>(c.iy) * 0xc2b2ae3d27d4eb4full;
        return static_cast<std::size_t>(a ^ (b >> 1));
    }
};

/// Sample mean and sample covariance of the points binned into one cell.
struct VoxelStats {
    Vec2d mean = Vec2d::Zero();
    Eigen::Matrix2d covariance = Eigen::Matrix2d::Zero();
    int count = 0;
};

using VoxelMap = std::unordered_map<CellIndex, VoxelStats, CellIndexHash>;

CellIndex cell_of(const Vec2d& p, const VoxelGrid& grid);

/// Bins a cloud into the grid and keeps cells with at least min_points
/// samples. Covariance uses the n-1 divisor (zero matrix for a single point).
VoxelMap voxelize(const PointCloud& cloud, const VoxelGrid& grid, int min_points);

enum class Weighting { kEqual, kInverseCovariance };

struct MatchOptions {
    int min_points = 5;
    Weighting weighting = Weighting::kEqual;
    bool estimate_rotation = false;
    int max_iterations = 10;  // rotation mode only
};

struct MatchResult {
    RigidTransform2<double> transform;   // maps cloud1 onto cloud2
    std::vector<Vec2d> residuals;        // per-voxel mean difference after applying the estimate
    int voxels_used = 0;
};

/// Mean-alignment scan match over co-populated voxels. The default solve is
/// translation-only: the (optionally covariance-weighted) least-squares
/// translation over the per-voxel mean differences, which for equal weights
/// is exactly their arithmetic mean. Rotation mode runs an iterated
/// small-angle least-squares fit and needs at least two voxels.
MatchResult match(const PointCloud& cloud1, const PointCloud& cloud2, const VoxelGrid& grid,
                  const MatchOptions& options = {});

/// Linear propagation of per-voxel biases through the equal-structure
/// least-squares translation solve: the weighted mean of the biases.
Vec2d predict_solution_bias(const std::vector<Vec2d>& per_voxel_biases,
                            const std::vector<double>& weights);

}  // namespace perspec
