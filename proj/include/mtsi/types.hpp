#ifndef MTSI_TYPES_HPP
#define MTSI_TYPES_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mtsi {

using Matrix = Eigen::MatrixXd;  // voxels x timesteps
using Vector = Eigen::VectorXd;
using MaskMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;
using Coords = Eigen::Matrix<double, Eigen::Dynamic, 3>;  // one row per voxel

/// A complete multivariate recording: V voxel time series of length T,
/// each voxel tagged with a 3D grid coordinate.
struct Recording {
  Matrix values;  // V x T, never NaN
  Coords coords;  // V x 3
  std::string subject_id;
  int window_id = 0;

  Eigen::Index voxels() const { return values.rows(); }
  Eigen::Index timesteps() const { return values.cols(); }
};

/// A recording with missing entries. Missing values carry the IEEE-754 quiet
/// NaN sentinel and are flagged in `mask` (1 = missing). Missingness is
/// whole-voxel: a mask row is either all zeros or all ones.
struct MaskedRecording {
  Matrix values;  // V x T, NaN exactly where mask = 1
  MaskMatrix mask;
  Coords coords;
  std::optional<Matrix> truth;  // complete ground truth, when known
  std::string subject_id;
  int window_id = 0;

  Eigen::Index voxels() const { return values.rows(); }
  Eigen::Index timesteps() const { return values.cols(); }
};

/// Pairwise Pearson voxel correlations: symmetric, unit diagonal.
struct CorrelationMatrix {
  Matrix entries;  // V x V in [-1, 1]
};

/// Pairwise Euclidean voxel distances: symmetric, zero diagonal.
struct DistanceMatrix {
  Matrix entries;  // V x V, nonnegative
};

/// Per-voxel z-scoring statistics fit on training data.
struct NormStats {
  Vector mean;
  Vector stddev;  // strictly positive (floored at 1e-8)
};

/// Indices of voxels whose mask row is set.
std::vector<int> missing_voxels(const MaskMatrix& mask);

/// Throws std::invalid_argument when a Recording invariant is violated
/// (empty shape, NaN values, duplicate coordinate rows).
void validate_recording(const Recording& rec);

/// Throws std::invalid_argument when a MaskedRecording invariant is violated
/// (NaN/mask mismatch, partial-row missingness, truth inconsistency).
void validate_masked(const MaskedRecording& rec);

/// Converts a MaskedRecording with no missing entries into a Recording.
Recording to_recording(const MaskedRecording& rec);

/// Wraps a complete Recording as a MaskedRecording with an all-zero mask.
MaskedRecording to_masked(const Recording& rec);

}  // namespace mtsi

#endif  // MTSI_TYPES_HPP
