#ifndef MTSI_DATA_HPP
#define MTSI_DATA_HPP

#include <vector>

#include "mtsi/types.hpp"

namespace mtsi {

/// Euclidean distances between all voxel coordinate pairs.
/// Throws on duplicate coordinate rows.
DistanceMatrix compute_distance_matrix(const Coords& coords);

/// Pearson correlation of each voxel pair over the time-concatenation of all
/// training recordings (population variance convention). A zero-variance
/// voxel correlates 0 with everything off-diagonal and 1 with itself.
CorrelationMatrix compute_correlation_matrix(const std::vector<Recording>& train);

/// Per-voxel mean/std over the training concatenation. Population convention,
/// std floored at 1e-8 so constant voxels normalize to zero.
NormStats fit_norm_stats(const std::vector<Recording>& train);

Recording apply_norm(const Recording& rec, const NormStats& stats);
Recording invert_norm(const Recording& rec, const NormStats& stats);
MaskedRecording apply_norm(const MaskedRecording& rec, const NormStats& stats);
MaskedRecording invert_norm(const MaskedRecording& rec, const NormStats& stats);

/// Groups voxels into factor^3 coordinate blocks; each output voxel is the
/// mean time series of its block, located at the block index. Blocks are
/// emitted in lexicographic (x, y, z) order; empty blocks are omitted.
Recording downsample_spatial(const Recording& rec, int factor);

}  // namespace mtsi

#endif  // MTSI_DATA_HPP
