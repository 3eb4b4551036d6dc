#ifndef MTSI_CORRUPTION_HPP
#define MTSI_CORRUPTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtsi/types.hpp"

namespace mtsi {

enum class RemovalMode { RandomValue, RandomRegion };

std::string to_string(RemovalMode mode);
RemovalMode removal_mode_from_string(const std::string& name);

/// How to generate missing voxels on a complete recording. `rate` is the
/// fraction of voxels whose whole time series is removed.
struct RemovalSpec {
  RemovalMode mode = RemovalMode::RandomValue;
  double rate = 0.0;
  std::optional<int> max_region_size;
  std::uint64_t seed = 0;
};

/// round(rate * V), half-to-even.
long removal_count(double rate, Eigen::Index voxels);

/// Removes round(rate*V) voxels chosen uniformly without replacement; each
/// removed voxel's entire series becomes NaN and its mask row 1. The original
/// values are kept as ground truth.
MaskedRecording remove_random_values(const Recording& rec, const RemovalSpec& spec);

/// Region removal: grow spatially contiguous regions (adjacency = Euclidean
/// distance <= 1.0) from random seed voxels until round(rate*V) voxels are
/// gone. A region grows by uniform choice over the accumulated adjacency
/// frontier of not-yet-removed voxels; it stops when the frontier is
/// exhausted or, if set, when it reaches max_region_size, after which a new
/// seed voxel starts the next region.
MaskedRecording remove_random_regions(const Recording& rec, const RemovalSpec& spec,
                                      const DistanceMatrix& d);

/// Same as remove_random_regions, additionally reporting the voxels of each
/// grown region in removal order.
struct RegionRemovalDetail {
  MaskedRecording recording;
  std::vector<std::vector<int>> regions;
};
RegionRemovalDetail remove_random_regions_detail(const Recording& rec,
                                                 const RemovalSpec& spec,
                                                 const DistanceMatrix& d);

/// Dispatch on spec.mode; region mode computes the distance matrix from the
/// recording's coordinates.
MaskedRecording corrupt(const Recording& rec, const RemovalSpec& spec);

}  // namespace mtsi

#endif  // MTSI_CORRUPTION_HPP
