#include "mtsi/types.hpp"

#include <array>
#include <cmath>
#include <set>
#include <stdexcept>

namespace mtsi {

std::vector<int> missing_voxels(const MaskMatrix& mask) {
  std::vector<int> out;
  for (Eigen::Index v = 0; v < mask.rows(); ++v) {
    if (mask.cols() > 0 && mask(v, 0) != 0) out.push_back(static_cast<int>(v));
  }
  return out;
}

void validate_recording(const Recording& rec) {
  if (rec.values.rows() < 1 || rec.values.cols() < 1)
    throw std::invalid_argument("recording must have V >= 1 and T >= 1");
  if (rec.coords.rows() != rec.values.rows())
    throw std::invalid_argument("coords row count must match voxel count");
  if (!rec.values.allFinite())
    throw std::invalid_argument("recording values must be finite (no NaN)");
  std::set<std::array<double, 3>> seen;
  for (Eigen::Index v = 0; v < rec.coords.rows(); ++v) {
    std::array<double, 3> row{rec.coords(v, 0), rec.coords(v, 1), rec.coords(v, 2)};
    if (!seen.insert(row).second)
      throw std::invalid_argument("duplicate coordinate rows in recording");
  }
}

void validate_masked(const MaskedRecording& rec) {
  const Eigen::Index v_count = rec.values.rows();
  const Eigen::Index t_count = rec.values.cols();
  if (v_count < 1 || t_count < 1)
    throw std::invalid_argument("masked recording must have V >= 1 and T >= 1");
  if (rec.mask.rows() != v_count || rec.mask.cols() != t_count)
    throw std::invalid_argument("mask shape must match values");
  if (rec.coords.rows() != v_count)
    throw std::invalid_argument("coords row count must match voxel count");
  for (Eigen::Index v = 0; v < v_count; ++v) {
    const std::uint8_t row_flag = rec.mask(v, 0);
    for (Eigen::Index t = 0; t < t_count; ++t) {
      if (rec.mask(v, t) != row_flag)
        throw std::invalid_argument("mask must be constant along each voxel row");
      const bool is_nan = std::isnan(rec.values(v, t));
      if (is_nan != (rec.mask(v, t) == 1))
        throw std::invalid_argument("values NaN pattern must match mask");
    }
  }
  if (rec.truth) {
    if (rec.truth->rows() != v_count || rec.truth->cols() != t_count)
      throw std::invalid_argument("truth shape must match values");
    if (!rec.truth->allFinite())
      throw std::invalid_argument("truth must be complete (no NaN)");
    for (Eigen::Index v = 0; v < v_count; ++v) {
      if (rec.mask(v, 0) != 0) continue;
      for (Eigen::Index t = 0; t < t_count; ++t) {
        if ((*rec.truth)(v, t) != rec.values(v, t))
          throw std::invalid_argument("truth must equal values at observed entries");
      }
    }
  }
}

Recording to_recording(const MaskedRecording& rec) {
  if (!missing_voxels(rec.mask).empty())
    throw std::invalid_argument("cannot convert: recording has missing voxels");
  Recording out;
  out.values = rec.values;
  out.coords = rec.coords;
  out.subject_id = rec.subject_id;
  out.window_id = rec.window_id;
  return out;
}

MaskedRecording to_masked(const Recording& rec) {
  MaskedRecording out;
  out.values = rec.values;
  out.mask = MaskMatrix::Zero(rec.values.rows(), rec.values.cols());
  out.coords = rec.coords;
  out.subject_id = rec.subject_id;
  out.window_id = rec.window_id;
  return out;
}

}  // namespace mtsi
