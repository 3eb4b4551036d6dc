#include "mtsi/data.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace mtsi {

DistanceMatrix compute_distance_matrix(const Coords& coords) {
  const Eigen::Index v_count = coords.rows();
  Matrix d = Matrix::Zero(v_count, v_count);
  for (Eigen::Index i = 0; i < v_count; ++i) {
    for (Eigen::Index j = i + 1; j < v_count; ++j) {
      const double dist = (coords.row(i) - coords.row(j)).norm();
      if (dist == 0.0)
        throw std::invalid_argument("duplicate coordinate rows");
      d(i, j) = dist;
      d(j, i) = dist;
    }
  }
  return DistanceMatrix{std::move(d)};
}

namespace {

// Concatenates recordings along the time axis. Shared-V precondition checked.
Matrix concat_training(const std::vector<Recording>& train) {
  if (train.empty()) throw std::invalid_argument("empty training list");
  const Eigen::Index v_count = train.front().values.rows();
  Eigen::Index total = 0;
  for (const auto& rec : train) {
    if (rec.values.rows() != v_count)
      throw std::invalid_argument("training recordings must share voxel count");
    total += rec.values.cols();
  }
  Matrix all(v_count, total);
  Eigen::Index at = 0;
  for (const auto& rec : train) {
    all.middleCols(at, rec.values.cols()) = rec.values;
    at += rec.values.cols();
  }
  return all;
}

}  // namespace

CorrelationMatrix compute_correlation_matrix(const std::vector<Recording>& train) {
  Matrix all = concat_training(train);
  const Eigen::Index v_count = all.rows();
  const Eigen::Index n = all.cols();
  if (n < 2)
    throw std::invalid_argument("need at least 2 concatenated samples per voxel");

  const Vector mean = all.rowwise().mean();
  Matrix centered = all.colwise() - mean;
  Vector sd = (centered.array().square().rowwise().sum() / double(n)).sqrt();

  Matrix cov = centered * centered.transpose() / double(n);
  Matrix corr(v_count, v_count);
  for (Eigen::Index i = 0; i < v_count; ++i) {
    corr(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < v_count; ++j) {
      double c = 0.0;
      if (sd(i) > 0.0 && sd(j) > 0.0) c = cov(i, j) / (sd(i) * sd(j));
      corr(i, j) = c;
      corr(j, i) = c;
    }
  }
  return CorrelationMatrix{std::move(corr)};
}

NormStats fit_norm_stats(const std::vector<Recording>& train) {
  Matrix all = concat_training(train);
  const Eigen::Index n = all.cols();
  NormStats stats;
  stats.mean = all.rowwise().mean();
  Matrix centered = all.colwise() - stats.mean;
  stats.stddev =
      (centered.array().square().rowwise().sum() / double(n)).sqrt().max(1e-8);
  return stats;
}

namespace {

void check_norm_shape(Eigen::Index v_count, const NormStats& stats) {
  if (stats.mean.size() != v_count || stats.stddev.size() != v_count)
    throw std::invalid_argument("norm stats length does not match voxel count");
}

}  // namespace

Recording apply_norm(const Recording& rec, const NormStats& stats) {
  check_norm_shape(rec.values.rows(), stats);
  Recording out = rec;
  out.values = (rec.values.colwise() - stats.mean).array().colwise() /
               stats.stddev.array();
  return out;
}

Recording invert_norm(const Recording& rec, const NormStats& stats) {
  check_norm_shape(rec.values.rows(), stats);
  Recording out = rec;
  out.values =
      (rec.values.array().colwise() * stats.stddev.array()).colwise() +
      stats.mean.array();
  return out;
}

MaskedRecording apply_norm(const MaskedRecording& rec, const NormStats& stats) {
  check_norm_shape(rec.values.rows(), stats);
  MaskedRecording out = rec;
  for (Eigen::Index v = 0; v < rec.values.rows(); ++v) {
    for (Eigen::Index t = 0; t < rec.values.cols(); ++t) {
      if (!std::isnan(rec.values(v, t)))
        out.values(v, t) = (rec.values(v, t) - stats.mean(v)) / stats.stddev(v);
    }
  }
  if (rec.truth) {
    out.truth = (rec.truth->colwise() - stats.mean).array().colwise() /
                stats.stddev.array();
  }
  return out;
}

MaskedRecording invert_norm(const MaskedRecording& rec, const NormStats& stats) {
  check_norm_shape(rec.values.rows(), stats);
  MaskedRecording out = rec;
  for (Eigen::Index v = 0; v < rec.values.rows(); ++v) {
    for (Eigen::Index t = 0; t < rec.values.cols(); ++t) {
      if (!std::isnan(rec.values(v, t)))
        out.values(v, t) = rec.values(v, t) * stats.stddev(v) + stats.mean(v);
    }
  }
  if (rec.truth) {
    out.truth = (rec.truth->array().colwise() * stats.stddev.array()).colwise() +
                stats.mean.array();
  }
  return out;
}

Recording downsample_spatial(const Recording& rec, int factor) {
  if (factor < 1) throw std::invalid_argument("downsample factor must be >= 1");
  using Block = std::tuple<long, long, long>;
  std::map<Block, std::vector<Eigen::Index>> blocks;
  for (Eigen::Index v = 0; v < rec.coords.rows(); ++v) {
    Block b{static_cast<long>(std::floor(rec.coords(v, 0) / factor)),
            static_cast<long>(std::floor(rec.coords(v, 1) / factor)),
            static_cast<long>(std::floor(rec.coords(v, 2) / factor))};
    blocks[b].push_back(v);
  }
  Recording out;
  out.subject_id = rec.subject_id;
  out.window_id = rec.window_id;
  out.values.resize(static_cast<Eigen::Index>(blocks.size()), rec.values.cols());
  out.coords.resize(static_cast<Eigen::Index>(blocks.size()), 3);
  Eigen::Index row = 0;
  for (const auto& [block, members] : blocks) {
    Vector mean_series = Vector::Zero(rec.values.cols());
    for (Eigen::Index v : members) mean_series += rec.values.row(v).transpose();
    mean_series /= static_cast<double>(members.size());
    out.values.row(row) = mean_series.transpose();
    out.coords(row, 0) = static_cast<double>(std::get<0>(block));
    out.coords(row, 1) = static_cast<double>(std::get<1>(block));
    out.coords(row, 2) = static_cast<double>(std::get<2>(block));
    ++row;
  }
  return out;
}

}  // namespace mtsi
