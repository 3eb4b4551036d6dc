#include "mtsi/corruption.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mtsi/data.hpp"
#include "mtsi/rng.hpp"

namespace mtsi {

std::string to_string(RemovalMode mode) {
  return mode == RemovalMode::RandomValue ? "value" : "region";
}

RemovalMode removal_mode_from_string(const std::string& name) {
  if (name == "value") return RemovalMode::RandomValue;
  if (name == "region") return RemovalMode::RandomRegion;
  throw std::invalid_argument("unknown removal mode: " + name);
}

long removal_count(double rate, Eigen::Index voxels) {
  if (rate < 0.0 || rate > 1.0)
    throw std::invalid_argument("removal rate must be in [0, 1]");
  const double x = rate * static_cast<double>(voxels);
  const double f = std::floor(x);
  const double diff = x - f;
  long n = static_cast<long>(f);
  if (diff > 0.5 || (diff == 0.5 && (n % 2 != 0))) ++n;
  return n;
}

namespace {

MaskedRecording apply_removal(const Recording& rec, const std::vector<int>& removed) {
  MaskedRecording out;
  out.values = rec.values;
  out.mask = MaskMatrix::Zero(rec.values.rows(), rec.values.cols());
  out.coords = rec.coords;
  out.truth = rec.values;
  out.subject_id = rec.subject_id;
  out.window_id = rec.window_id;
  for (int v : removed) {
    out.mask.row(v).setConstant(1);
    out.values.row(v).setConstant(std::numeric_limits<double>::quiet_NaN());
  }
  return out;
}

long checked_removal_count(const Recording& rec, const RemovalSpec& spec) {
  const long r = removal_count(spec.rate, rec.values.rows());
  if (r >= rec.values.rows())
    throw std::invalid_argument(
        "removal would leave no observed voxels (R = V)");
  return r;
}

}  // namespace

MaskedRecording remove_random_values(const Recording& rec, const RemovalSpec& spec) {
  if (spec.mode != RemovalMode::RandomValue)
    throw std::invalid_argument("spec mode must be RandomValue");
  const long r = checked_removal_count(rec, spec);
  const Eigen::Index v_count = rec.values.rows();

  // partial Fisher-Yates: first r entries are a uniform sample w/o replacement
  std::vector<int> idx(v_count);
  for (Eigen::Index v = 0; v < v_count; ++v) idx[v] = static_cast<int>(v);
  Rng rng(spec.seed);
  for (long i = 0; i < r; ++i) {
    const std::uint64_t j = i + rng.uniform_int(static_cast<std::uint64_t>(v_count - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(r);
  return apply_removal(rec, idx);
}

RegionRemovalDetail remove_random_regions_detail(const Recording& rec,
                                                 const RemovalSpec& spec,
                                                 const DistanceMatrix& d) {
  if (spec.mode != RemovalMode::RandomRegion)
    throw std::invalid_argument("spec mode must be RandomRegion");
  if (spec.max_region_size && *spec.max_region_size < 1)
    throw std::invalid_argument("max_region_size must be >= 1");
  const long r = checked_removal_count(rec, spec);
  const Eigen::Index v_count = rec.values.rows();
  if (d.entries.rows() != v_count || d.entries.cols() != v_count)
    throw std::invalid_argument("distance matrix shape must be V x V");

  std::vector<std::vector<int>> adjacency(v_count);
  for (Eigen::Index i = 0; i < v_count; ++i)
    for (Eigen::Index j = 0; j < v_count; ++j)
      if (i != j && d.entries(i, j) <= 1.0) adjacency[i].push_back(static_cast<int>(j));

  Rng rng(spec.seed);
  std::vector<char> removed(v_count, 0);
  std::vector<int> removed_list;
  RegionRemovalDetail detail;

  auto pick_unremoved = [&]() {
    std::vector<int> pool;
    for (Eigen::Index v = 0; v < v_count; ++v)
      if (!removed[v]) pool.push_back(static_cast<int>(v));
    return pool[rng.uniform_int(pool.size())];
  };

  while (static_cast<long>(removed_list.size()) < r) {
    std::vector<int> region;
    std::vector<char> in_frontier(v_count, 0);
    std::vector<int> frontier_members;

    auto remove_voxel = [&](int v) {
      removed[v] = 1;
      removed_list.push_back(v);
      region.push_back(v);
      for (int u : adjacency[v]) {
        if (!in_frontier[u]) {
          in_frontier[u] = 1;
          frontier_members.push_back(u);
        }
      }
    };

    remove_voxel(pick_unremoved());
    while (static_cast<long>(removed_list.size()) < r &&
           (!spec.max_region_size ||
            static_cast<int>(region.size()) < *spec.max_region_size)) {
      std::vector<int> candidates;
      for (int u : frontier_members)
        if (!removed[u]) candidates.push_back(u);
      if (candidates.empty()) break;
      remove_voxel(candidates[rng.uniform_int(candidates.size())]);
    }
    detail.regions.push_back(std::move(region));
  }

  detail.recording = apply_removal(rec, removed_list);
  return detail;
}

MaskedRecording remove_random_regions(const Recording& rec, const RemovalSpec& spec,
                                      const DistanceMatrix& d) {
  return remove_random_regions_detail(rec, spec, d).recording;
}

MaskedRecording corrupt(const Recording& rec, const RemovalSpec& spec) {
  if (spec.mode == RemovalMode::RandomValue) return remove_random_values(rec, spec);
  return remove_random_regions(rec, spec, compute_distance_matrix(rec.coords));
}

}  // namespace mtsi
