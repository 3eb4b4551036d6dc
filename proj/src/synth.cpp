#include "mtsi/synth.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mtsi {

Coords grid_coords(int grid_n, int voxels) {
  const long capacity = static_cast<long>(grid_n) * grid_n * grid_n;
  if (voxels < 1 || voxels > capacity)
    throw std::invalid_argument("voxel count exceeds grid capacity n^3");
  Coords coords(voxels, 3);
  int v = 0;
  for (int x = 0; x < grid_n && v < voxels; ++x)
    for (int y = 0; y < grid_n && v < voxels; ++y)
      for (int z = 0; z < grid_n && v < voxels; ++z) {
        coords(v, 0) = x;
        coords(v, 1) = y;
        coords(v, 2) = z;
        ++v;
      }
  return coords;
}

Recording synth_recording(const Matrix& loadings, const Matrix& sources,
                          const Coords& coords, double noise_std, Rng& rng) {
  if (loadings.cols() != sources.rows())
    throw std::invalid_argument("loadings/sources inner dimension mismatch");
  Recording rec;
  rec.coords = coords;
  rec.values = loadings * sources;
  if (noise_std > 0.0) {
    for (Eigen::Index v = 0; v < rec.values.rows(); ++v)
      for (Eigen::Index t = 0; t < rec.values.cols(); ++t)
        rec.values(v, t) += noise_std * rng.normal();
  }
  return rec;
}

std::vector<Recording> synth_dataset(const SynthConfig& cfg, std::uint64_t seed) {
  const Coords coords = grid_coords(cfg.grid_n, cfg.voxels);
  const double width =
      cfg.loading_width > 0.0 ? cfg.loading_width : cfg.grid_n / 3.0;
  Rng rng(seed);

  // Shared loadings: Gaussian bumps at random centers, random signed amplitude.
  Matrix shared(cfg.voxels, cfg.sources);
  for (int k = 0; k < cfg.sources; ++k) {
    Eigen::Vector3d center(rng.uniform(0.0, cfg.grid_n - 1.0),
                           rng.uniform(0.0, cfg.grid_n - 1.0),
                           rng.uniform(0.0, cfg.grid_n - 1.0));
    double amp = rng.uniform(0.5, 1.5);
    if (rng.uniform() < 0.5) amp = -amp;
    for (int v = 0; v < cfg.voxels; ++v) {
      const double d2 = (coords.row(v).transpose() - center).squaredNorm();
      shared(v, k) = amp * std::exp(-d2 / (2.0 * width * width));
    }
  }

  std::vector<Recording> out;
  out.reserve(static_cast<std::size_t>(cfg.subjects) * cfg.windows_per_subject);
  for (int s = 0; s < cfg.subjects; ++s) {
    Matrix loadings = shared;
    for (Eigen::Index i = 0; i < loadings.size(); ++i)
      loadings.data()[i] += cfg.subject_jitter * rng.normal();
    char name[16];
    std::snprintf(name, sizeof(name), "sub-%03d", s);
    for (int w = 0; w < cfg.windows_per_subject; ++w) {
      Matrix sources(cfg.sources, cfg.timesteps);
      for (int k = 0; k < cfg.sources; ++k) {
        const double period = rng.uniform(4.0, static_cast<double>(cfg.timesteps));
        const double phase = rng.uniform(0.0, 6.283185307179586477);
        for (int t = 0; t < cfg.timesteps; ++t)
          sources(k, t) =
              std::sin(6.283185307179586477 * t / period + phase);
      }
      Recording rec = synth_recording(loadings, sources, coords, cfg.noise_std, rng);
      rec.subject_id = name;
      rec.window_id = w;
      out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace mtsi
