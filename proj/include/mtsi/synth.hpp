#ifndef MTSI_SYNTH_HPP
#define MTSI_SYNTH_HPP

#include <cstdint>
#include <vector>

#include "mtsi/rng.hpp"
#include "mtsi/types.hpp"

namespace mtsi {

/// Synthetic spatially-correlated dataset: latent sources with Gaussian
/// radial loadings over a cubic grid, random-phase sinusoidal time courses,
/// and white observation noise.
struct SynthConfig {
  int grid_n = 5;               // cubic grid side
  int voxels = 100;             // V <= grid_n^3 (grid truncated in x-major order)
  int timesteps = 14;           // 28 s windows at a 2 s sampling period
  int sources = 4;              // K latent sources
  double noise_std = 0.3;
  int subjects = 16;
  int windows_per_subject = 12;
  double loading_width = 0.0;   // 0 -> grid_n / 3
  double subject_jitter = 0.1;  // per-subject loading perturbation std
};

/// Coordinates of the first `voxels` grid points (x-major order).
Coords grid_coords(int grid_n, int voxels);

/// One recording from explicit pieces: values = loadings * sources + noise.
/// loadings is V x K, sources is K x T. Exposed so tests can pin down the
/// mixing model directly.
Recording synth_recording(const Matrix& loadings, const Matrix& sources,
                          const Coords& coords, double noise_std, Rng& rng);

/// Deterministic dataset of subjects x windows recordings.
std::vector<Recording> synth_dataset(const SynthConfig& cfg, std::uint64_t seed);

}  // namespace mtsi

#endif  // MTSI_SYNTH_HPP
