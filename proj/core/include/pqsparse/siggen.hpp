#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "pqsparse/rng.hpp"
#include "pqsparse/signal.hpp"

namespace pqsparse {

/// Dataset generator configuration. Defaults mirror the synthetic corpus:
/// 190 signals per class on a 2101-sample / 0.7 s grid at 60 Hz.
struct DatasetConfig {
  SamplingGrid grid{2101, 0.7};
  double fundamental_hz = 60.0;
  int per_class = 190;
  int notch_count_min = 1;   // number of notch windows drawn uniformly in
  int notch_count_max = 6;   // [notch_count_min, notch_count_max]
  /// Redraw event windows until at least one grid sample falls inside.
  /// Sub-period transient windows can otherwise fall entirely between two
  /// samples and produce a waveform identical to the pure signal.
  bool ensure_window_sample = true;

  void validate() const;
};

/// y(t) = sin(2*pi*fundamental_hz*t). label = PureSignal.
Signal generate_pure(const SamplingGrid& grid, double fundamental_hz);

/// Draw class parameters uniformly from their admissible ranges.
/// Swell/Sag windows span 6T..10T, transients 0.01T..0.02T (impulsive) and
/// 0.01T..0.03T (oscillatory); harmonic amplitudes are drawn in [0.05,0.15]
/// and rescaled so their squares sum to one.
DisturbanceParams sample_params(DisturbanceClass cls, const DatasetConfig& config,
                                RandomStream& rng);

/// Evaluate the class equation at the grid times. Step windows are the
/// half-open indicator [t1, t2). Throws ValidationError naming the field
/// when params are outside their admissible range.
Signal generate_disturbance(DisturbanceClass cls, const DisturbanceParams& params,
                            const SamplingGrid& grid, double fundamental_hz);

/// per_class signals for each of the 7 classes, deterministic given seed.
/// Signal i of class c uses substream ("signal", class_index*per_class + i).
std::vector<Signal> generate_dataset(const DatasetConfig& config, std::uint64_t seed);

/// Additive white Gaussian noise at a target SNR. snr_db = +infinity (or
/// kCleanSnrDb) returns the input unchanged. Noise variance is
/// signal_power / 10^(snr_db/10).
Signal add_awgn(const Signal& signal, double snr_db, RandomStream& rng);

/// Sentinel accepted by add_awgn and the SNR sweep meaning "no noise".
inline constexpr double kCleanSnrDb = std::numeric_limits<double>::infinity();

}  // namespace pqsparse
