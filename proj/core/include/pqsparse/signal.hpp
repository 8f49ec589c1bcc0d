#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pqsparse {

/// Uniform sampling grid: t_n = n * duration / (n_samples - 1), n = 0..n_samples-1.
struct SamplingGrid {
  int n_samples = 2101;
  double duration = 0.7;  // seconds

  SamplingGrid() = default;
  SamplingGrid(int n_samples_, double duration_);

  double dt() const { return duration / (n_samples - 1); }
  double time_at(int n) const { return duration * n / (n_samples - 1); }
  std::vector<double> sample_times() const;

  bool operator==(const SamplingGrid&) const = default;
};

/// The seven disturbance classes of the synthetic dataset plus the pure
/// fundamental. PureSignal never appears as a classification label.
enum class DisturbanceClass {
  Harmonic,              // C1
  Swell,                 // C2
  Sag,                   // C3
  Flicker,               // C4
  Notch,                 // C5
  ImpulsiveTransient,    // C6
  OscillatoryTransient,  // C7
  PureSignal,
};

inline constexpr int kNumClasses = 7;
inline constexpr std::array<DisturbanceClass, kNumClasses> kAllClasses = {
    DisturbanceClass::Harmonic,           DisturbanceClass::Swell,
    DisturbanceClass::Sag,                DisturbanceClass::Flicker,
    DisturbanceClass::Notch,              DisturbanceClass::ImpulsiveTransient,
    DisturbanceClass::OscillatoryTransient,
};

std::string class_name(DisturbanceClass c);   // "harmonic", "swell", ...
std::string class_code(DisturbanceClass c);   // "C1".."C7", "pure"
DisturbanceClass parse_class(const std::string& name);
int class_index(DisturbanceClass c);          // 0..6 for C1..C7

/// Class-specific generator parameters (only the fields relevant to the
/// class are populated; see siggen.hpp for the per-class equations).
struct DisturbanceParams {
  DisturbanceClass cls = DisturbanceClass::PureSignal;

  double alpha = 0.0;                        // event amplitude (p.u.)
  std::array<double, 4> harmonic_alphas{};   // alpha_k for k = 3,5,7,9
  double t1 = 0.0;                           // event window start (s)
  double t2 = 0.0;                           // event window end (s)
  double flicker_hz = 0.0;                   // f_f
  std::vector<double> notch_centers;         // t_k (s)
  std::vector<double> notch_widths;          // delta t_k (s)
  std::vector<double> notch_alphas;          // alpha_k
  double osc_beta = 0.0;                     // exponential decay constant (s)
  double osc_k = 0.0;                        // harmonic order multiplying omega

  /// key=value;key=value serialization used by the dataset CSV.
  std::string serialize() const;
  static DisturbanceParams deserialize(const std::string& text);
  bool operator==(const DisturbanceParams&) const = default;
};

inline constexpr std::array<int, 4> kHarmonicOrders = {3, 5, 7, 9};

/// A sampled waveform with provenance.
struct Signal {
  SamplingGrid grid;
  std::vector<double> values;
  std::optional<DisturbanceClass> label;
  std::optional<DisturbanceParams> params;
  std::uint64_t seed_trace = 0;  // substream seed that produced it (0 = none)

  double power() const;  // mean of squared values
};

}  // namespace pqsparse
