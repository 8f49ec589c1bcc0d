#include "pqsparse/siggen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pqsparse/errors.hpp"

namespace pqsparse {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxWindowRedraws = 100000;

double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

bool window_contains_sample(const SamplingGrid& grid, double t1, double t2) {
  int n0 = static_cast<int>(std::ceil(t1 / grid.dt())) - 2;
  n0 = std::max(n0, 0);
  for (int n = n0; n < grid.n_samples && n <= n0 + 4; ++n) {
    double tn = grid.time_at(n);
    if (tn >= t1 && tn < t2) return true;
  }
  return false;
}

/// Draw (t1, t2) with duration in [dur_lo, dur_hi], uniformly placed.
std::pair<double, double> draw_window(const DatasetConfig& cfg, double dur_lo, double dur_hi,
                                      RandomStream& rng) {
  const double total = cfg.grid.duration;
  if (dur_hi > total)
    throw ConfigError("draw_window: event duration exceeds signal duration");
  for (int attempt = 0; attempt < kMaxWindowRedraws; ++attempt) {
    double w = rng.uniform(dur_lo, dur_hi);
    double t1 = rng.uniform(0.0, total - w);
    double t2 = t1 + w;
    if (!cfg.ensure_window_sample || window_contains_sample(cfg.grid, t1, t2))
      return {t1, t2};
  }
  throw NumericError("draw_window: no sample-covering window found");
}

void check_range(const char* field, double v, double lo, double hi) {
  double slack = 1e-9 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  if (!(v >= lo - slack && v <= hi + slack))
    throw ValidationError(std::string("generate_disturbance: ") + field + " out of range");
}

}  // namespace

void DatasetConfig::validate() const {
  if (per_class < 1) throw ConfigError("DatasetConfig: per_class must be >= 1");
  if (!(fundamental_hz > 0)) throw ConfigError("DatasetConfig: fundamental_hz must be > 0");
  if (notch_count_min < 1 || notch_count_max < notch_count_min)
    throw ConfigError("DatasetConfig: bad notch window count range");
}

Signal generate_pure(const SamplingGrid& grid, double fundamental_hz) {
  if (!(fundamental_hz > 0.0))
    throw ConfigError("generate_pure: fundamental_hz must be > 0");
  Signal s;
  s.grid = grid;
  s.values.resize(static_cast<std::size_t>(grid.n_samples));
  for (int n = 0; n < grid.n_samples; ++n)
    s.values[static_cast<std::size_t>(n)] = std::sin(kTwoPi * fundamental_hz * grid.time_at(n));
  s.label = DisturbanceClass::PureSignal;
  return s;
}

DisturbanceParams sample_params(DisturbanceClass cls, const DatasetConfig& cfg,
                                RandomStream& rng) {
  cfg.validate();
  const double T = 1.0 / cfg.fundamental_hz;
  DisturbanceParams p;
  p.cls = cls;
  switch (cls) {
    case DisturbanceClass::Harmonic: {
      double ss = 0.0;
      for (auto& a : p.harmonic_alphas) {
        a = rng.uniform(0.05, 0.15);
        ss += a * a;
      }
      double scale = 1.0 / std::sqrt(ss);  // enforce sum alpha_k^2 = 1
      for (auto& a : p.harmonic_alphas) a *= scale;
      break;
    }
    case DisturbanceClass::Swell:
    case DisturbanceClass::Sag: {
      p.alpha = rng.uniform(0.1, 0.8);
      std::tie(p.t1, p.t2) = draw_window(cfg, 6 * T, 10 * T, rng);
      break;
    }
    case DisturbanceClass::Flicker:
      p.alpha = rng.uniform(0.1, 0.2);
      p.flicker_hz = rng.uniform(5.0, 25.0);
      break;
    case DisturbanceClass::Notch: {
      int count = cfg.notch_count_min +
                  static_cast<int>(rng.uniform_int(
                      static_cast<std::uint64_t>(cfg.notch_count_max - cfg.notch_count_min + 1)));
      for (int i = 0; i < count; ++i) {
        auto [t1, t2] = draw_window(cfg, 0.01 * T, 0.05 * T, rng);
        p.notch_centers.push_back(0.5 * (t1 + t2));
        p.notch_widths.push_back(t2 - t1);
        p.notch_alphas.push_back(rng.uniform(0.1, 0.4));
      }
      break;
    }
    case DisturbanceClass::ImpulsiveTransient:
      p.alpha = rng.uniform(1.5, 2.5);
      std::tie(p.t1, p.t2) = draw_window(cfg, 0.01 * T, 0.02 * T, rng);
      break;
    case DisturbanceClass::OscillatoryTransient:
      p.alpha = rng.uniform(0.1, 0.9);
      std::tie(p.t1, p.t2) = draw_window(cfg, 0.01 * T, 0.03 * T, rng);
      p.osc_beta = rng.uniform(0.1, 0.2);
      p.osc_k = rng.uniform(5.0, 80.0);
      break;
    case DisturbanceClass::PureSignal:
      throw ValidationError("sample_params: PureSignal has no parameters");
  }
  return p;
}

Signal generate_disturbance(DisturbanceClass cls, const DisturbanceParams& params,
                            const SamplingGrid& grid, double fundamental_hz) {
  if (!(fundamental_hz > 0.0))
    throw ConfigError("generate_disturbance: fundamental_hz must be > 0");
  if (params.cls != cls)
    throw ValidationError("generate_disturbance: params.cls does not match class");
  const double T = 1.0 / fundamental_hz;
  const double omega = kTwoPi * fundamental_hz;

  // validate against the admissible parameter ranges
  auto check_window = [&](double t1, double t2, double dur_lo, double dur_hi) {
    if (!(t1 < t2)) throw ValidationError("generate_disturbance: t1 must be < t2");
    check_range("t1", t1, 0.0, grid.duration);
    check_range("t2", t2, 0.0, grid.duration);
    check_range("t2-t1", t2 - t1, dur_lo, dur_hi);
  };
  switch (cls) {
    case DisturbanceClass::Harmonic: {
      double ss = 0.0;
      for (double a : params.harmonic_alphas) {
        if (!(a > 0.0)) throw ValidationError("generate_disturbance: alpha_k must be > 0");
        ss += a * a;
      }
      if (std::abs(ss - 1.0) > 1e-9)
        throw ValidationError("generate_disturbance: sum alpha_k^2 must equal 1");
      break;
    }
    case DisturbanceClass::Swell:
    case DisturbanceClass::Sag:
      check_range("alpha", params.alpha, 0.1, 0.8);
      check_window(params.t1, params.t2, 6 * T, 10 * T);
      break;
    case DisturbanceClass::Flicker:
      check_range("alpha", params.alpha, 0.1, 0.2);
      check_range("flicker_hz", params.flicker_hz, 5.0, 25.0);
      break;
    case DisturbanceClass::Notch: {
      if (params.notch_centers.empty())
        throw ValidationError("generate_disturbance: notch_centers is empty");
      if (params.notch_centers.size() != params.notch_widths.size() ||
          params.notch_centers.size() != params.notch_alphas.size())
        throw ValidationError("generate_disturbance: notch field lengths differ");
      for (std::size_t i = 0; i < params.notch_centers.size(); ++i) {
        check_range("notch_alpha", params.notch_alphas[i], 0.1, 0.4);
        check_range("notch_width", params.notch_widths[i], 0.01 * T, 0.05 * T);
        check_range("notch_center", params.notch_centers[i], 0.0, grid.duration);
      }
      break;
    }
    case DisturbanceClass::ImpulsiveTransient:
      check_range("alpha", params.alpha, 1.5, 2.5);
      check_window(params.t1, params.t2, 0.01 * T, 0.02 * T);
      break;
    case DisturbanceClass::OscillatoryTransient:
      check_range("alpha", params.alpha, 0.1, 0.9);
      check_window(params.t1, params.t2, 0.01 * T, 0.03 * T);
      check_range("osc_beta", params.osc_beta, 0.1, 0.2);
      check_range("osc_k", params.osc_k, 5.0, 80.0);
      break;
    case DisturbanceClass::PureSignal:
      throw ValidationError("generate_disturbance: use generate_pure for PureSignal");
  }

  Signal s;
  s.grid = grid;
  s.label = cls;
  s.params = params;
  s.values.resize(static_cast<std::size_t>(grid.n_samples));
  auto in_window = [](double t, double t1, double t2) { return t >= t1 && t < t2; };
  for (int n = 0; n < grid.n_samples; ++n) {
    const double t = grid.time_at(n);
    const double pure = std::sin(omega * t);
    double y = pure;
    switch (cls) {
      case DisturbanceClass::Harmonic: {
        y = 0.0;
        for (std::size_t i = 0; i < kHarmonicOrders.size(); ++i)
          y += params.harmonic_alphas[i] * std::sin(kHarmonicOrders[i] * omega * t);
        break;
      }
      case DisturbanceClass::Swell:
        y = (1.0 + params.alpha * (in_window(t, params.t1, params.t2) ? 1.0 : 0.0)) * pure;
        break;
      case DisturbanceClass::Sag:
        y = (1.0 - params.alpha * (in_window(t, params.t1, params.t2) ? 1.0 : 0.0)) * pure;
        break;
      case DisturbanceClass::Flicker:
        y = (1.0 + params.alpha * std::sin(kTwoPi * params.flicker_hz * t)) * pure;
        break;
      case DisturbanceClass::Notch: {
        double drop = 0.0;
        for (std::size_t i = 0; i < params.notch_centers.size(); ++i) {
          double half = 0.5 * params.notch_widths[i];
          if (in_window(t, params.notch_centers[i] - half, params.notch_centers[i] + half))
            drop += params.notch_alphas[i];
        }
        y = pure - sign_of(pure) * drop;
        break;
      }
      case DisturbanceClass::ImpulsiveTransient:
        y = pure + params.alpha * sign_of(pure) *
                       (in_window(t, params.t1, params.t2) ? 1.0 : 0.0);
        break;
      case DisturbanceClass::OscillatoryTransient:
        y = pure + params.alpha * std::exp(-t / params.osc_beta) *
                       std::sin(params.osc_k * omega * t) *
                       (in_window(t, params.t1, params.t2) ? 1.0 : 0.0);
        break;
      case DisturbanceClass::PureSignal:
        break;
    }
    if (!std::isfinite(y)) throw NumericError("generate_disturbance: non-finite sample");
    s.values[static_cast<std::size_t>(n)] = y;
  }
  return s;
}

std::vector<Signal> generate_dataset(const DatasetConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  std::vector<Signal> out;
  out.reserve(static_cast<std::size_t>(cfg.per_class) * kNumClasses);
  for (int ci = 0; ci < kNumClasses; ++ci) {
    DisturbanceClass cls = kAllClasses[static_cast<std::size_t>(ci)];
    for (int i = 0; i < cfg.per_class; ++i) {
      RandomStream rng(seed, "signal",
                       static_cast<std::uint64_t>(ci) * static_cast<std::uint64_t>(cfg.per_class) +
                           static_cast<std::uint64_t>(i));
      auto params = sample_params(cls, cfg, rng);
      Signal s = generate_disturbance(cls, params, cfg.grid, cfg.fundamental_hz);
      s.seed_trace = rng.substream_seed();
      out.push_back(std::move(s));
    }
  }
  return out;
}

Signal add_awgn(const Signal& signal, double snr_db, RandomStream& rng) {
  if (std::isinf(snr_db) && snr_db > 0) return signal;
  double p = signal.power();
  if (!(p > 0.0)) throw NumericError("add_awgn: signal has zero power");
  double noise_sd = std::sqrt(p / std::pow(10.0, snr_db / 10.0));
  Signal out = signal;
  for (auto& v : out.values) v += noise_sd * rng.normal();
  return out;
}

}  // namespace pqsparse
