#include "pqsparse/signal.hpp"

#include <charconv>
#include <cmath>
#include <map>

#include "pqsparse/errors.hpp"
#include "pqsparse/text.hpp"

namespace pqsparse {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw IoError("format_double: to_chars failed");
  return std::string(buf, ptr);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw IoError("parse_double: bad number '" + std::string(s) + "'");
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

SamplingGrid::SamplingGrid(int n_samples_, double duration_)
    : n_samples(n_samples_), duration(duration_) {
  if (n_samples < 2) throw ConfigError("SamplingGrid: n_samples must be >= 2");
  if (!(duration > 0.0) || !std::isfinite(duration))
    throw ConfigError("SamplingGrid: duration must be positive and finite");
}

std::vector<double> SamplingGrid::sample_times() const {
  std::vector<double> t(static_cast<std::size_t>(n_samples));
  for (int n = 0; n < n_samples; ++n) t[static_cast<std::size_t>(n)] = time_at(n);
  return t;
}

std::string class_name(DisturbanceClass c) {
  switch (c) {
    case DisturbanceClass::Harmonic: return "harmonic";
    case DisturbanceClass::Swell: return "swell";
    case DisturbanceClass::Sag: return "sag";
    case DisturbanceClass::Flicker: return "flicker";
    case DisturbanceClass::Notch: return "notch";
    case DisturbanceClass::ImpulsiveTransient: return "impulsive";
    case DisturbanceClass::OscillatoryTransient: return "oscillatory";
    case DisturbanceClass::PureSignal: return "pure";
  }
  throw ValidationError("class_name: unknown class");
}

std::string class_code(DisturbanceClass c) {
  if (c == DisturbanceClass::PureSignal) return "pure";
  return "C" + std::to_string(class_index(c) + 1);
}

int class_index(DisturbanceClass c) {
  if (c == DisturbanceClass::PureSignal)
    throw ValidationError("class_index: PureSignal is not a classification label");
  return static_cast<int>(c);
}

DisturbanceClass parse_class(const std::string& name) {
  for (auto c : kAllClasses)
    if (class_name(c) == name || class_code(c) == name) return c;
  if (name == "pure") return DisturbanceClass::PureSignal;
  throw ValidationError("parse_class: unknown class '" + name + "'");
}

std::string DisturbanceParams::serialize() const {
  std::string out = "cls=" + class_name(cls);
  auto add = [&out](const std::string& key, double v) {
    out += ";" + key + "=" + format_double(v);
  };
  switch (cls) {
    case DisturbanceClass::Harmonic:
      for (std::size_t i = 0; i < harmonic_alphas.size(); ++i)
        add("a" + std::to_string(kHarmonicOrders[i]), harmonic_alphas[i]);
      break;
    case DisturbanceClass::Swell:
    case DisturbanceClass::Sag:
      add("alpha", alpha);
      add("t1", t1);
      add("t2", t2);
      break;
    case DisturbanceClass::Flicker:
      add("alpha", alpha);
      add("ff", flicker_hz);
      break;
    case DisturbanceClass::Notch:
      for (std::size_t i = 0; i < notch_centers.size(); ++i) {
        auto sfx = std::to_string(i + 1);
        add("tc" + sfx, notch_centers[i]);
        add("dt" + sfx, notch_widths[i]);
        add("na" + sfx, notch_alphas[i]);
      }
      break;
    case DisturbanceClass::ImpulsiveTransient:
      add("alpha", alpha);
      add("t1", t1);
      add("t2", t2);
      break;
    case DisturbanceClass::OscillatoryTransient:
      add("alpha", alpha);
      add("t1", t1);
      add("t2", t2);
      add("beta", osc_beta);
      add("k", osc_k);
      break;
    case DisturbanceClass::PureSignal:
      break;
  }
  return out;
}

DisturbanceParams DisturbanceParams::deserialize(const std::string& text) {
  std::map<std::string, std::string> kv;
  for (const auto& item : split(text, ';')) {
    auto pos = item.find('=');
    if (pos == std::string::npos)
      throw IoError("DisturbanceParams: malformed item '" + item + "'");
    kv[item.substr(0, pos)] = item.substr(pos + 1);
  }
  auto it = kv.find("cls");
  if (it == kv.end()) throw IoError("DisturbanceParams: missing cls");
  DisturbanceParams p;
  p.cls = parse_class(it->second);
  auto get = [&kv](const std::string& key) { return parse_double(kv.at(key)); };
  switch (p.cls) {
    case DisturbanceClass::Harmonic:
      for (std::size_t i = 0; i < p.harmonic_alphas.size(); ++i)
        p.harmonic_alphas[i] = get("a" + std::to_string(kHarmonicOrders[i]));
      break;
    case DisturbanceClass::Swell:
    case DisturbanceClass::Sag:
    case DisturbanceClass::ImpulsiveTransient:
      p.alpha = get("alpha");
      p.t1 = get("t1");
      p.t2 = get("t2");
      break;
    case DisturbanceClass::Flicker:
      p.alpha = get("alpha");
      p.flicker_hz = get("ff");
      break;
    case DisturbanceClass::Notch:
      for (std::size_t i = 1; kv.count("tc" + std::to_string(i)); ++i) {
        auto sfx = std::to_string(i);
        p.notch_centers.push_back(get("tc" + sfx));
        p.notch_widths.push_back(get("dt" + sfx));
        p.notch_alphas.push_back(get("na" + sfx));
      }
      break;
    case DisturbanceClass::OscillatoryTransient:
      p.alpha = get("alpha");
      p.t1 = get("t1");
      p.t2 = get("t2");
      p.osc_beta = get("beta");
      p.osc_k = get("k");
      break;
    case DisturbanceClass::PureSignal:
      break;
  }
  return p;
}

double Signal::power() const {
  double acc = 0.0;
  for (double v : values) acc += v * v;
  return values.empty() ? 0.0 : acc / static_cast<double>(values.size());
}

}  // namespace pqsparse
