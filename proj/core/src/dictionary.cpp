#include "pqsparse/dictionary.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <nlohmann/json.hpp>

#include "pqsparse/errors.hpp"
#include "pqsparse/rng.hpp"
#include "pqsparse/text.hpp"

namespace pqsparse {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double gabor_atom(double t, double m, double sigma, double f) {
  double d = t - m;
  return 1.0 / std::sqrt(kTwoPi * sigma * sigma) * std::exp(-d * d / (2.0 * sigma * sigma)) *
         std::cos(kTwoPi * f * d);
}

double mexican_hat_atom(double t, double m, double sigma) {
  double d = t - m;
  double u = d * d / (sigma * sigma);
  return 2.0 / (std::sqrt(3.0 * sigma) * std::pow(std::numbers::pi, 0.25)) * (1.0 - u) *
         std::exp(-u / 2.0);
}

int location_count(const SamplingGrid& grid, double m_o) {
  if (!(m_o > 0.0)) throw ConfigError("dictionary: location step m_o must be > 0");
  return static_cast<int>(std::floor(grid.duration / m_o));
}

void warn_above_nyquist(DictionaryBlock& block, double fundamental_hz, int K) {
  double nyquist = 0.5 * (block.grid.n_samples - 1) / block.grid.duration;
  int k_first = static_cast<int>(std::floor(nyquist / fundamental_hz)) + 1;
  if (k_first <= K) {
    block.warnings.push_back(kind_name(block.kind) + ": harmonics k >= " +
                             std::to_string(k_first) + " exceed the Nyquist frequency " +
                             format_double(nyquist) + " Hz; atoms built as configured");
  }
}

std::vector<AtomIndex> make_atom_indices(DictionaryKind kind, int K, int V, int L) {
  std::vector<AtomIndex> ix;
  switch (kind) {
    case DictionaryKind::Harmonics:
      for (auto phase : {HarmonicPhase::Cos, HarmonicPhase::Sin})
        for (int k = 1; k <= K; ++k)
          ix.push_back({DictionaryKind::Harmonics, k, 0, 0, phase});
      break;
    case DictionaryKind::Gabor:
      for (int k = 1; k <= K; ++k)
        for (int l = 1; l <= L; ++l) ix.push_back({DictionaryKind::Gabor, k, l, 0, {}});
      break;
    case DictionaryKind::MexicanHat:
      for (int v = 1; v <= V; ++v)
        for (int l = 1; l <= L; ++l) ix.push_back({DictionaryKind::MexicanHat, 0, l, v, {}});
      break;
    case DictionaryKind::Stockwell:
      for (int k = 1; k <= K; ++k)
        for (int v = 1; v <= V; ++v)
          for (int l = 1; l <= L; ++l) ix.push_back({DictionaryKind::Stockwell, k, l, v, {}});
      break;
  }
  return ix;
}

}  // namespace

std::string kind_name(DictionaryKind k) {
  switch (k) {
    case DictionaryKind::Harmonics: return "harmonics";
    case DictionaryKind::Gabor: return "gabor";
    case DictionaryKind::MexicanHat: return "mhwt";
    case DictionaryKind::Stockwell: return "stockwell";
  }
  throw ValidationError("kind_name: unknown dictionary kind");
}

std::string AtomIndex::describe() const {
  std::string s = kind_name(kind);
  if (kind == DictionaryKind::Harmonics)
    return s + "(k=" + std::to_string(harmonic_k) + "," +
           (phase == HarmonicPhase::Cos ? "cos" : "sin") + ")";
  s += "(";
  if (kind != DictionaryKind::MexicanHat) s += "k=" + std::to_string(harmonic_k) + ",";
  s += "l=" + std::to_string(location_l);
  if (kind != DictionaryKind::Gabor) s += ",v=" + std::to_string(scale_v);
  return s + ")";
}

DictionaryBlock build_harmonics(const SamplingGrid& grid, double fundamental_hz, int K) {
  if (K < 1) throw ConfigError("build_harmonics: K must be >= 1");
  if (!(fundamental_hz > 0)) throw ConfigError("build_harmonics: fundamental_hz must be > 0");
  DictionaryBlock b;
  b.kind = DictionaryKind::Harmonics;
  b.grid = grid;
  b.k_count = K;
  b.atoms.resize(grid.n_samples, 2 * K);
  b.atom_indices = make_atom_indices(b.kind, K, 0, 0);
  b.column_scales.assign(static_cast<std::size_t>(2 * K), 1.0);
  for (int k = 1; k <= K; ++k) {
    for (int n = 0; n < grid.n_samples; ++n) {
      double arg = kTwoPi * k * fundamental_hz * grid.time_at(n);
      b.atoms(n, k - 1) = std::cos(arg);
      b.atoms(n, K + k - 1) = std::sin(arg);
    }
  }
  warn_above_nyquist(b, fundamental_hz, K);
  return b;
}

DictionaryBlock build_gabor(const SamplingGrid& grid, double fundamental_hz, int K, double m_o,
                            double sigma) {
  if (K < 1) throw ConfigError("build_gabor: K must be >= 1");
  if (!(sigma > 0)) throw ConfigError("build_gabor: sigma must be > 0");
  const int L = location_count(grid, m_o);
  DictionaryBlock b;
  b.kind = DictionaryKind::Gabor;
  b.grid = grid;
  b.k_count = K;
  b.l_count = L;
  b.m_o = m_o;
  b.sigma_o = sigma;
  b.atoms.resize(grid.n_samples, K * L);
  b.atom_indices = make_atom_indices(b.kind, K, 0, L);
  b.column_scales.assign(static_cast<std::size_t>(K) * static_cast<std::size_t>(L), 1.0);
  for (int k = 1; k <= K; ++k) {
    double fk = k * fundamental_hz;
    for (int l = 1; l <= L; ++l) {
      double ml = l * m_o;
      int col = (k - 1) * L + (l - 1);
      for (int n = 0; n < grid.n_samples; ++n)
        b.atoms(n, col) = gabor_atom(grid.time_at(n), ml, sigma, fk);
    }
  }
  warn_above_nyquist(b, fundamental_hz, K);
  return b;
}

DictionaryBlock build_mhwt(const SamplingGrid& grid, int V, double m_o, double sigma_o) {
  if (V < 1) throw ConfigError("build_mhwt: V must be >= 1");
  if (!(sigma_o > 0)) throw ConfigError("build_mhwt: sigma_o must be > 0");
  const int L = location_count(grid, m_o);
  DictionaryBlock b;
  b.kind = DictionaryKind::MexicanHat;
  b.grid = grid;
  b.v_count = V;
  b.l_count = L;
  b.m_o = m_o;
  b.sigma_o = sigma_o;
  b.atoms.resize(grid.n_samples, V * L);
  b.atom_indices = make_atom_indices(b.kind, 0, V, L);
  b.column_scales.assign(static_cast<std::size_t>(V) * static_cast<std::size_t>(L), 1.0);
  for (int v = 1; v <= V; ++v) {
    double sv = v * sigma_o;
    for (int l = 1; l <= L; ++l) {
      double ml = l * m_o;
      int col = (v - 1) * L + (l - 1);
      for (int n = 0; n < grid.n_samples; ++n)
        b.atoms(n, col) = mexican_hat_atom(grid.time_at(n), ml, sv);
    }
  }
  return b;
}

DictionaryBlock build_stockwell(const SamplingGrid& grid, double fundamental_hz, int K, int V,
                                double m_o, double sigma_o) {
  if (K < 1 || V < 1) throw ConfigError("build_stockwell: K and V must be >= 1");
  if (!(sigma_o > 0)) throw ConfigError("build_stockwell: sigma_o must be > 0");
  const int L = location_count(grid, m_o);
  DictionaryBlock b;
  b.kind = DictionaryKind::Stockwell;
  b.grid = grid;
  b.k_count = K;
  b.v_count = V;
  b.l_count = L;
  b.m_o = m_o;
  b.sigma_o = sigma_o;
  b.atoms.resize(grid.n_samples, K * V * L);
  b.atom_indices = make_atom_indices(b.kind, K, V, L);
  b.column_scales.assign(static_cast<std::size_t>(K) * static_cast<std::size_t>(V) *
                             static_cast<std::size_t>(L),
                         1.0);
  for (int k = 1; k <= K; ++k) {
    double fk = k * fundamental_hz;
    for (int v = 1; v <= V; ++v) {
      double sv = v * sigma_o;
      for (int l = 1; l <= L; ++l) {
        double ml = l * m_o;
        int col = ((k - 1) * V + (v - 1)) * L + (l - 1);
        for (int n = 0; n < grid.n_samples; ++n)
          b.atoms(n, col) = gabor_atom(grid.time_at(n), ml, sv, fk);
      }
    }
  }
  warn_above_nyquist(b, fundamental_hz, K);
  return b;
}

Dictionary::Dictionary(std::vector<DictionaryBlock> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw ValidationError("Dictionary: no blocks");
  grid_ = blocks_.front().grid;
  offsets_.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    if (!(b.grid == grid_))
      throw ValidationError("Dictionary: blocks built on different grids");
    if (b.width() <= 0) throw ValidationError("Dictionary: empty block");
    offsets_.push_back(total_columns_);
    total_columns_ += b.width();
  }
}

GroupRange Dictionary::group_range(int g) const {
  return {offsets_.at(static_cast<std::size_t>(g)),
          blocks_.at(static_cast<std::size_t>(g)).width()};
}

const AtomIndex& Dictionary::atom_at(int global_column) const {
  for (std::size_t g = 0; g < blocks_.size(); ++g) {
    int local = global_column - offsets_[g];
    if (local >= 0 && local < blocks_[g].width())
      return blocks_[g].atom_indices[static_cast<std::size_t>(local)];
  }
  throw ValidationError("Dictionary: column index out of range");
}

double Dictionary::column_scale_at(int global_column) const {
  for (std::size_t g = 0; g < blocks_.size(); ++g) {
    int local = global_column - offsets_[g];
    if (local >= 0 && local < blocks_[g].width())
      return blocks_[g].column_scales[static_cast<std::size_t>(local)];
  }
  throw ValidationError("Dictionary: column index out of range");
}

int Dictionary::find_column(const AtomIndex& ix) const {
  for (std::size_t g = 0; g < blocks_.size(); ++g) {
    if (blocks_[g].kind != ix.kind) continue;
    for (int c = 0; c < blocks_[g].width(); ++c)
      if (blocks_[g].atom_indices[static_cast<std::size_t>(c)] == ix)
        return offsets_[g] + c;
  }
  return -1;
}

void Dictionary::copy_column(int global_column, Eigen::Ref<Eigen::VectorXd> out) const {
  for (std::size_t g = 0; g < blocks_.size(); ++g) {
    int local = global_column - offsets_[g];
    if (local >= 0 && local < blocks_[g].width()) {
      out = blocks_[g].atoms.col(local);
      return;
    }
  }
  throw ValidationError("Dictionary: column index out of range");
}

Eigen::VectorXd Dictionary::multiply(const Eigen::VectorXd& beta) const {
  if (beta.size() != total_columns_)
    throw ValidationError("Dictionary::multiply: beta length != M");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(grid_.n_samples);
  for (std::size_t g = 0; g < blocks_.size(); ++g)
    out.noalias() += blocks_[g].atoms * beta.segment(offsets_[g], blocks_[g].width());
  return out;
}

Eigen::VectorXd Dictionary::multiply_transpose(const Eigen::VectorXd& v) const {
  if (v.size() != grid_.n_samples)
    throw ValidationError("Dictionary::multiply_transpose: vector length != N");
  Eigen::VectorXd out(total_columns_);
  for (std::size_t g = 0; g < blocks_.size(); ++g)
    out.segment(offsets_[g], blocks_[g].width()).noalias() = blocks_[g].atoms.transpose() * v;
  return out;
}

std::string Dictionary::config_digest() const {
  nlohmann::json j;
  j["n_samples"] = grid_.n_samples;
  j["duration"] = format_double(grid_.duration);
  j["normalized"] = normalized_;
  auto& arr = j["blocks"] = nlohmann::json::array();
  for (const auto& b : blocks_) {
    arr.push_back({{"kind", kind_name(b.kind)},
                   {"K", b.k_count},
                   {"V", b.v_count},
                   {"L", b.l_count},
                   {"m_o", format_double(b.m_o)},
                   {"sigma_o", format_double(b.sigma_o)},
                   {"width", b.width()}});
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(j.dump())));
  return buf;
}

Dictionary concat(std::vector<DictionaryBlock> blocks) { return Dictionary(std::move(blocks)); }

Dictionary normalize_columns(Dictionary dict) {
  for (auto& b : dict.blocks_) {
    for (int c = 0; c < b.width(); ++c) {
      double nrm = b.atoms.col(c).norm();
      if (nrm == 0.0)
        throw ValidationError("normalize_columns: zero column " +
                              b.atom_indices[static_cast<std::size_t>(c)].describe());
      b.atoms.col(c) /= nrm;
      b.column_scales[static_cast<std::size_t>(c)] *= nrm;
    }
  }
  dict.normalized_ = true;
  return dict;
}

void save_dictionary_cache(const std::string& path, const Dictionary& dict) {
  nlohmann::json header;
  header["digest"] = dict.config_digest();
  header["n_samples"] = dict.n_samples();
  header["duration"] = format_double(dict.grid().duration);
  header["normalized"] = dict.normalized();
  auto& arr = header["blocks"] = nlohmann::json::array();
  for (const auto& b : dict.blocks()) {
    arr.push_back({{"kind", kind_name(b.kind)},
                   {"K", b.k_count},
                   {"V", b.v_count},
                   {"L", b.l_count},
                   {"m_o", format_double(b.m_o)},
                   {"sigma_o", format_double(b.sigma_o)},
                   {"width", b.width()}});
  }
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("save_dictionary_cache: cannot open " + tmp);
    std::string h = header.dump();
    std::uint64_t hlen = h.size();
    out.write(reinterpret_cast<const char*>(&hlen), sizeof(hlen));
    out.write(h.data(), static_cast<std::streamsize>(h.size()));
    for (const auto& b : dict.blocks()) {
      out.write(reinterpret_cast<const char*>(b.atoms.data()),
                static_cast<std::streamsize>(sizeof(double) * static_cast<std::size_t>(b.atoms.size())));
      out.write(reinterpret_cast<const char*>(b.column_scales.data()),
                static_cast<std::streamsize>(sizeof(double) * b.column_scales.size()));
    }
    if (!out) throw IoError("save_dictionary_cache: write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

bool load_dictionary_cache(const std::string& path, const std::string& expected_digest,
                           Dictionary& dict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::uint64_t hlen = 0;
  in.read(reinterpret_cast<char*>(&hlen), sizeof(hlen));
  if (!in || hlen > (1u << 20)) return false;
  std::string h(hlen, '\0');
  in.read(h.data(), static_cast<std::streamsize>(hlen));
  if (!in) return false;
  nlohmann::json header = nlohmann::json::parse(h, nullptr, false);
  if (header.is_discarded() || header.value("digest", "") != expected_digest) return false;

  const int n_samples = header["n_samples"];
  SamplingGrid grid(n_samples, parse_double(header["duration"].get<std::string>()));
  std::vector<DictionaryBlock> blocks;
  for (const auto& jb : header["blocks"]) {
    DictionaryBlock b;
    std::string kind = jb["kind"];
    for (auto k : {DictionaryKind::Harmonics, DictionaryKind::Gabor, DictionaryKind::MexicanHat,
                   DictionaryKind::Stockwell})
      if (kind_name(k) == kind) b.kind = k;
    b.grid = grid;
    b.k_count = jb["K"];
    b.v_count = jb["V"];
    b.l_count = jb["L"];
    b.m_o = parse_double(jb["m_o"].get<std::string>());
    b.sigma_o = parse_double(jb["sigma_o"].get<std::string>());
    int width = jb["width"];
    b.atoms.resize(n_samples, width);
    in.read(reinterpret_cast<char*>(b.atoms.data()),
            static_cast<std::streamsize>(sizeof(double) * static_cast<std::size_t>(b.atoms.size())));
    b.column_scales.resize(static_cast<std::size_t>(width));
    in.read(reinterpret_cast<char*>(b.column_scales.data()),
            static_cast<std::streamsize>(sizeof(double) * b.column_scales.size()));
    if (!in) return false;
    b.atom_indices = make_atom_indices(b.kind, b.k_count, b.v_count, b.l_count);
    blocks.push_back(std::move(b));
  }
  Dictionary loaded(std::move(blocks));
  if (header.value("normalized", false)) loaded.normalized_ = true;
  if (loaded.config_digest() != expected_digest) return false;
  dict = std::move(loaded);
  return true;
}

}  // namespace pqsparse
