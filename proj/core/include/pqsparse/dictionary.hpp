#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "pqsparse/signal.hpp"

namespace pqsparse {

enum class DictionaryKind { Harmonics, Gabor, MexicanHat, Stockwell };
enum class HarmonicPhase { Cos, Sin };

std::string kind_name(DictionaryKind k);

/// Identifies one atom inside its block. Which fields are meaningful
/// depends on the kind: Harmonics uses (k, phase), Gabor (k, l),
/// MexicanHat (l, v), Stockwell (k, l, v).
struct AtomIndex {
  DictionaryKind kind = DictionaryKind::Harmonics;
  int harmonic_k = 0;
  int location_l = 0;
  int scale_v = 0;
  HarmonicPhase phase = HarmonicPhase::Cos;

  bool operator==(const AtomIndex&) const = default;
  std::string describe() const;
};

/// One sub-dictionary: columns are atoms sampled on the grid.
/// Column order is canonical: Harmonics all-cos then all-sin (k = 1..K
/// each); Gabor k-major then l; MexicanHat v-major then l; Stockwell k,
/// then v, then l (l = 1..L innermost everywhere).
struct DictionaryBlock {
  DictionaryKind kind;
  SamplingGrid grid;
  Eigen::MatrixXd atoms;                 // n_samples x width
  std::vector<AtomIndex> atom_indices;   // one per column
  std::vector<double> column_scales;     // accumulated normalization divisors
  std::vector<std::string> warnings;     // e.g. atoms above Nyquist

  // builder parameters, echoed for digests and caches
  int k_count = 0;       // K (Harmonics/Gabor/Stockwell)
  int v_count = 0;       // V (MexicanHat/Stockwell)
  int l_count = 0;       // L (location count; 0 for Harmonics)
  double m_o = 0.0;      // location step (s)
  double sigma_o = 0.0;  // length scale / scale step (s)

  int width() const { return static_cast<int>(atoms.cols()); }
};

struct GroupRange {
  int start = 0;  // first global column
  int size = 0;   // p_g
};

/// Ordered concatenation of blocks; one group per block.
class Dictionary {
 public:
  Dictionary() = default;
  explicit Dictionary(std::vector<DictionaryBlock> blocks);

  int n_samples() const { return grid_.n_samples; }
  const SamplingGrid& grid() const { return grid_; }
  int total_columns() const { return total_columns_; }           // M
  int group_count() const { return static_cast<int>(blocks_.size()); }
  GroupRange group_range(int g) const;
  const DictionaryBlock& block(int g) const { return blocks_.at(static_cast<std::size_t>(g)); }
  const std::vector<DictionaryBlock>& blocks() const { return blocks_; }
  bool normalized() const { return normalized_; }

  /// Global column index <-> atom lookup.
  const AtomIndex& atom_at(int global_column) const;
  double column_scale_at(int global_column) const;
  /// Linear search for the unique column carrying this atom; -1 if absent.
  int find_column(const AtomIndex& ix) const;

  /// Evaluate column j of the concatenated dictionary into out (size N).
  void copy_column(int global_column, Eigen::Ref<Eigen::VectorXd> out) const;

  /// Phi * beta (and Phi^T v) assembled block by block.
  Eigen::VectorXd multiply(const Eigen::VectorXd& beta) const;
  Eigen::VectorXd multiply_transpose(const Eigen::VectorXd& v) const;

  /// Fingerprint of grid + block configuration + normalization state,
  /// used to bind Coefficients to the dictionary and key binary caches.
  std::string config_digest() const;

  friend Dictionary normalize_columns(Dictionary dict);
  friend bool load_dictionary_cache(const std::string& path, const std::string& expected_digest,
                                    Dictionary& dict);

 private:
  std::vector<DictionaryBlock> blocks_;
  std::vector<int> offsets_;
  SamplingGrid grid_;
  int total_columns_ = 0;
  bool normalized_ = false;
};

/// cos(2*pi*k*f0*t_n) and sin(2*pi*k*f0*t_n) for k = 1..K (2K columns).
DictionaryBlock build_harmonics(const SamplingGrid& grid, double fundamental_hz, int K);

/// Gabor atoms (1/sqrt(2 pi sigma^2)) exp(-(t-m_l)^2/(2 sigma^2)) cos(2 pi f_k (t-m_l)),
/// f_k = k*f0 (k = 1..K), m_l = l*m_o (l = 1..floor(duration/m_o)).
DictionaryBlock build_gabor(const SamplingGrid& grid, double fundamental_hz, int K, double m_o,
                            double sigma);

/// Mexican hat atoms (2/(sqrt(3 sigma_v) pi^(1/4))) [1-(t-m_l)^2/sigma_v^2]
/// exp(-(t-m_l)^2/(2 sigma_v^2)), sigma_v = v*sigma_o (v = 1..V).
DictionaryBlock build_mhwt(const SamplingGrid& grid, int V, double m_o, double sigma_o);

/// Stockwell atoms: Gabor form with sigma_v = v*sigma_o, over k = 1..K,
/// v = 1..V, l = 1..L.
DictionaryBlock build_stockwell(const SamplingGrid& grid, double fundamental_hz, int K, int V,
                                double m_o, double sigma_o);

/// Stack blocks in order; one group per block. All blocks must share a grid.
Dictionary concat(std::vector<DictionaryBlock> blocks);

/// Scale every column to unit l2 norm, accumulating the divisors in
/// column_scales so original atoms are recoverable. Idempotent.
Dictionary normalize_columns(Dictionary dict);

/// Binary atom-matrix cache with a JSON header carrying the config digest.
void save_dictionary_cache(const std::string& path, const Dictionary& dict);
/// Returns false (leaving dict untouched) when the file is missing or the
/// digest does not match.
bool load_dictionary_cache(const std::string& path, const std::string& expected_digest,
                           Dictionary& dict);

}  // namespace pqsparse
