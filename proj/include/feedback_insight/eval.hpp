#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "feedback_insight/corpus.hpp"

namespace feedback_insight {

struct CoherenceConfig {
  std::size_t window_size = 10;
  double epsilon = 1e-12;

  void validate() const;
};

/// Sliding-window occurrence statistics. Each document contributes its
/// contiguous spans of length min(window, doc length), slid by one token.
class WindowProbs {
 public:
  std::size_t total_windows() const noexcept { return total_windows_; }
  /// Fraction of windows containing `word`.
  double p(std::string_view word) const;
  /// Fraction of windows containing both words (symmetric).
  double p(std::string_view a, std::string_view b) const;

 private:
  friend WindowProbs count_window_probs(std::span<const TokenizedDoc> docs, std::size_t window_size);
  std::size_t total_windows_ = 0;
  std::unordered_map<std::string, std::vector<std::uint32_t>> postings_;  // sorted window ids
};

/// Throws PreconditionError when docs is empty or window_size < 1.
WindowProbs count_window_probs(std::span<const TokenizedDoc> docs, std::size_t window_size);

/// Coefficient 2 / (N (N - 1)) applied to the sum of PMI over unordered pairs.
double uci_coefficient(std::size_t n);

/// Mean pairwise PMI = log((P(wi, wj) + epsilon) / (P(wi) P(wj))). Words with
/// P = 0 are dropped with a warning. Throws TooFewWords when < 2 remain.
double uci_coherence(std::span<const std::string> top_words, const WindowProbs& probs, double epsilon);

struct SilhouetteReport {
  std::vector<double> values;                    // s(i) per point
  double mean = 0.0;
  std::map<std::size_t, double> cluster_means;   // keyed by cluster id
};

/// Euclidean silhouette. A point alone in its cluster scores 0.
/// Throws SingleCluster, PreconditionError (misaligned or ragged input).
SilhouetteReport silhouette(std::span<const std::vector<double>> points, std::span<const std::size_t> assignments);

}  // namespace feedback_insight
