#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <json.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "feedback_insight/corpus.hpp"

namespace feedback_insight {

struct LdaConfig {
  std::size_t k = 2;
  std::optional<double> alpha;  // unset: 50 / k
  double beta = 0.01;
  std::size_t iterations = 1000;
  std::uint64_t seed = 42;
  /// 0: A^i from the final Gibbs state. N > 0: average of the smoothed
  /// proportions over the last N sweeps.
  std::size_t average_last_sweeps = 0;
  /// Called after every sweep with (sweep index, k x V topic-word counts, per-topic totals).
  std::function<void(std::size_t, std::span<const std::uint32_t>, std::span<const std::uint64_t>)> on_sweep;

  double resolved_alpha() const { return alpha.value_or(50.0 / static_cast<double>(k)); }
};

struct DocTopicDistribution {
  std::string doc_id;
  std::vector<double> probabilities;  // A^i, length k
  bool out_of_vocabulary = false;     // uniform fallback was used
};

struct LdaModel {
  std::size_t k = 0;
  double alpha = 0.0;
  double beta = 0.0;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  Vocabulary vocabulary;
  std::vector<std::uint32_t> topic_word;   // k x V, row-major
  std::vector<std::uint64_t> topic_totals;  // k
  /// Distributions of the training documents, in input order.
  std::vector<DocTopicDistribution> training_topics;

  std::uint32_t count(std::size_t topic, std::size_t word) const { return topic_word[topic * vocabulary.size() + word]; }
  /// Smoothed topic-word probability (n_kw + beta) / (n_k + V beta).
  double phi(std::size_t topic, std::size_t word) const;
};

/// Collapsed Gibbs sampling. Tokens outside `vocab` are ignored.
/// Throws PreconditionError (k, iterations), EmptyCorpus.
LdaModel fit_lda(std::span<const TokenizedDoc> docs, const Vocabulary& vocab, const LdaConfig& cfg);

/// Fold-in Gibbs for a new document against the fixed topic-word counts.
/// A document without in-vocabulary tokens gets the uniform distribution and a warning.
DocTopicDistribution doc_topics(const LdaModel& model, const TokenizedDoc& doc, std::size_t fold_in_iterations,
                                std::uint64_t seed);

/// n most probable words of a topic; ties broken lexicographically.
/// Throws TopicIndexOutOfRange, PreconditionError (n == 0).
std::vector<std::string> top_words(const LdaModel& model, std::size_t topic, std::size_t n = 10);

nlohmann::json to_json(const LdaModel& model);
LdaModel lda_from_json(const nlohmann::json& j);

}  // namespace feedback_insight
