#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "feedback_insight/autoencoder.hpp"
#include "feedback_insight/corpus.hpp"
#include "feedback_insight/embeddings.hpp"
#include "feedback_insight/kmeans.hpp"
#include "feedback_insight/lda.hpp"

namespace feedback_insight {

/// concat(gamma * A^i, normalized B^i). The first `topic_dims` entries are the scaled topic mass.
struct HybridVector {
  std::string doc_id;
  std::vector<double> values;
  std::size_t topic_dims = 0;
};

/// Throws UnnormalizedEmbedding when any embedding element lies outside [0, 1]
/// (beyond 1e-12), PreconditionError when gamma <= 0.
HybridVector build_hybrid(const DocTopicDistribution& topics, const EmbeddingVector& normalized, double gamma);
/// Same concatenation with no range check on the embedding part (unnormalized ablation).
HybridVector concat_hybrid(const DocTopicDistribution& topics, const EmbeddingVector& embedding, double gamma);

struct KSubRule {
  std::size_t threshold = 500;  // strictly more than this -> large
  std::size_t large = 8;
  std::size_t small = 2;
};

std::size_t choose_k_sub(std::size_t group_size, const KSubRule& rule = {});

using ClusterDocs = std::vector<std::reference_wrapper<const TokenizedDoc>>;

/// Class-based TF-IDF: tf(term, cluster) * log(1 + clusters / clusters containing term).
/// Returns up to n words per cluster; ties lexicographic. Throws EmptyCluster.
std::vector<std::vector<std::string>> cluster_top_words(std::span<const ClusterDocs> clusters, std::size_t n = 10);
std::vector<std::string> extract_top_words(std::span<const ClusterDocs> clusters, std::size_t cluster,
                                           std::size_t n = 10);

/// Alternative extraction: words ranked by sum over members of sum_k A^i_k * phi_k(w).
std::vector<std::string> lda_mass_top_words(const LdaModel& model, std::span<const DocTopicDistribution> members,
                                            std::size_t n = 10);

struct SubTopicCluster {
  std::size_t index = 0;
  std::vector<std::string> member_ids;
  std::vector<double> centroid;
  std::vector<std::string> top_words;
};

enum class ClusteringMethod { pshti_norm, pshti_unnorm, lda_only, embed_only };
enum class TopWordMethod { class_tfidf, lda_mass };

std::string_view to_string(ClusteringMethod method);
std::optional<ClusteringMethod> parse_clustering_method(std::string_view name);

struct SubtopicConfig {
  ClusteringMethod method = ClusteringMethod::pshti_norm;
  double gamma = 1.0;
  KSubRule k_sub_rule;
  std::optional<std::size_t> k_sub;  // overrides the size rule
  // Per-group vocabulary and LDA.
  std::size_t min_df = 2;
  double max_df_ratio = 0.5;
  std::optional<double> alpha;
  double beta = 0.01;
  std::size_t lda_iterations = 1000;
  std::size_t average_last_sweeps = 0;
  AutoencoderConfig autoencoder;
  std::size_t kmeans_max_iters = 100;
  std::size_t top_words = 10;
  TopWordMethod top_word_method = TopWordMethod::class_tfidf;
  std::uint64_t seed = 42;
};

/// Input to sub-topic clustering: the docs of one main-topic group and their
/// raw embeddings, aligned by position.
struct GroupInput {
  std::span<const TokenizedDoc> docs;
  std::span<const EmbeddingVector> embeddings;
};

struct SubtopicResult {
  ClusteringMethod method = ClusteringMethod::pshti_norm;
  std::size_t k_sub = 0;
  double gamma = 0.0;
  std::vector<std::vector<double>> points;  // the vectors k-means clustered, aligned with the docs
  KMeansResult kmeans;
  std::vector<SubTopicCluster> clusters;
  std::vector<double> autoencoder_loss;  // empty for methods without an autoencoder
  std::optional<NormalizationSummary> normalization;
};

/// Stage 1 for one group: LDA topic mix, optional min-max normalization,
/// hybrid concatenation, autoencoder compression, k-means, and top words.
/// The method selects which representation is clustered. Throws TooFewPoints
/// when the group is smaller than k_sub, plus the errors of each step.
SubtopicResult cluster_subtopics(const GroupInput& group, const SubtopicConfig& cfg);

}  // namespace feedback_insight
