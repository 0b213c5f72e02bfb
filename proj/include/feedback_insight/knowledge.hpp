#pragma once

#include <filesystem>
#include <json.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "feedback_insight/embeddings.hpp"
#include "feedback_insight/pshti.hpp"

namespace feedback_insight {

/// One self-help catalog item.
struct IssueEntry {
  std::string id;
  std::string title;
  std::string url;
  std::optional<std::string> body;
};

/// JSONL {"id", "title", "url", "body"?}. Throws IoError, ParseError (with line), DuplicateId.
std::vector<IssueEntry> load_catalog(const std::filesystem::path& path);

/// u.v / (|u||v|). A zero vector yields 0 with a warning. Throws DimensionMismatch.
double cosine(std::span<const double> u, std::span<const double> v);

/// Catalog plus title embeddings, computed once and shared read-only.
struct IssueIndex {
  std::vector<IssueEntry> catalog;
  std::vector<EmbeddingVector> title_embeddings;  // aligned with catalog
};

IssueIndex build_issue_index(std::vector<IssueEntry> catalog, EmbeddingProvider& provider);

struct KnowledgeConfig {
  double candidate_threshold = 0.3;
  double accept_threshold = 0.6;
  std::size_t max_candidates = 10;

  void validate() const;
};

struct CandidateMatch {
  std::size_t catalog_index = 0;
  std::string issue_id;
  double stage1_score = 0.0;
  std::optional<double> stage2_score;
};

enum class LabelKind { issue, word_fallback };

struct SubTopicLabel {
  LabelKind kind = LabelKind::word_fallback;
  std::optional<std::string> issue_id;
  std::optional<std::string> issue_title;
  std::optional<double> confidence;
  std::vector<std::string> top_words;
  std::vector<CandidateMatch> candidates;  // descending stage1 score
};

/// True when a best stage-2 score clears the gate (inclusive).
inline bool accepts(double confidence, double accept_threshold) { return confidence >= accept_threshold; }

/// Top words joined by single spaces.
std::string subtopic_query(std::span<const std::string> top_words);

/// Centroid of members' raw embeddings (the batch-mode representative).
EmbeddingVector representative_centroid(std::span<const EmbeddingVector> members);

/// Two-round mapping: rank catalog titles against the query embedding, keep up
/// to max_candidates at or above candidate_threshold, then score survivors
/// against `representative`. Propagates ProviderUnavailable.
SubTopicLabel stage2_map(std::span<const std::string> top_words, const IssueIndex& index, EmbeddingProvider& provider,
                         const EmbeddingVector& representative, const KnowledgeConfig& cfg);

/// Batch mode: representative = centroid of the cluster members' embeddings.
SubTopicLabel stage2_map(const SubTopicCluster& subtopic, const IssueIndex& index, EmbeddingProvider& provider,
                         std::span<const EmbeddingVector> member_embeddings, const KnowledgeConfig& cfg);

/// Per-feedback serving mode: representative = one feedback's own embedding.
SubTopicLabel map_feedback(const SubTopicCluster& subtopic, const IssueIndex& index, EmbeddingProvider& provider,
                           const EmbeddingVector& feedback_embedding, const KnowledgeConfig& cfg);

std::string_view to_string(LabelKind kind);
nlohmann::json to_json(const SubTopicLabel& label, std::size_t subtopic_index);

}  // namespace feedback_insight
