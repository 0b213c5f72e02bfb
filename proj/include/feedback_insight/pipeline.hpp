#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <json.hpp>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "feedback_insight/classifier.hpp"
#include "feedback_insight/corpus.hpp"
#include "feedback_insight/embeddings.hpp"
#include "feedback_insight/eval.hpp"
#include "feedback_insight/knowledge.hpp"
#include "feedback_insight/pshti.hpp"

namespace feedback_insight {

std::string_view version();

enum class Stage { ingest, embed, classify, pshti, label, eval, report };

inline constexpr std::array<Stage, 7> kStages = {Stage::ingest, Stage::embed, Stage::classify, Stage::pshti,
                                                 Stage::label,  Stage::eval,  Stage::report};

std::string_view to_string(Stage stage);
std::optional<Stage> parse_stage(std::string_view name);

struct EmbeddingSettings {
  std::string provider = "mock";  // mock | store | remote
  std::string text_provider = "none";  // store only: none | mock | remote, for free text absent from the store
  std::size_t dimension = kDefaultEmbeddingDimension;
  std::uint64_t seed = 0;  // mock provider only
  std::string url;
  std::size_t batch_size = 32;
  std::size_t max_in_flight = 4;
  int attempts = 3;
  int initial_backoff_ms = 250;
  int timeout_s = 30;
};

struct PipelineConfig {
  std::filesystem::path source;  // the config file, if loaded from disk
  std::uint64_t seed = 42;

  std::filesystem::path corpus;
  std::filesystem::path catalog;
  std::filesystem::path output_dir;
  std::optional<std::filesystem::path> stopwords;
  std::optional<std::filesystem::path> embedding_store;

  PreprocessConfig preprocess;
  EmbeddingSettings embedding;
  TrainConfig classifier;
  double test_fraction = 0.2;
  std::size_t top_k = 3;

  SubtopicConfig pshti;  // seed is replaced per group
  std::vector<double> gamma_sweep;  // extra gamma rows for the comparison table
  std::size_t min_group_size = 0;
  std::size_t workers = 1;

  KnowledgeConfig knowledge;
  CoherenceConfig eval;

  /// Normalized configuration with every default filled in; echoed into reports and hashed.
  nlohmann::json echo;
};

/// Parses the JSON config document. Relative paths resolve against `base_dir`.
/// FEEDBACK_INSIGHT_SEED, when set, replaces the seed. Throws ConfigError.
PipelineConfig parse_pipeline_config(const nlohmann::json& doc, const std::filesystem::path& base_dir);
/// Throws ConfigError (including unreadable or malformed files).
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

std::unique_ptr<EmbeddingProvider> make_provider(const PipelineConfig& cfg);

struct ComparisonRow {
  ClusteringMethod method = ClusteringMethod::pshti_norm;
  double gamma = 1.0;
  std::optional<double> silhouette;  // mean over clustered groups
  std::optional<double> coherence;   // mean over every scored sub-topic
  std::size_t groups = 0;
};

/// Stage runner over one output directory. Every artifact records the hash of
/// the configuration and inputs it was produced from; a stage refuses upstream
/// artifacts whose hash does not match the current configuration.
class Pipeline {
 public:
  /// Reads the input files to compute artifact hashes. Throws IoError.
  explicit Pipeline(PipelineConfig cfg);
  ~Pipeline();
  Pipeline(const Pipeline&) = delete;
  Pipeline& operator=(const Pipeline&) = delete;

  const PipelineConfig& config() const noexcept { return cfg_; }

  /// All stages in order, then timings.json.
  void run_all();
  /// One stage; deletes the artifacts of every later stage first.
  /// Throws MissingUpstreamArtifact when the previous stage's artifact is absent or stale.
  void run(Stage stage);
  /// Stage currently executing (for error reporting).
  std::optional<Stage> current_stage() const noexcept { return current_; }

  /// Reuses fresh ingest/embed/classify artifacts (recomputing stale ones), then clusters
  /// and scores every eligible group once per method. Writes comparison.json and comparison.md.
  std::vector<ComparisonRow> compare(std::span<const ClusteringMethod> methods);

  std::string stage_hash(Stage stage) const;
  std::filesystem::path artifact(Stage stage) const;
  bool is_fresh(Stage stage) const;

 private:
  void ingest();
  void embed();
  void classify();
  void pshti();
  void label();
  void evaluate();
  void report();
  void require_fresh(Stage stage) const;
  void remove_artifacts(Stage stage) const;

  PipelineConfig cfg_;
  std::array<std::string, 7> hashes_;
  std::optional<Stage> current_;
  std::vector<std::pair<std::string, double>> timings_;
};

/// Exit status for an exception escaping a pipeline entry point:
/// 1 configuration, 2 input data or missing upstream artifact, 3 stage failure.
int exit_code_for(const std::exception& e);

/// CLI entry points. Diagnostics go to `err`; the return value is the exit status.
int run_pipeline(const std::filesystem::path& config_path, std::ostream& err);
int run_stage(std::string_view stage_name, const std::filesystem::path& config_path, std::ostream& err);
int compare_methods(const std::filesystem::path& config_path, std::span<const ClusteringMethod> methods,
                    std::ostream& err);

}  // namespace feedback_insight
