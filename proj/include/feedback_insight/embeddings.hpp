#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace feedback_insight {

inline constexpr std::size_t kDefaultEmbeddingDimension = 768;

struct EmbeddingVector {
  std::vector<double> values;
  std::string id;  // optional source record id

  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const EmbeddingVector&, const EmbeddingVector&) = default;
};

/// Vectors keyed by id, all of one dimension. Iteration follows insertion order.
class EmbeddingStore {
 public:
  EmbeddingStore() = default;
  EmbeddingStore(std::size_t dimension, std::string provider, std::string model = {});

  std::size_t dimension() const noexcept { return dimension_; }
  const std::string& provider() const noexcept { return provider_; }
  const std::string& model() const noexcept { return model_; }
  std::size_t size() const noexcept { return order_.size(); }
  bool empty() const noexcept { return order_.empty(); }

  /// Throws DimensionMismatch, DuplicateId.
  void add(std::string id, std::vector<double> values);
  const EmbeddingVector* find(std::string_view id) const;
  const std::vector<EmbeddingVector>& entries() const noexcept { return order_; }

  /// Extra header attributes (written alongside dimension/provider/model).
  std::map<std::string, std::string>& attributes() noexcept { return attributes_; }
  const std::map<std::string, std::string>& attributes() const noexcept { return attributes_; }

  friend bool operator==(const EmbeddingStore& a, const EmbeddingStore& b) {
    return a.dimension_ == b.dimension_ && a.provider_ == b.provider_ && a.model_ == b.model_ &&
           a.order_ == b.order_ && a.attributes_ == b.attributes_;
  }

 private:
  std::size_t dimension_ = 0;
  std::string provider_;
  std::string model_;
  std::vector<EmbeddingVector> order_;
  std::unordered_map<std::string, std::size_t> index_;
  std::map<std::string, std::string> attributes_;
};

/// JSONL: header {"dimension", "provider", ...} then {"id", "values"} rows.
/// Throws IoError, ParseError (with line), DimensionMismatch.
EmbeddingStore load_store(const std::filesystem::path& path);
void save_store(const EmbeddingStore& store, const std::filesystem::path& path);

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::size_t dimension() const = 0;
  virtual std::string name() const = 0;
  virtual std::string model() const { return {}; }

  virtual EmbeddingVector embed(std::string_view text) = 0;
  /// Embedding for a corpus record. Providers keyed by record id override this.
  virtual EmbeddingVector embed_record(std::string_view id, std::string_view text);
  virtual std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts);
};

/// Validated single embedding: text must be nonempty, length must match the
/// provider's declared dimension. Throws PreconditionError, DimensionMismatch.
EmbeddingVector get_embedding(EmbeddingProvider& provider, std::string_view text);

/// Test/demo provider: sum of per-token Gaussian vectors seeded by a token hash.
/// Identical text gives an identical vector; shared words give correlated vectors.
class MockProvider : public EmbeddingProvider {
 public:
  explicit MockProvider(std::size_t dimension = kDefaultEmbeddingDimension, std::uint64_t seed = 0);
  std::size_t dimension() const override { return dimension_; }
  std::string name() const override { return "mock"; }
  std::string model() const override;
  EmbeddingVector embed(std::string_view text) override;

 private:
  std::size_t dimension_;
  std::uint64_t seed_;
};

/// Serves precomputed vectors. Record lookups use the record id; free-text
/// lookups use the text itself as the key, and texts missing from the store go
/// to `text_fallback` when one is given (sub-topic queries are never precomputed).
class StoreProvider : public EmbeddingProvider {
 public:
  /// Throws DimensionMismatch if the fallback's dimension differs from the store's.
  explicit StoreProvider(EmbeddingStore store, std::unique_ptr<EmbeddingProvider> text_fallback = nullptr);
  std::size_t dimension() const override { return store_.dimension(); }
  std::string name() const override { return "store"; }
  std::string model() const override { return store_.model(); }
  EmbeddingVector embed(std::string_view text) override;
  EmbeddingVector embed_record(std::string_view id, std::string_view text) override;
  const EmbeddingStore& store() const noexcept { return store_; }

 private:
  EmbeddingStore store_;
  std::unique_ptr<EmbeddingProvider> text_fallback_;
};

struct RemoteProviderConfig {
  std::string url;  // e.g. "http://127.0.0.1:8080"
  std::size_t dimension = kDefaultEmbeddingDimension;
  int attempts = 3;
  std::chrono::milliseconds initial_backoff{250};
  std::size_t batch_size = 32;
  std::size_t max_in_flight = 4;
  std::chrono::seconds timeout{30};
};

/// POST {url}/embed with {"texts": [...]}; expects {"dimension", "vectors"} in request order.
class RemoteProvider : public EmbeddingProvider {
 public:
  explicit RemoteProvider(RemoteProviderConfig cfg);
  std::size_t dimension() const override { return cfg_.dimension; }
  std::string name() const override { return "remote"; }
  std::string model() const override { return cfg_.url; }
  EmbeddingVector embed(std::string_view text) override;
  std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) override;

 private:
  std::vector<EmbeddingVector> post_once(std::span<const std::string> texts);
  std::vector<EmbeddingVector> post_with_retry(std::span<const std::string> texts);

  RemoteProviderConfig cfg_;
};

struct NormalizationSummary {
  double min_b = 0.0;
  double max_b = 0.0;
  std::size_t count = 0;
  bool degenerate = false;  // max_b == min_b; every output is 0.5
};

struct NormalizedGroup {
  std::vector<EmbeddingVector> vectors;
  NormalizationSummary summary;
};

/// Min-max scaling with a single scalar min/max taken over every element of
/// every vector in the group. Throws PreconditionError on an empty group or
/// non-finite values; a degenerate range yields 0.5 everywhere plus a warning.
NormalizedGroup minmax_normalize_group(std::span<const EmbeddingVector> vectors);

}  // namespace feedback_insight
