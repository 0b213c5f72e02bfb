#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

namespace feedback_insight {

struct FeedbackRecord {
  std::string id;
  std::string text;
  std::string channel;
  std::set<std::string> labels;  // main-topic class ids; empty when unlabeled
};

struct TokenizedDoc {
  std::string id;
  std::vector<std::string> tokens;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultMaxLength = 192;

struct PreprocessConfig {
  std::size_t max_length = kDefaultMaxLength;
  std::unordered_set<std::string> stopwords;
  bool strip_markup = true;
  std::size_t min_tokens = 3;
};

enum class RejectReason { too_short };

struct Rejected {
  std::string id;
  RejectReason reason;
};

std::string_view to_string(RejectReason reason);

/// Reads corpus JSONL. Throws IoError, ParseError (with line), DuplicateId.
std::vector<FeedbackRecord> load_corpus(const std::filesystem::path& path);
/// Writes records in the same JSONL layout that load_corpus reads.
void save_corpus(std::span<const FeedbackRecord> records, const std::filesystem::path& path);

/// Removes `<...>` tags and decodes &amp; &lt; &gt; &quot; &#39; / &apos;.
std::string strip_markup(std::string_view text);

/// Splits on whitespace and punctuation and lowercases (Unicode-aware for UTF-8 input).
std::vector<std::string> tokenize(std::string_view text);

std::variant<TokenizedDoc, Rejected> preprocess(const FeedbackRecord& record, const PreprocessConfig& cfg);

/// One word per line; blank lines and lines starting with '#' are skipped.
std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path);

class Vocabulary {
 public:
  Vocabulary() = default;
  /// Terms must be unique; index assignment follows the given order.
  Vocabulary(std::vector<std::string> terms, std::vector<std::size_t> doc_frequency, std::size_t total_docs);

  std::size_t size() const noexcept { return terms_.size(); }
  std::size_t total_docs() const noexcept { return total_docs_; }
  const std::string& term(std::size_t index) const { return terms_.at(index); }
  const std::vector<std::string>& terms() const noexcept { return terms_; }
  std::optional<std::size_t> index_of(std::string_view term) const;
  std::size_t doc_frequency(std::size_t index) const { return doc_frequency_.at(index); }
  /// FNV-1a over the newline-joined term list.
  std::string hash() const;

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.terms_ == b.terms_ && a.doc_frequency_ == b.doc_frequency_ && a.total_docs_ == b.total_docs_;
  }

 private:
  std::vector<std::string> terms_;
  std::vector<std::size_t> doc_frequency_;
  std::size_t total_docs_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Keeps terms with min_df <= df <= max_df_ratio * total_docs, indexed lexicographically.
/// Throws EmptyVocabulary.
Vocabulary build_vocabulary(std::span<const TokenizedDoc> docs, std::size_t min_df, double max_df_ratio);

struct CorpusStats {
  std::map<std::size_t, std::size_t> labels_per_doc;               // |labels| -> record count
  std::vector<std::pair<std::string, std::size_t>> top_labels;     // descending count, ties by label
};

CorpusStats corpus_stats(std::span<const FeedbackRecord> records, std::size_t top_n);

}  // namespace feedback_insight
