#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace feedback_insight {

/// Base of every error raised by the library. The CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed input. `line()` is 1-based; 0 means "not tied to a line".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicateId : public Error {
 public:
  explicit DuplicateId(std::string id) : Error("duplicate id \"" + id + "\""), id_(std::move(id)) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual, const std::string& context = {})
      : Error("dimension mismatch" + (context.empty() ? std::string{} : " (" + context + ")") +
              ": expected " + std::to_string(expected) + ", got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}
  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// A caller-side contract violation (bad argument, bad config value).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class EmptyVocabulary : public Error {
 public:
  EmptyVocabulary() : Error("vocabulary filters removed every term") {}
};

class EmptyCorpus : public Error {
 public:
  EmptyCorpus() : Error("corpus has no in-vocabulary tokens") {}
  using Error::Error;
};

class UnknownClass : public Error {
 public:
  explicit UnknownClass(std::string cls) : Error("unknown class \"" + cls + "\""), cls_(std::move(cls)) {}
  const std::string& class_id() const noexcept { return cls_; }

 private:
  std::string cls_;
};

/// Training diverged. `epoch()` is 0-based.
class NonFiniteLoss : public Error {
 public:
  explicit NonFiniteLoss(std::size_t epoch)
      : Error("non-finite loss at epoch " + std::to_string(epoch)), epoch_(epoch) {}
  std::size_t epoch() const noexcept { return epoch_; }

 private:
  std::size_t epoch_;
};

class ProviderUnavailable : public Error {
 public:
  using Error::Error;
};

class EmptyLabelSet : public Error {
 public:
  EmptyLabelSet() : Error("evaluation item has an empty label set") {}
  using Error::Error;
};

class TopicIndexOutOfRange : public Error {
 public:
  TopicIndexOutOfRange(std::size_t topic, std::size_t k)
      : Error("topic index " + std::to_string(topic) + " out of range for k=" + std::to_string(k)) {}
};

class UnnormalizedEmbedding : public Error {
 public:
  using Error::Error;
};

class TooFewPoints : public Error {
 public:
  TooFewPoints(std::size_t clusters, std::size_t points)
      : Error("cannot form " + std::to_string(clusters) + " clusters from " + std::to_string(points) +
              " points") {}
};

class EmptyCluster : public Error {
 public:
  EmptyCluster() : Error("cluster has no member documents") {}
};

class TooFewWords : public Error {
 public:
  explicit TooFewWords(std::size_t usable)
      : Error("coherence needs at least 2 words present in the reference corpus, got " +
              std::to_string(usable)) {}
};

class SingleCluster : public Error {
 public:
  SingleCluster() : Error("silhouette is undefined for fewer than two clusters") {}
};

/// Invalid configuration value; `field` is a dotted path such as "classifier.learning_rate".
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A stage was asked to run but an input artifact is absent or was produced under another configuration.
class MissingUpstreamArtifact : public Error {
 public:
  using Error::Error;
};

}  // namespace feedback_insight
