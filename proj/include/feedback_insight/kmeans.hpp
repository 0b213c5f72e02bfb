#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace feedback_insight {

struct KMeansResult {
  std::vector<std::size_t> assignments;
  std::vector<std::vector<double>> centroids;
  double inertia = 0.0;
  std::vector<double> inertia_trace;  // after each Lloyd iteration
  std::size_t iterations = 0;
  bool converged = false;
};

/// Lloyd's algorithm with seeded k-means++ seeding. Nearest-centroid ties go to
/// the lowest index; an empty cluster takes the point farthest from its centroid.
/// Throws PreconditionError (k == 0, ragged input), TooFewPoints (k > n).
KMeansResult kmeans(std::span<const std::vector<double>> points, std::size_t k, std::uint64_t seed,
                    std::size_t max_iters = 100);

}  // namespace feedback_insight
