#include "nomcode/clustering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "nomcode/error.hpp"

namespace nomcode {

namespace {

// Coded data is discrete, so a point is often exactly equidistant from two
// centroids; rounding must not decide which one wins.
constexpr double kTieTolerance = 1e-12;

bool clearly_less(double a, double b) {
  return a < b - kTieTolerance * std::max(std::abs(a), std::abs(b));
}

std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t bound) {
  // Reject the low sliver that would bias the modulo.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = gen();
    if (x >= threshold) return x % bound;
  }
}

std::vector<ComplexVector> cluster_means(const CodedMatrix& matrix,
                                         std::span<const std::size_t> assignments,
                                         std::size_t k) {
  std::vector<ComplexVector> means(k, ComplexVector(matrix.cols()));
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    const auto c = assignments[r];
    const auto row = matrix.row(r);
    for (std::size_t d = 0; d < row.size(); ++d) means[c][d] += row[d];
    ++counts[c];
  }
  for (std::size_t c = 0; c < k; ++c) {
    // Lloyd passes never leave a cluster empty; guard anyway.
    if (counts[c] == 0) continue;
    for (auto& z : means[c]) z /= static_cast<double>(counts[c]);
  }
  return means;
}

std::vector<std::size_t> assign(const CodedMatrix& matrix,
                                std::span<const ComplexVector> centroids) {
  const auto n = matrix.rows();
  const auto k = centroids.size();
  std::vector<std::size_t> out(n);
  std::vector<double> dist(n);
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t r = 0; r < n; ++r) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_c = 0;
    for (std::size_t c = 0; c < k; ++c) {
      const double d = squared_distance(matrix.row(r), centroids[c]);
      if (c == 0 || clearly_less(d, best)) {
        best = d;
        best_c = c;
      }
    }
    out[r] = best_c;
    dist[r] = best;
    ++counts[best_c];
  }

  for (std::size_t c = 0; c < k; ++c) {
    if (counts[c] != 0) continue;
    std::size_t donor = n;
    for (std::size_t r = 0; r < n; ++r) {
      if (counts[out[r]] < 2) continue;
      if (donor == n || clearly_less(dist[donor], dist[r])) donor = r;
    }
    if (donor == n) break;
    --counts[out[donor]];
    out[donor] = c;
    counts[c] = 1;
    dist[donor] = 0.0;
  }
  return out;
}

ClusteringResult lloyd(const CodedMatrix& matrix,
                       std::vector<ComplexVector> centroids,
                       std::size_t max_iterations, std::uint64_t seed) {
  if (max_iterations < 1) throw DataError("max_iterations must be positive");
  const auto k = centroids.size();
  if (k < 1) throw DataError("k-means needs at least one cluster");
  if (k > matrix.rows()) {
    throw DataError("k = " + std::to_string(k) + " exceeds the " +
                    std::to_string(matrix.rows()) + " available rows");
  }
  for (const auto& c : centroids) {
    if (c.size() != matrix.cols()) {
      throw DataError("centroid dimension does not match the matrix");
    }
  }

  ClusteringResult result;
  result.seed = seed;
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    auto next = assign(matrix, centroids);
    result.iterations = it;
    if (next == result.assignments) break;
    result.assignments = std::move(next);
    centroids = cluster_means(matrix, result.assignments, k);
    result.inertia_trace.push_back(
        inertia(matrix, result.assignments, centroids));
  }
  result.centroids = std::move(centroids);
  result.inertia = result.inertia_trace.back();
  return result;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t condition,
                          std::uint64_t run) noexcept {
  return splitmix64(splitmix64(splitmix64(master_seed) ^ condition) ^ run);
}

std::vector<std::size_t> forgy_rows(std::size_t rows, std::size_t k,
                                    std::uint64_t seed) {
  if (k < 1) throw DataError("k must be at least 1");
  if (k > rows) {
    throw DataError("k = " + std::to_string(k) + " exceeds the " +
                    std::to_string(rows) + " available rows");
  }
  std::mt19937_64 gen(seed);
  std::vector<std::size_t> idx(rows);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + bounded(gen, rows - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  return idx;
}

double inertia(const CodedMatrix& matrix,
               std::span<const std::size_t> assignments,
               std::span<const ComplexVector> centroids) {
  if (assignments.size() != matrix.rows()) {
    throw DataError("assignment count does not match the matrix");
  }
  double sum = 0.0;
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    sum += squared_distance(matrix.row(r), centroids[assignments[r]]);
  }
  return sum;
}

ClusteringResult kmeans(const CodedMatrix& matrix, std::size_t k,
                        std::uint64_t seed, std::size_t max_iterations) {
  const auto rows = forgy_rows(matrix.rows(), k, seed);
  auto result = kmeans_from_rows(matrix, rows, max_iterations);
  result.seed = seed;
  return result;
}

ClusteringResult kmeans_from_rows(const CodedMatrix& matrix,
                                  std::span<const std::size_t> initial_rows,
                                  std::size_t max_iterations) {
  std::vector<ComplexVector> centroids;
  centroids.reserve(initial_rows.size());
  for (const auto r : initial_rows) {
    if (r >= matrix.rows()) throw DataError("initial row index out of range");
    const auto row = matrix.row(r);
    centroids.emplace_back(row.begin(), row.end());
  }
  return lloyd(matrix, std::move(centroids), max_iterations, 0);
}

ClusteringResult kmeans_from_centroids(const CodedMatrix& matrix,
                                       std::vector<ComplexVector> centroids,
                                       std::size_t max_iterations) {
  return lloyd(matrix, std::move(centroids), max_iterations, 0);
}

ClusteringResult kmeans_best_of(const CodedMatrix& matrix, std::size_t k,
                                std::size_t restarts, std::uint64_t seed,
                                std::size_t max_iterations) {
  if (restarts < 1) throw DataError("restarts must be at least 1");
  ClusteringResult best;
  for (std::size_t r = 0; r < restarts; ++r) {
    auto result = kmeans(matrix, k, derive_seed(seed, 0, r), max_iterations);
    if (r == 0 || result.inertia < best.inertia) best = std::move(result);
  }
  return best;
}

double purity_accuracy(std::span<const std::size_t> assignments,
                       std::span<const std::string> labels,
                       AccuracyMetric metric) {
  if (assignments.size() != labels.size()) {
    throw DataError("purity: " + std::to_string(assignments.size()) +
                    " assignments vs " + std::to_string(labels.size()) +
                    " labels");
  }
  if (assignments.empty()) throw DataError("purity: no objects");

  std::map<std::string_view, std::size_t> label_ids;
  for (const auto& l : labels) label_ids.emplace(l, label_ids.size());
  const auto n_labels = label_ids.size();
  const auto n_clusters =
      *std::max_element(assignments.begin(), assignments.end()) + 1;

  std::vector<std::vector<std::size_t>> counts(
      n_clusters, std::vector<std::size_t>(n_labels, 0));
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    ++counts[assignments[i]][label_ids.at(labels[i])];
  }

  std::size_t correct = 0;
  if (metric == AccuracyMetric::MajorityVote) {
    for (const auto& row : counts) {
      correct += *std::max_element(row.begin(), row.end());
    }
  } else {
    if (n_labels > 20) {
      throw DataError("purity: more than 20 distinct labels is not supported");
    }
    // Best matching: clusters in turn, mask = labels already taken.
    const std::size_t states = std::size_t{1} << n_labels;
    std::vector<std::size_t> best(states, 0);
    for (const auto& row : counts) {
      auto next = best;
      for (std::size_t mask = 0; mask < states; ++mask) {
        for (std::size_t l = 0; l < n_labels; ++l) {
          const auto bit = std::size_t{1} << l;
          if ((mask & bit) == 0) continue;
          next[mask] = std::max(next[mask], best[mask ^ bit] + row[l]);
        }
      }
      best = std::move(next);
    }
    correct = best[states - 1];
  }
  return static_cast<double>(correct) /
         static_cast<double>(assignments.size());
}

double ConditionReport::mean_accuracy() const {
  if (runs.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& r : runs) sum += r.accuracy;
  return sum / static_cast<double>(runs.size());
}

double ConditionReport::max_accuracy() const {
  double best = 0.0;
  for (const auto& r : runs) best = std::max(best, r.accuracy);
  return best;
}

std::string bucket_key(double accuracy) {
  for (const int t : kBucketThresholds) {
    if (accuracy + 1e-12 >= t / 100.0) return std::to_string(t);
  }
  return "below";
}

ExperimentReport run_experiment(const Dataset& dataset,
                                const ExperimentConfig& config) {
  const auto decision = dataset.schema().decision_index();
  if (!decision) throw DataError("experiment needs a decision column");
  if (config.repeats < 1) throw DataError("repeats must be at least 1");
  if (config.conditions.empty()) throw DataError("no conditions to run");

  const auto labels = dataset.token_column(dataset.schema()[*decision].name);
  const auto k = std::set<std::string>(labels.begin(), labels.end()).size();

  ExperimentReport report;
  report.config = config;
  report.clusters = k;
  report.objects = dataset.row_count();
  for (const auto mode : config.conditions) {
    const auto matrix =
        standardize(encode_dataset(dataset, mode), config.standardize);
    ConditionReport condition{mode, {}, {}};
    for (const int t : kBucketThresholds) condition.buckets[std::to_string(t)] = 0;
    condition.buckets["below"] = 0;
    for (std::size_t r = 0; r < config.repeats; ++r) {
      const auto seed = derive_seed(config.master_seed,
                                    static_cast<std::uint64_t>(mode), r);
      const auto result = kmeans(matrix, k, seed, config.max_iterations);
      const auto accuracy =
          purity_accuracy(result.assignments, labels, config.metric);
      condition.runs.push_back({seed, accuracy, result.inertia, result.iterations});
      ++condition.buckets[bucket_key(accuracy)];
    }
    report.conditions.push_back(std::move(condition));
  }
  return report;
}

}  // namespace nomcode
