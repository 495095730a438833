#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nomcode/coded_matrix.hpp"
#include "nomcode/complex_space.hpp"
#include "nomcode/data_model.hpp"
#include "nomcode/nominal_coder.hpp"

namespace nomcode {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Per-run seed: splitmix64(splitmix64(splitmix64(master) ^ condition) ^ run).
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t condition,
                          std::uint64_t run) noexcept;

/// k distinct row indices drawn uniformly without replacement (partial
/// Fisher-Yates over std::mt19937_64, rejection-sampled bounds so the draw
/// is identical on every platform).
std::vector<std::size_t> forgy_rows(std::size_t rows, std::size_t k,
                                    std::uint64_t seed);

struct ClusteringResult {
  std::vector<std::size_t> assignments;
  std::vector<ComplexVector> centroids;
  double inertia = 0.0;
  /// Number of assignment passes performed.
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
  /// Objective after every centroid update, in order.
  std::vector<double> inertia_trace;
};

inline constexpr std::size_t kDefaultMaxIterations = 100;

/// Lloyd's algorithm with Forgy initialization. Ties in the assignment step
/// go to the lowest cluster index. An empty cluster takes over the point
/// lying farthest from its centroid (from a cluster that keeps at least one
/// member). Stops when assignments repeat or after max_iterations passes.
ClusteringResult kmeans(const CodedMatrix& matrix, std::size_t k,
                        std::uint64_t seed,
                        std::size_t max_iterations = kDefaultMaxIterations);

/// Lloyd's algorithm started from the given rows as centroids.
ClusteringResult kmeans_from_rows(const CodedMatrix& matrix,
                                  std::span<const std::size_t> initial_rows,
                                  std::size_t max_iterations =
                                      kDefaultMaxIterations);

/// Lloyd's algorithm started from explicit centroids.
ClusteringResult kmeans_from_centroids(const CodedMatrix& matrix,
                                       std::vector<ComplexVector> centroids,
                                       std::size_t max_iterations =
                                           kDefaultMaxIterations);

/// Lowest-inertia result over `restarts` runs seeded by derive_seed(seed, 0, r).
ClusteringResult kmeans_best_of(const CodedMatrix& matrix, std::size_t k,
                                std::size_t restarts, std::uint64_t seed,
                                std::size_t max_iterations =
                                    kDefaultMaxIterations);

/// Sum of squared distances from each row to its assigned centroid.
double inertia(const CodedMatrix& matrix,
               std::span<const std::size_t> assignments,
               std::span<const ComplexVector> centroids);

enum class AccuracyMetric {
  /// Best one-to-one matching of clusters to labels.
  Injective,
  /// Every cluster votes for its most frequent label.
  MajorityVote,
};

/// Fraction of objects whose cluster is matched to their own label.
double purity_accuracy(std::span<const std::size_t> assignments,
                       std::span<const std::string> labels,
                       AccuracyMetric metric = AccuracyMetric::Injective);

struct ExperimentConfig {
  std::vector<EncodeMode> conditions{EncodeMode::AdHoc, EncodeMode::NumericOnly,
                                     EncodeMode::NominalOnly,
                                     EncodeMode::Combined};
  std::size_t repeats = 20;
  std::uint64_t master_seed = 0;
  std::size_t max_iterations = kDefaultMaxIterations;
  StandardizeOptions standardize;
  AccuracyMetric metric = AccuracyMetric::Injective;
};

struct RunRecord {
  std::uint64_t seed = 0;
  double accuracy = 0.0;
  double inertia = 0.0;
  std::size_t iterations = 0;
};

/// Accuracy thresholds of the bucket table, highest first.
inline constexpr int kBucketThresholds[] = {90, 80, 70, 60, 50};

struct ConditionReport {
  EncodeMode mode;
  std::vector<RunRecord> runs;
  /// Keys "90", "80", "70", "60", "50" and "below"; each run lands in the
  /// highest threshold it reaches.
  std::map<std::string, std::size_t> buckets;

  double mean_accuracy() const;
  double max_accuracy() const;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::size_t clusters = 0;
  std::size_t objects = 0;
  std::vector<ConditionReport> conditions;
};

std::string bucket_key(double accuracy);

/// Encodes, standardizes and clusters the dataset once per (condition, run),
/// with k = number of distinct decision tokens.
ExperimentReport run_experiment(const Dataset& dataset,
                                const ExperimentConfig& config);

}  // namespace nomcode
