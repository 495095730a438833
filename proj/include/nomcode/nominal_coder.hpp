#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nomcode/coded_matrix.hpp"
#include "nomcode/data_model.hpp"

namespace nomcode {

/// Rank of a class of n identical values: the mean of positions 1..n.
double base_rank(long long n);

/// Exact-on-axis k-th root of unity e^{2 pi i j / k}. Quarter turns are
/// returned without rounding noise, so e.g. j=1, k=2 is exactly -1.
Complex unit_root(std::size_t j, std::size_t k);

/// A nominal value coded as modulus * e^{i phase}, phase = 2 pi j / k.
struct ComplexRank {
  double modulus = 1.0;
  double phase = 0.0;
  std::size_t group_index = 0;  // j
  std::size_t group_size = 1;   // k

  Complex value() const;

  bool operator==(const ComplexRank&) const = default;
};

struct CodebookEntry {
  std::string token;
  std::size_t frequency = 0;
  ComplexRank rank;

  bool operator==(const CodebookEntry&) const = default;
};

/// Token -> complex rank for one attribute. Entries are kept in
/// first-occurrence order of their token.
class NominalCodebook {
 public:
  NominalCodebook(std::string attribute, std::vector<CodebookEntry> entries);

  const std::string& attribute() const noexcept { return attribute_; }
  const std::vector<CodebookEntry>& entries() const noexcept { return entries_; }
  std::size_t total() const noexcept { return total_; }

  const CodebookEntry* find(std::string_view token) const;
  /// Throws DataError when the token was not seen at build time.
  const CodebookEntry& at(std::string_view token) const;

  bool operator==(const NominalCodebook&) const = default;

 private:
  std::string attribute_;
  std::vector<CodebookEntry> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::size_t total_ = 0;
};

/// Groups tokens into classes, ranks each class by its size and separates
/// equal-size classes by roots of unity, in first-occurrence order.
NominalCodebook build_codebook(std::span<const std::string> values,
                               std::string attribute = {});

std::vector<Complex> encode_column(std::span<const std::string> values,
                                   const NominalCodebook& codebook);

/// Baseline: consecutive integers 1, 2, ... in order of first occurrence.
class AdHocCodebook {
 public:
  explicit AdHocCodebook(std::span<const std::string> values);

  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  double code(std::string_view token) const;
  std::vector<double> encode(std::span<const std::string> values) const;

 private:
  std::vector<std::string> tokens_;
  std::map<std::string, double, std::less<>> codes_;
};

AdHocCodebook adhoc_codebook(std::span<const std::string> values);

/// Baseline: standard basis vectors of R^m, m = number of distinct tokens,
/// indexed by first occurrence.
struct OneHotEncoding {
  std::vector<std::string> categories;
  std::vector<std::vector<double>> vectors;
};

OneHotEncoding onehot_encode(std::span<const std::string> values);

enum class EncodeMode { Complex, AdHoc, OneHot, NumericOnly, NominalOnly, Combined };

/// CLI keywords: complex, adhoc, onehot, numeric, nominal, combined.
std::string_view to_string(EncodeMode mode);
EncodeMode parse_encode_mode(std::string_view text);
/// Human-readable row label as used in result tables.
std::string_view display_name(EncodeMode mode);

/// Builds the feature matrix for one experimental condition. Codebooks come
/// from the dataset itself. The decision column is carried as labels only.
/// Complex is the same selection as Combined.
CodedMatrix encode_dataset(const Dataset& dataset, EncodeMode mode);

/// Complex codebooks for every nominal feature column, in schema order.
std::vector<NominalCodebook> build_codebooks(const Dataset& dataset);

}  // namespace nomcode
