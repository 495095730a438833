#include "nomcode/nominal_coder.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "nomcode/error.hpp"

namespace nomcode {

double base_rank(long long n) {
  if (n < 1) {
    throw DataError("base rank needs a class size of at least 1, got " +
                    std::to_string(n));
  }
  return (static_cast<double>(n) + 1.0) / 2.0;
}

Complex unit_root(std::size_t j, std::size_t k) {
  if (k == 0 || j >= k) throw DataError("unit_root: need 0 <= j < k");
  if ((4 * j) % k == 0) {
    switch ((4 * j) / k) {
      case 0:
        return {1.0, 0.0};
      case 1:
        return {0.0, 1.0};
      case 2:
        return {-1.0, 0.0};
      default:
        return {0.0, -1.0};
    }
  }
  const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) /
                     static_cast<double>(k);
  return {std::cos(phi), std::sin(phi)};
}

Complex ComplexRank::value() const {
  return modulus * unit_root(group_index, group_size);
}

NominalCodebook::NominalCodebook(std::string attribute,
                                 std::vector<CodebookEntry> entries)
    : attribute_(std::move(attribute)), entries_(std::move(entries)) {
  if (entries_.empty()) throw DataError("codebook has no entries");
  std::map<std::size_t, std::set<std::size_t>> phases_by_frequency;
  std::map<std::size_t, std::size_t> classes_by_frequency;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (!index_.emplace(e.token, i).second) {
      throw DataError("codebook '" + attribute_ + "': duplicate token '" +
                      e.token + "'");
    }
    const auto& r = e.rank;
    if (e.frequency < 1 ||
        r.modulus != base_rank(static_cast<long long>(e.frequency)) ||
        r.group_size < 1 || r.group_index >= r.group_size ||
        std::abs(r.phase - 2.0 * std::numbers::pi *
                               static_cast<double>(r.group_index) /
                               static_cast<double>(r.group_size)) > 1e-12) {
      throw DataError("codebook '" + attribute_ + "': inconsistent entry '" +
                      e.token + "'");
    }
    if (!phases_by_frequency[e.frequency].insert(r.group_index).second) {
      throw DataError("codebook '" + attribute_ + "': repeated phase index");
    }
    ++classes_by_frequency[e.frequency];
    total_ += e.frequency;
  }
  for (const auto& e : entries_) {
    if (e.rank.group_size != classes_by_frequency[e.frequency]) {
      throw DataError("codebook '" + attribute_ + "': group size of '" +
                      e.token + "' does not match its frequency group");
    }
  }
}

const CodebookEntry* NominalCodebook::find(std::string_view token) const {
  const auto it = index_.find(token);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const CodebookEntry& NominalCodebook::at(std::string_view token) const {
  if (const auto* e = find(token)) return *e;
  throw DataError("token '" + std::string(token) +
                  "' is not in the codebook for '" + attribute_ + "'");
}

NominalCodebook build_codebook(std::span<const std::string> values,
                               std::string attribute) {
  if (values.empty()) throw DataError("cannot build a codebook from no values");

  std::vector<CodebookEntry> entries;
  std::map<std::string_view, std::size_t> slot;
  for (const auto& v : values) {
    const auto [it, inserted] = slot.emplace(v, entries.size());
    if (inserted) entries.push_back({v, 0, {}});
    ++entries[it->second].frequency;
  }

  std::map<std::size_t, std::size_t> group_size;
  for (const auto& e : entries) ++group_size[e.frequency];

  std::map<std::size_t, std::size_t> next_index;
  for (auto& e : entries) {
    auto& r = e.rank;
    r.modulus = base_rank(static_cast<long long>(e.frequency));
    r.group_size = group_size[e.frequency];
    r.group_index = next_index[e.frequency]++;
    r.phase = 2.0 * std::numbers::pi * static_cast<double>(r.group_index) /
              static_cast<double>(r.group_size);
  }
  return NominalCodebook(std::move(attribute), std::move(entries));
}

std::vector<Complex> encode_column(std::span<const std::string> values,
                                   const NominalCodebook& codebook) {
  std::vector<Complex> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(codebook.at(v).rank.value());
  return out;
}

AdHocCodebook::AdHocCodebook(std::span<const std::string> values) {
  if (values.empty()) {
    throw DataError("cannot build an ad hoc codebook from no values");
  }
  for (const auto& v : values) {
    if (codes_.emplace(v, static_cast<double>(tokens_.size() + 1)).second) {
      tokens_.push_back(v);
    }
  }
}

double AdHocCodebook::code(std::string_view token) const {
  const auto it = codes_.find(token);
  if (it == codes_.end()) {
    throw DataError("token '" + std::string(token) +
                    "' is not in the ad hoc codebook");
  }
  return it->second;
}

std::vector<double> AdHocCodebook::encode(
    std::span<const std::string> values) const {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(code(v));
  return out;
}

AdHocCodebook adhoc_codebook(std::span<const std::string> values) {
  return AdHocCodebook(values);
}

OneHotEncoding onehot_encode(std::span<const std::string> values) {
  if (values.empty()) throw DataError("cannot one-hot encode no values");
  OneHotEncoding out;
  std::map<std::string_view, std::size_t> index;
  std::vector<std::size_t> ids;
  ids.reserve(values.size());
  for (const auto& v : values) {
    const auto [it, inserted] = index.emplace(v, out.categories.size());
    if (inserted) out.categories.push_back(v);
    ids.push_back(it->second);
  }
  const auto m = out.categories.size();
  out.vectors.reserve(values.size());
  for (const auto id : ids) {
    std::vector<double> e(m, 0.0);
    e[id] = 1.0;
    out.vectors.push_back(std::move(e));
  }
  return out;
}

std::string_view to_string(EncodeMode mode) {
  switch (mode) {
    case EncodeMode::Complex:
      return "complex";
    case EncodeMode::AdHoc:
      return "adhoc";
    case EncodeMode::OneHot:
      return "onehot";
    case EncodeMode::NumericOnly:
      return "numeric";
    case EncodeMode::NominalOnly:
      return "nominal";
    case EncodeMode::Combined:
      return "combined";
  }
  return "unknown";
}

EncodeMode parse_encode_mode(std::string_view text) {
  for (auto mode : {EncodeMode::Complex, EncodeMode::AdHoc, EncodeMode::OneHot,
                    EncodeMode::NumericOnly, EncodeMode::NominalOnly,
                    EncodeMode::Combined}) {
    if (text == to_string(mode)) return mode;
  }
  throw DataError("unknown encoding mode '" + std::string(text) +
                  "' (expected complex, adhoc, onehot, numeric, nominal or "
                  "combined)");
}

std::string_view display_name(EncodeMode mode) {
  switch (mode) {
    case EncodeMode::AdHoc:
      return "Ad hoc";
    case EncodeMode::NumericOnly:
      return "Only Numerical Data";
    case EncodeMode::NominalOnly:
      return "Only Coded Symbolic Data";
    case EncodeMode::Combined:
    case EncodeMode::Complex:
      return "Numerical and Coded Symbolic Data";
    case EncodeMode::OneHot:
      return "Numerical and One-hot Data";
  }
  return "unknown";
}

CodedMatrix encode_dataset(const Dataset& dataset, EncodeMode mode) {
  const auto& schema = dataset.schema();
  const auto n = dataset.row_count();

  const bool take_numeric = mode != EncodeMode::NominalOnly;
  const bool take_nominal = mode != EncodeMode::NumericOnly;

  // Column-major staging, flattened to row-major at the end.
  std::vector<CodedColumn> columns;
  std::vector<std::vector<Complex>> staged;

  for (std::size_t c = 0; c < schema.size(); ++c) {
    const auto& spec = schema[c];
    if (spec.role == Role::NumericFeature && take_numeric) {
      std::vector<Complex> col;
      col.reserve(n);
      for (double v : dataset.numeric_column(spec.name)) col.emplace_back(v);
      columns.push_back({spec.name, ColumnSource::Numeric});
      staged.push_back(std::move(col));
    } else if (spec.role == Role::NominalFeature && take_nominal) {
      const auto tokens = dataset.token_column(spec.name);
      switch (mode) {
        case EncodeMode::AdHoc: {
          std::vector<Complex> col;
          col.reserve(n);
          for (double v : adhoc_codebook(tokens).encode(tokens)) {
            col.emplace_back(v);
          }
          columns.push_back({spec.name, ColumnSource::AdHocCoded});
          staged.push_back(std::move(col));
          break;
        }
        case EncodeMode::OneHot: {
          const auto encoding = onehot_encode(tokens);
          for (std::size_t m = 0; m < encoding.categories.size(); ++m) {
            std::vector<Complex> col;
            col.reserve(n);
            for (const auto& e : encoding.vectors) col.emplace_back(e[m]);
            columns.push_back({spec.name + "=" + encoding.categories[m],
                               ColumnSource::OneHot});
            staged.push_back(std::move(col));
          }
          break;
        }
        default: {
          columns.push_back({spec.name, ColumnSource::ComplexCoded});
          staged.push_back(encode_column(tokens, build_codebook(tokens, spec.name)));
          break;
        }
      }
    }
  }

  if (columns.empty()) {
    throw DataError("no columns of the dataset match encoding mode '" +
                    std::string(to_string(mode)) + "'");
  }

  std::vector<Complex> data;
  data.reserve(n * columns.size());
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& col : staged) data.push_back(col[r]);
  }

  std::optional<std::vector<std::string>> labels;
  if (const auto d = schema.decision_index()) {
    labels = dataset.token_column(schema[*d].name);
  }
  return CodedMatrix(std::move(columns), n, std::move(data), std::move(labels));
}

std::vector<NominalCodebook> build_codebooks(const Dataset& dataset) {
  std::vector<NominalCodebook> out;
  for (auto c : dataset.schema().indices_with_role(Role::NominalFeature)) {
    const auto& name = dataset.schema()[c].name;
    out.push_back(build_codebook(dataset.token_column(name), name));
  }
  return out;
}

}  // namespace nomcode
