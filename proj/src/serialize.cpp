#include "nomcode/serialize.hpp"

#include "nomcode/error.hpp"

namespace nomcode {

namespace {

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

std::string_view to_string(Denominator d) {
  return d == Denominator::Population ? "population" : "sample";
}

std::string_view to_string(ComplexScaling s) {
  return s == ComplexScaling::Joint ? "joint" : "per-channel";
}

std::string_view to_string(AccuracyMetric m) {
  return m == AccuracyMetric::Injective ? "injective" : "majority-vote";
}

template <typename F>
auto rethrow_json(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed JSON document: ") + e.what());
  }
}

}  // namespace

Json to_json(const NominalCodebook& codebook) {
  Json entries = Json::object();
  for (const auto& e : codebook.entries()) {
    const auto z = e.rank.value();
    entries[e.token] = {{"n", e.frequency},
                        {"modulus", e.rank.modulus},
                        {"phase", e.rank.phase},
                        {"j", e.rank.group_index},
                        {"k", e.rank.group_size},
                        {"re", z.real()},
                        {"im", z.imag()}};
  }
  return {{"attribute", codebook.attribute()}, {"entries", std::move(entries)}};
}

NominalCodebook codebook_from_json(const Json& json) {
  return rethrow_json([&] {
    std::vector<CodebookEntry> entries;
    for (const auto& [token, e] : json.at("entries").items()) {
      CodebookEntry entry;
      entry.token = token;
      entry.frequency = e.at("n").get<std::size_t>();
      entry.rank.modulus = e.at("modulus").get<double>();
      entry.rank.phase = e.at("phase").get<double>();
      entry.rank.group_index = e.at("j").get<std::size_t>();
      entry.rank.group_size = e.at("k").get<std::size_t>();
      entries.push_back(std::move(entry));
    }
    return NominalCodebook(json.at("attribute").get<std::string>(),
                           std::move(entries));
  });
}

Json to_json(const CodedMatrix& matrix) {
  Json columns = Json::array();
  for (const auto& c : matrix.columns()) {
    columns.push_back({{"name", c.name}, {"source", to_string(c.source)}});
  }
  Json data = Json::array();
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    Json row = Json::array();
    for (const auto& z : matrix.row(r)) row.push_back(complex_json(z));
    data.push_back(std::move(row));
  }
  Json out{{"rows", matrix.rows()},
           {"columns", std::move(columns)},
           {"data", std::move(data)}};
  if (matrix.decision()) out["decision"] = *matrix.decision();
  if (matrix.scaling()) {
    Json scaling = Json::array();
    for (const auto& s : *matrix.scaling()) {
      scaling.push_back({{"mean", complex_json(s.mean)},
                         {"scale_re", s.scale_re},
                         {"scale_im", s.scale_im}});
    }
    out["scaling"] = std::move(scaling);
  }
  return out;
}

CodedMatrix coded_matrix_from_json(const Json& json) {
  return rethrow_json([&] {
    std::vector<CodedColumn> columns;
    for (const auto& c : json.at("columns")) {
      columns.push_back({c.at("name").get<std::string>(),
                         parse_column_source(c.at("source").get<std::string>())});
    }
    const auto rows = json.at("rows").get<std::size_t>();
    const auto& data_json = json.at("data");
    if (data_json.size() != rows) {
      throw DataError("coded matrix JSON: row count mismatch");
    }
    std::vector<Complex> data;
    data.reserve(rows * columns.size());
    for (const auto& row : data_json) {
      if (row.size() != columns.size()) {
        throw DataError("coded matrix JSON: column count mismatch");
      }
      for (const auto& z : row) data.push_back(complex_from_json(z));
    }
    std::optional<std::vector<std::string>> decision;
    if (json.contains("decision")) {
      decision = json.at("decision").get<std::vector<std::string>>();
    }
    CodedMatrix matrix(std::move(columns), rows, std::move(data),
                       std::move(decision));
    if (json.contains("scaling")) {
      std::vector<ColumnScaling> scaling;
      for (const auto& s : json.at("scaling")) {
        scaling.push_back({complex_from_json(s.at("mean")),
                           s.at("scale_re").get<double>(),
                           s.at("scale_im").get<double>()});
      }
      matrix = matrix.with_scaling(std::move(scaling));
    }
    return matrix;
  });
}

Json to_json(const ClusteringResult& result) {
  Json centroids = Json::array();
  for (const auto& c : result.centroids) {
    Json row = Json::array();
    for (const auto& z : c) row.push_back(complex_json(z));
    centroids.push_back(std::move(row));
  }
  return {{"seed", result.seed},
          {"assignments", result.assignments},
          {"centroids", std::move(centroids)},
          {"inertia", result.inertia},
          {"iterations", result.iterations}};
}

Json to_json(const ExperimentReport& report) {
  const auto& cfg = report.config;
  Json conditions = Json::array();
  for (const auto& c : report.conditions) {
    Json runs = Json::array();
    for (const auto& r : c.runs) {
      runs.push_back({{"seed", r.seed},
                      {"accuracy", r.accuracy},
                      {"inertia", r.inertia},
                      {"iterations", r.iterations}});
    }
    Json buckets = Json::object();
    for (const int t : kBucketThresholds) {
      const auto key = std::to_string(t);
      buckets[key] = c.buckets.at(key);
    }
    buckets["below"] = c.buckets.at("below");
    conditions.push_back({{"name", to_string(c.mode)},
                          {"label", display_name(c.mode)},
                          {"mean_accuracy", c.mean_accuracy()},
                          {"max_accuracy", c.max_accuracy()},
                          {"runs", std::move(runs)},
                          {"buckets", std::move(buckets)}});
  }
  return {{"master_seed", cfg.master_seed},
          {"repeats", cfg.repeats},
          {"clusters", report.clusters},
          {"objects", report.objects},
          {"max_iterations", cfg.max_iterations},
          {"rng",
           {{"generator", "mt19937_64"},
            {"seed_mix", "splitmix64(splitmix64(splitmix64(master) ^ condition) ^ run)"},
            {"initialization", "forgy"}}},
          {"standardization",
           {{"denominator", to_string(cfg.standardize.denominator)},
            {"complex", to_string(cfg.standardize.complex_scaling)}}},
          {"accuracy_metric", to_string(cfg.metric)},
          {"conditions", std::move(conditions)}};
}

}  // namespace nomcode
