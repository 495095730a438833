// nomcode: complex-rank coding of nominal attributes and k-means experiments.
//
//   nomcode rank --input data.csv --column Power [--json]
//   nomcode encode --input cars.csv --schema cars.schema.json --mode combined --table
//   nomcode cluster --input cars.csv --mode combined --k 3 --seed 7
//   nomcode experiment --repeats 20 --seed 1 --output report.json
//
// Exit codes: 0 success, 1 usage error, 2 data or validation error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nomcode/clustering.hpp"
#include "nomcode/complex_space.hpp"
#include "nomcode/data_model.hpp"
#include "nomcode/error.hpp"
#include "nomcode/nominal_coder.hpp"
#include "nomcode/ranking.hpp"
#include "nomcode/render.hpp"
#include "nomcode/serialize.hpp"

#ifndef NOMCODE_DATA_DIR
#define NOMCODE_DATA_DIR "data"
#endif

namespace {

using namespace nomcode;

const std::vector<std::string> kModes{"complex", "adhoc",  "onehot",
                                      "numeric", "nominal", "combined"};

struct Common {
  std::string input = std::string(NOMCODE_DATA_DIR) + "/cars.csv";
  std::string schema;
  std::string output;
  std::optional<std::string> missing_as_category;
  bool json = false;
};

void add_input_options(CLI::App* cmd, Common& opts) {
  cmd->add_option("--input", opts.input, "CSV file with a header line")
      ->capture_default_str();
  cmd->add_option("--schema", opts.schema,
                  "schema JSON; defaults to <input stem>.schema.json");
  cmd->add_option("--missing-as-category", opts.missing_as_category,
                  "token substituted for empty nominal cells");
  cmd->add_option("--output", opts.output, "write the result here instead of stdout");
  cmd->add_flag("--json", opts.json, "machine-readable output");
}

std::string schema_path(const Common& opts) {
  if (!opts.schema.empty()) return opts.schema;
  std::filesystem::path p(opts.input);
  return (p.parent_path() / (p.stem().string() + ".schema.json")).string();
}

Dataset load_dataset(const Common& opts) {
  CsvOptions csv;
  csv.missing_as_category = opts.missing_as_category;
  return load_csv(opts.input, load_schema(schema_path(opts)), csv);
}

void emit(const Common& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) throw DataError("cannot write '" + opts.output + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// rank ------------------------------------------------------------------

std::vector<double> numeric_cells(const Common& opts, const std::string& name) {
  if (!opts.schema.empty()) {
    const auto dataset = load_dataset(opts);
    const auto c = dataset.schema().index_of(name);
    if (dataset.schema()[c].role != Role::NumericFeature) {
      throw DataError("column '" + name + "' is declared " +
                      std::string(to_string(dataset.schema()[c].role)) +
                      "; rank only applies to numeric columns (nominal "
                      "columns are coded with 'encode')");
    }
    return dataset.numeric_column(name);
  }
  std::ifstream in(opts.input, std::ios::binary);
  if (!in) throw DataError("cannot open '" + opts.input + "'");
  const auto table = read_csv_table(in);
  const auto it = std::find(table.header.begin(), table.header.end(), name);
  if (it == table.header.end()) throw DataError("unknown column '" + name + "'");
  const auto c = static_cast<std::size_t>(it - table.header.begin());
  std::vector<double> values;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& text = table.rows[r][c];
    const auto v = parse_decimal(text);
    if (!v) {
      throw ParseError(r + 2, c + 1,
                       "'" + text + "' is not numeric; rank only applies to "
                       "numeric columns (nominal columns are coded with "
                       "'encode')");
    }
    values.push_back(*v);
  }
  if (values.empty()) throw DataError("no data rows");
  return values;
}

int cmd_rank(const Common& opts, const std::string& column) {
  const auto values = numeric_cells(opts, column);
  const auto ranks = tied_ranks(values);
  if (opts.json) {
    Json out = Json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
      out.push_back({{"value", values[i]}, {"rank", ranks[i]}});
    }
    emit(opts, dump(out));
    return 0;
  }
  std::ostringstream text;
  for (std::size_t i = 0; i < values.size(); ++i) {
    text << values[i] << '\t' << ranks[i] << '\n';
  }
  emit(opts, text.str());
  return 0;
}

// encode ----------------------------------------------------------------

int cmd_encode(const Common& opts, const std::string& mode_name, bool table) {
  const auto dataset = load_dataset(opts);
  const auto mode = parse_encode_mode(mode_name);
  const auto matrix = encode_dataset(dataset, mode);
  const auto codebooks = build_codebooks(dataset);
  const bool complex_coded = mode != EncodeMode::AdHoc &&
                             mode != EncodeMode::OneHot &&
                             mode != EncodeMode::NumericOnly;
  if (table) {
    std::string text = render_matrix_table(matrix);
    if (complex_coded) {
      for (const auto& cb : codebooks) text += "\n" + render_codebook_table(cb);
    }
    emit(opts, text);
    return 0;
  }
  Json out{{"mode", mode_name}, {"matrix", to_json(matrix)}};
  out["codebooks"] = Json::array();
  if (complex_coded) {
    for (const auto& cb : codebooks) out["codebooks"].push_back(to_json(cb));
  }
  emit(opts, dump(out));
  return 0;
}

// cluster ---------------------------------------------------------------

struct ClusterOptions {
  std::string mode = "combined";
  std::size_t k = 3;
  std::uint64_t seed = 0;
  std::size_t max_iterations = kDefaultMaxIterations;
  bool raw = false;
};

int cmd_cluster(const Common& opts, const ClusterOptions& c) {
  const auto dataset = load_dataset(opts);
  auto matrix = encode_dataset(dataset, parse_encode_mode(c.mode));
  if (!c.raw) matrix = standardize(matrix);
  const auto result = kmeans(matrix, c.k, c.seed, c.max_iterations);
  if (opts.json) {
    auto out = to_json(result);
    if (matrix.decision()) {
      out["accuracy"] = purity_accuracy(result.assignments, *matrix.decision());
    }
    emit(opts, dump(out));
  } else {
    emit(opts, render_clustering(result, matrix.decision()));
  }
  return 0;
}

// experiment ------------------------------------------------------------

struct ExperimentOptions {
  std::size_t repeats = 20;
  std::uint64_t seed = 0;
  std::vector<std::string> conditions{"adhoc", "numeric", "nominal", "combined"};
  std::size_t max_iterations = kDefaultMaxIterations;
  std::string metric = "injective";
  std::string scaling = "joint";
  std::string denominator = "population";
};

int cmd_experiment(const Common& opts, const ExperimentOptions& e) {
  const auto dataset = load_dataset(opts);
  ExperimentConfig config;
  config.conditions.clear();
  for (const auto& name : e.conditions) {
    config.conditions.push_back(parse_encode_mode(name));
  }
  config.repeats = e.repeats;
  config.master_seed = e.seed;
  config.max_iterations = e.max_iterations;
  config.metric = e.metric == "majority" ? AccuracyMetric::MajorityVote
                                         : AccuracyMetric::Injective;
  config.standardize.complex_scaling = e.scaling == "per-channel"
                                           ? ComplexScaling::PerChannel
                                           : ComplexScaling::Joint;
  config.standardize.denominator = e.denominator == "sample"
                                       ? Denominator::Sample
                                       : Denominator::Population;
  const auto report = run_experiment(dataset, config);
  const auto json = dump(to_json(report));
  if (opts.json) {
    emit(opts, json);
    return 0;
  }
  std::cout << render_bucket_table(report);
  if (!opts.output.empty()) emit(opts, json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex-rank coding of nominal data and k-means experiments"};
  app.require_subcommand(1);

  Common rank_opts, encode_opts, cluster_opts, experiment_opts;

  auto* rank = app.add_subcommand("rank", "tied ranks of a numeric column");
  std::string rank_column;
  add_input_options(rank, rank_opts);
  rank->add_option("--column", rank_column, "numeric column to rank")->required();

  auto* encode = app.add_subcommand("encode", "code a dataset for one condition");
  std::string encode_mode = "combined";
  bool encode_table = false;
  add_input_options(encode, encode_opts);
  encode->add_option("--mode", encode_mode, "encoding mode")
      ->check(CLI::IsMember(kModes))
      ->capture_default_str();
  encode->add_flag("--table", encode_table, "render as a text table");

  auto* cluster = app.add_subcommand("cluster", "one k-means run");
  ClusterOptions cluster_cfg;
  add_input_options(cluster, cluster_opts);
  cluster->add_option("--mode", cluster_cfg.mode, "encoding mode")
      ->check(CLI::IsMember(kModes))
      ->capture_default_str();
  cluster->add_option("--k", cluster_cfg.k, "number of clusters")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cluster->add_option("--seed", cluster_cfg.seed, "initialization seed")
      ->capture_default_str();
  cluster->add_option("--max-iterations", cluster_cfg.max_iterations)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cluster->add_flag("--no-standardize", cluster_cfg.raw,
                    "cluster the raw codes");

  auto* experiment =
      app.add_subcommand("experiment", "repeated k-means over several encodings");
  ExperimentOptions experiment_cfg;
  add_input_options(experiment, experiment_opts);
  experiment->add_option("--repeats", experiment_cfg.repeats, "runs per condition")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  experiment->add_option("--seed", experiment_cfg.seed, "master seed")
      ->capture_default_str();
  experiment->add_option("--conditions", experiment_cfg.conditions,
                         "comma-separated encoding modes")
      ->delimiter(',')
      ->check(CLI::IsMember(kModes));
  experiment->add_option("--max-iterations", experiment_cfg.max_iterations)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  experiment->add_option("--metric", experiment_cfg.metric)
      ->check(CLI::IsMember({"injective", "majority"}))
      ->capture_default_str();
  experiment->add_option("--scaling", experiment_cfg.scaling,
                         "standardization of complex columns")
      ->check(CLI::IsMember({"joint", "per-channel"}))
      ->capture_default_str();
  experiment->add_option("--denominator", experiment_cfg.denominator)
      ->check(CLI::IsMember({"population", "sample"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*rank) return cmd_rank(rank_opts, rank_column);
    if (*encode) return cmd_encode(encode_opts, encode_mode, encode_table);
    if (*cluster) return cmd_cluster(cluster_opts, cluster_cfg);
    if (*experiment) return cmd_experiment(experiment_opts, experiment_cfg);
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
