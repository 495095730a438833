#include "nomcode/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace nomcode {

namespace {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string grid(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      if (c > 0) out << "  ";
      out << cells[r][c];
      if (c + 1 < cells[r].size()) {
        out << std::string(width[c] - cells[r][c].size(), ' ');
      }
    }
    out << '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (auto w : width) total += w + 2;
      out << std::string(total - 2, '-') << '\n';
    }
  }
  return out.str();
}

}  // namespace

std::string format_complex(Complex z) {
  const auto re = format_real(z.real());
  const auto im = format_real(z.imag());
  if (im == "0") return re;
  if (im.front() == '-') return re + im + "i";
  return re + "+" + im + "i";
}

std::string render_matrix_table(const CodedMatrix& matrix) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"No."};
  for (const auto& c : matrix.columns()) header.push_back(c.name);
  if (matrix.decision()) header.push_back("Decision");
  cells.push_back(std::move(header));
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    std::vector<std::string> row{std::to_string(r + 1)};
    for (const auto& z : matrix.row(r)) row.push_back(format_complex(z));
    if (matrix.decision()) row.push_back((*matrix.decision())[r]);
    cells.push_back(std::move(row));
  }
  return grid(cells);
}

std::string render_codebook_table(const NominalCodebook& codebook) {
  std::vector<std::vector<std::string>> cells{
      {"Value", "n", "|R|", "j", "k", "Phase [rad]", "a+bi"}};
  for (const auto& e : codebook.entries()) {
    cells.push_back({e.token, std::to_string(e.frequency),
                     format_real(e.rank.modulus),
                     std::to_string(e.rank.group_index),
                     std::to_string(e.rank.group_size),
                     format_real(e.rank.phase), format_complex(e.rank.value())});
  }
  return codebook.attribute() + "\n" + grid(cells);
}

std::string render_bucket_table(const ExperimentReport& report) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"Considered Data Type"};
  for (const int t : kBucketThresholds) header.push_back(std::to_string(t) + "%");
  header.push_back("<50%");
  header.push_back("Mean");
  cells.push_back(std::move(header));
  for (const auto& c : report.conditions) {
    std::vector<std::string> row{std::string(display_name(c.mode))};
    auto count = [&](const std::string& key) {
      const auto n = c.buckets.at(key);
      return n == 0 ? std::string("--") : std::to_string(n);
    };
    for (const int t : kBucketThresholds) row.push_back(count(std::to_string(t)));
    row.push_back(count("below"));
    row.push_back(format_real(100.0 * c.mean_accuracy()) + "%");
    cells.push_back(std::move(row));
  }
  return grid(cells);
}

std::string render_clustering(
    const ClusteringResult& result,
    const std::optional<std::vector<std::string>>& labels) {
  std::ostringstream out;
  out << "seed: " << result.seed << '\n';
  out << "assignments:";
  for (const auto a : result.assignments) out << ' ' << a;
  out << '\n';
  for (std::size_t c = 0; c < result.centroids.size(); ++c) {
    out << "cluster " << c << ":";
    for (std::size_t r = 0; r < result.assignments.size(); ++r) {
      if (result.assignments[r] != c) continue;
      out << ' ' << (r + 1);
      if (labels) out << '(' << (*labels)[r] << ')';
    }
    out << '\n';
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", result.inertia);
  out << "inertia: " << buf << '\n';
  out << "iterations: " << result.iterations << '\n';
  if (labels) {
    out << "accuracy: "
        << format_real(100.0 * purity_accuracy(result.assignments, *labels))
        << "%\n";
  }
  return out.str();
}

}  // namespace nomcode
