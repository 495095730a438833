#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nomcode/clustering.hpp"
#include "nomcode/coded_matrix.hpp"
#include "nomcode/nominal_coder.hpp"

namespace nomcode {

/// "a+bi" rounded to two decimals with trailing zeros dropped; values with
/// a vanishing imaginary part print as plain reals ("2", "-2", "2.5").
std::string format_complex(Complex z);

/// Plain-text grid of the coded matrix, with the decision labels last.
std::string render_matrix_table(const CodedMatrix& matrix);

std::string render_codebook_table(const NominalCodebook& codebook);

/// Bucket counts per condition, one row per condition, "--" for zero.
std::string render_bucket_table(const ExperimentReport& report);

/// Assignments, members per cluster, inertia and, when labels are given,
/// the purity accuracy.
std::string render_clustering(
    const ClusteringResult& result,
    const std::optional<std::vector<std::string>>& labels);

}  // namespace nomcode
