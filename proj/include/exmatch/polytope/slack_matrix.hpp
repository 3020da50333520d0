#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "exmatch/core/graph.hpp"
#include "exmatch/core/labeling.hpp"
#include "exmatch/core/matching.hpp"
#include "exmatch/oracle/enumeration.hpp"
#include "exmatch/polytope/matrix.hpp"

namespace exmatch {

/// Rows: target-parity perfect matchings. Columns: parity-valid labelings,
/// optionally followed by one column per vertex degree row (identically 0).
/// Entry (i, j) = |M_i ∩ E_{L_j}| − 1.
struct SlackMatrix {
  std::size_t n = 0;
  Parity target = Parity::odd;
  bool include_degree = false;
  std::vector<Matching> rows;
  std::vector<Labeling> cols;
  RationalMatrix entries;

  std::size_t num_rows() const { return entries.rows(); }
  std::size_t num_cols() const { return entries.cols(); }
  std::string row_name(std::size_t i) const { return "M" + std::to_string(i); }
  std::string col_name(std::size_t j) const;
};

SlackMatrix build_slack_matrix(const ColoredBipartiteGraph& g, Parity target = Parity::odd,
                               const EnumerationLimits& limits = {}, bool include_degree = false);

/// CSV: a comment line, a header row of column names, then one row per
/// matching prefixed by its name. Entries print as integers or p/q.
void write_matrix_csv(std::ostream& out, const RationalMatrix& m, const std::vector<std::string>& row_names,
                      const std::vector<std::string>& col_names, const std::string& comment = "");
void write_slack_csv(std::ostream& out, const SlackMatrix& s);

/// JSON sidecar mapping row/column indices to matchings and labelings.
std::string slack_sidecar_json(const SlackMatrix& s);

/// Reads the CSV written above (names optional). Throws FormatError.
RationalMatrix read_matrix_csv(std::istream& in);

}  // namespace exmatch
