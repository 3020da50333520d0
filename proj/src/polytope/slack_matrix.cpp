#include "exmatch/polytope/slack_matrix.hpp"

#include <sstream>
#include <thread>

#include "json.hpp"

#include "exmatch/core/errors.hpp"
#include "exmatch/core/violation.hpp"

namespace exmatch {

std::string SlackMatrix::col_name(std::size_t j) const {
  if (j < cols.size()) return "L" + std::to_string(j);
  const std::size_t d = j - cols.size();
  return d < n ? "deg_u" + std::to_string(d + 1) : "deg_v" + std::to_string(d - n + 1);
}

SlackMatrix build_slack_matrix(const ColoredBipartiteGraph& g, Parity target,
                               const EnumerationLimits& limits, bool include_degree) {
  if (!g.is_square()) throw std::invalid_argument("build_slack_matrix: graph sides differ");
  SlackMatrix s;
  s.n = g.n_left();
  s.target = target;
  s.include_degree = include_degree;
  s.rows = enumerate_parity_matchings(g, target, limits);
  s.cols = enumerate_labelings(s.n, target, limits);
  const std::size_t extra = include_degree ? 2 * s.n : 0;
  s.entries = RationalMatrix(s.rows.size(), s.cols.size() + extra);

  auto fill = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < s.rows.size(); i += step) {
      for (std::size_t j = 0; j < s.cols.size(); ++j) {
        const std::size_t c = count_violations(s.rows[i].edges(), s.cols[j]);
        s.entries.at(i, j) = Rational(static_cast<long>(c) - 1);
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(limits.threads, s.rows.size()));
  if (workers == 1) {
    fill(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(fill, w, workers);
    for (auto& t : pool) t.join();
  }
  return s;
}

namespace {

std::string format_entry(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return numerator_string(q);
  return numerator_string(q) + "/" + denominator_string(q);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  try {
    parse_rational(s);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

void write_matrix_csv(std::ostream& out, const RationalMatrix& m, const std::vector<std::string>& row_names,
                      const std::vector<std::string>& col_names, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "row";
  for (const auto& c : col_names) out << ',' << c;
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << row_names[i];
    for (std::size_t j = 0; j < m.cols(); ++j) out << ',' << format_entry(m.at(i, j));
    out << '\n';
  }
}

void write_slack_csv(std::ostream& out, const SlackMatrix& s) {
  std::vector<std::string> rn, cn;
  for (std::size_t i = 0; i < s.num_rows(); ++i) rn.push_back(s.row_name(i));
  for (std::size_t j = 0; j < s.num_cols(); ++j) cn.push_back(s.col_name(j));
  std::ostringstream comment;
  comment << "slack n=" << s.n << " parity=" << parity_name(s.target) << " rows=" << s.num_rows()
          << " cols=" << s.num_cols();
  write_matrix_csv(out, s.entries, rn, cn, comment.str());
}

std::string slack_sidecar_json(const SlackMatrix& s) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema_version"] = 1;
  j["n"] = s.n;
  j["parity"] = parity_name(s.target);
  j["include_degree"] = s.include_degree;
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    ordered_json edges = ordered_json::array();
    for (const Edge& e : s.rows[i].edges())
      edges.push_back({e.u + 1, e.v + 1, std::string(1, color_code(e.color))});
    rows.push_back({{"index", i}, {"name", s.row_name(i)}, {"matching", edges}});
  }
  ordered_json cols = ordered_json::array();
  for (std::size_t c = 0; c < s.num_cols(); ++c) {
    if (c < s.cols.size()) {
      cols.push_back({{"index", c}, {"name", s.col_name(c)}, {"kind", "labeling"},
                      {"bits", s.cols[c].to_bitstring()}});
    } else {
      cols.push_back({{"index", c}, {"name", s.col_name(c)}, {"kind", "degree"}});
    }
  }
  j["rows"] = rows;
  j["cols"] = cols;
  return j.dump(2);
}

RationalMatrix read_matrix_csv(std::istream& in) {
  std::vector<std::vector<Rational>> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_done = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto cells = split_csv(line);
    if (!header_done) {
      header_done = true;
      // A header names its columns; data rows only carry a name in front.
      if (cells.size() > 1 && !is_number(cells[1])) continue;
    }
    if (!cells.empty() && !is_number(cells[0])) cells.erase(cells.begin());
    std::vector<Rational> r;
    for (const auto& c : cells) {
      try {
        r.push_back(parse_rational(c));
      } catch (const std::exception&) {
        throw FormatError("matrix line " + std::to_string(line_no) + ": bad entry '" + c + "'");
      }
    }
    if (!rows.empty() && r.size() != rows.front().size()) {
      throw FormatError("matrix line " + std::to_string(line_no) + ": ragged row");
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw FormatError("matrix: no rows");
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace exmatch
