#include "exmatch/bounds/cover_bound.hpp"

#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "exmatch/core/errors.hpp"
#include "exmatch/polytope/simplex.hpp"

namespace exmatch {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Context {
  std::vector<Bits> row_support;  // per row: columns with nonzero entries
  std::vector<Bits> col_support;  // per column: rows with nonzero entries
  std::size_t rows = 0, cols = 0;

  Bits extent(const Bits& intent) const {
    Bits a(rows);
    a.set();
    for (std::size_t j = intent.find_first(); j != Bits::npos; j = intent.find_next(j)) a &= col_support[j];
    return a;
  }

  Bits intent(const Bits& extent) const {
    Bits b(cols);
    b.set();
    for (std::size_t i = extent.find_first(); i != Bits::npos; i = extent.find_next(i)) b &= row_support[i];
    return b;
  }

  Bits closure(const Bits& b) const { return intent(extent(b)); }
};

std::vector<std::size_t> to_list(const Bits& b) {
  std::vector<std::size_t> out;
  for (std::size_t i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

}  // namespace

std::vector<Rectangle> maximal_support_rectangles(const RationalMatrix& s) {
  Context ctx;
  ctx.rows = s.rows();
  ctx.cols = s.cols();
  ctx.row_support.assign(ctx.rows, Bits(ctx.cols));
  ctx.col_support.assign(ctx.cols, Bits(ctx.rows));
  for (std::size_t i = 0; i < ctx.rows; ++i)
    for (std::size_t j = 0; j < ctx.cols; ++j)
      if (s.at(i, j) != 0) {
        ctx.row_support[i].set(j);
        ctx.col_support[j].set(i);
      }

  std::vector<Rectangle> out;
  auto emit = [&](const Bits& b) {
    const Bits a = ctx.extent(b);
    if (a.any() && b.any()) out.push_back({to_list(a), to_list(b)});
  };
  // NextClosure over column sets in lectic order.
  Bits b = ctx.closure(Bits(ctx.cols));
  for (;;) {
    emit(b);
    bool advanced = false;
    for (std::size_t k = ctx.cols; k-- > 0;) {
      if (b.test(k)) continue;
      Bits prefix = b;
      for (std::size_t j = k; j < ctx.cols; ++j) prefix.reset(j);
      Bits cand = prefix;
      cand.set(k);
      cand = ctx.closure(cand);
      Bits cand_prefix = cand;
      for (std::size_t j = k; j < ctx.cols; ++j) cand_prefix.reset(j);
      if (cand_prefix == prefix) {
        b = cand;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

CoverBound rectangle_cover_bound(const RationalMatrix& s) {
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (s.at(i, j) != 0) entries.emplace_back(i, j);
  if (entries.empty()) throw std::invalid_argument("rectangle_cover_bound: empty support");

  CoverBound cb;
  const std::vector<Rectangle> rects = maximal_support_rectangles(s);
  cb.candidates = rects.size();

  // covers[e] = rectangles containing entry e.
  std::vector<std::vector<char>> in_row(rects.size(), std::vector<char>(s.rows(), 0));
  std::vector<std::vector<char>> in_col(rects.size(), std::vector<char>(s.cols(), 0));
  for (std::size_t r = 0; r < rects.size(); ++r) {
    for (std::size_t i : rects[r].rows) in_row[r][i] = 1;
    for (std::size_t j : rects[r].cols) in_col[r][j] = 1;
  }
  auto covers = [&](std::size_t e) {
    std::vector<std::pair<std::size_t, Rational>> c;
    for (std::size_t r = 0; r < rects.size(); ++r)
      if (in_row[r][entries[e].first] && in_col[r][entries[e].second]) c.emplace_back(r, Rational(1));
    return c;
  };

  // Seed with the first entry of every row and column.
  std::vector<char> active(entries.size(), 0);
  {
    std::vector<char> row_seen(s.rows(), 0), col_seen(s.cols(), 0);
    for (std::size_t e = 0; e < entries.size(); ++e) {
      auto [i, j] = entries[e];
      if (!row_seen[i] || !col_seen[j]) active[e] = 1;
      row_seen[i] = col_seen[j] = 1;
    }
  }
  const std::vector<Rational> cost(rects.size(), Rational(1));
  for (;;) {
    ++cb.rounds;
    LinearSystem sys;
    sys.num_vars = rects.size();
    for (std::size_t e = 0; e < entries.size(); ++e)
      if (active[e]) sys.add_row(covers(e), Rational(1), false);
    const LpSolution sol = solve_lp(sys, cost);
    if (sol.status != LpStatus::optimal) throw InvariantViolation("rectangle_cover_bound: cover LP not optimal");
    bool added = false;
    for (std::size_t e = 0; e < entries.size(); ++e) {
      if (active[e]) continue;
      Rational cov = 0;
      for (const auto& [r, one] : covers(e)) cov += sol.x[r];
      if (cov < 1) {
        active[e] = 1;
        added = true;
      }
    }
    if (!added) {
      cb.value = sol.objective;
      for (std::size_t r = 0; r < rects.size(); ++r) {
        if (sol.x[r] > 0) {
          cb.rectangles.push_back(rects[r]);
          cb.weights.push_back(sol.x[r]);
        }
      }
      return cb;
    }
  }
}

}  // namespace exmatch
