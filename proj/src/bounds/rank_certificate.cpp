#include "exmatch/bounds/rank_certificate.hpp"

#include <map>
#include <stdexcept>

#include "exmatch/bounds/cover_bound.hpp"

namespace exmatch {

std::size_t rational_rank(const RationalMatrix& s) {
  std::vector<std::vector<Rational>> a(s.rows(), std::vector<Rational>(s.cols()));
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) a[i][j] = s.at(i, j);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < s.cols() && rank < s.rows(); ++c) {
    std::size_t p = rank;
    while (p < s.rows() && a[p][c] == 0) ++p;
    if (p == s.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < s.rows(); ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < s.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

// Distinct nonzero rows of s and, per row, the index of its representative.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> distinct_rows(const RationalMatrix& s) {
  std::map<std::vector<Rational>, std::size_t> index;
  std::vector<std::size_t> reps, which(s.rows(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < s.rows(); ++i) {
    std::vector<Rational> row(s.cols());
    bool nonzero = false;
    for (std::size_t j = 0; j < s.cols(); ++j) {
      row[j] = s.at(i, j);
      nonzero = nonzero || row[j] != 0;
    }
    if (!nonzero) continue;
    auto [it, fresh] = index.emplace(std::move(row), reps.size());
    if (fresh) reps.push_back(i);
    which[i] = it->second;
  }
  return {reps, which};
}

RationalMatrix transpose(const RationalMatrix& m) {
  RationalMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

Factorization by_rows(const RationalMatrix& s) {
  const auto [reps, which] = distinct_rows(s);
  Factorization f{RationalMatrix(s.rows(), reps.size()), RationalMatrix(reps.size(), s.cols())};
  for (std::size_t k = 0; k < reps.size(); ++k)
    for (std::size_t j = 0; j < s.cols(); ++j) f.h.at(k, j) = s.at(reps[k], j);
  for (std::size_t i = 0; i < s.rows(); ++i)
    if (which[i] != static_cast<std::size_t>(-1)) f.w.at(i, which[i]) = 1;
  return f;
}

}  // namespace

Factorization distinct_line_factorization(const RationalMatrix& s) {
  Factorization rows = by_rows(s);
  Factorization cols_t = by_rows(transpose(s));
  if (cols_t.rank() < rows.rank()) return {transpose(cols_t.h), transpose(cols_t.w)};
  return rows;
}

RankInterval certify_nonnegative_rank(const RationalMatrix& s, const RankOptions& opts) {
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (s.at(i, j) < 0) throw std::invalid_argument("certify_nonnegative_rank: negative entry");
  RankInterval ri;
  ri.linear_rank = rational_rank(s);
  ri.lower = ri.linear_rank;
  ri.witness = distinct_line_factorization(s);
  ri.upper = ri.witness.rank();
  ri.upper_source = "distinct-lines";
  if (ri.linear_rank == 0) return ri;
  if (opts.use_cover && ri.lower < ri.upper) {
    ri.cover_value = rectangle_cover_bound(s).value;
    const BigInt num = boost::multiprecision::numerator(ri.cover_value);
    const BigInt den = boost::multiprecision::denominator(ri.cover_value);
    const std::size_t ceil_cover = ((num + den - 1) / den).convert_to<std::size_t>();
    ri.lower = std::max(ri.lower, ceil_cover);
  }
  if (opts.use_nnmf) {
    for (std::size_t r = ri.lower; r < ri.upper; ++r) {
      NnmfOptions no;
      no.rank = r;
      no.restarts = opts.nnmf_restarts;
      no.max_iterations = opts.nnmf_iterations;
      no.seed = opts.seed + r;
      const NnmfResult res = nnmf_upper_bound(s, no);
      if (res.exact) {
        ri.upper = r;
        ri.upper_source = "nnmf";
        ri.witness = *res.exact;
        break;
      }
    }
  }
  return ri;
}

}  // namespace exmatch
