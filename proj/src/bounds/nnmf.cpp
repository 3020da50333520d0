#include "exmatch/bounds/nnmf.hpp"

#include <algorithm>
#include <cmath>

#include "exmatch/core/rng.hpp"
#include "exmatch/polytope/simplex.hpp"

namespace exmatch {

bool verify_factorization(const RationalMatrix& s, const Factorization& f) {
  const std::size_t r = f.w.cols();
  if (f.w.rows() != s.rows() || f.h.cols() != s.cols() || f.h.rows() != r) return false;
  for (std::size_t i = 0; i < f.w.rows(); ++i)
    for (std::size_t k = 0; k < r; ++k)
      if (f.w.at(i, k) < 0) return false;
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < f.h.cols(); ++j)
      if (f.h.at(k, j) < 0) return false;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) {
      Rational sum = 0;
      for (std::size_t k = 0; k < r; ++k) sum += f.w.at(i, k) * f.h.at(k, j);
      if (sum != s.at(i, j)) return false;
    }
  }
  return true;
}

namespace {

Eigen::MatrixXd to_eigen(const RationalMatrix& s) {
  Eigen::MatrixXd m(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) m(i, j) = to_double(s.at(i, j));
  return m;
}

RationalMatrix transpose(const RationalMatrix& m) {
  RationalMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

// Given exact W ≥ 0, find H ≥ 0 with W·H = S, one column at a time.
std::optional<RationalMatrix> solve_right_factor(const RationalMatrix& s, const RationalMatrix& w) {
  const std::size_t r = w.cols();
  RationalMatrix h(r, s.cols());
  for (std::size_t j = 0; j < s.cols(); ++j) {
    LinearSystem sys;
    sys.num_vars = r;
    for (std::size_t i = 0; i < s.rows(); ++i) {
      std::vector<std::pair<std::size_t, Rational>> c;
      for (std::size_t k = 0; k < r; ++k)
        if (w.at(i, k) != 0) c.emplace_back(k, w.at(i, k));
      sys.add_row(std::move(c), s.at(i, j), true);
    }
    const LpSolution sol = phase_one(sys);
    if (sol.status == LpStatus::infeasible) return std::nullopt;
    for (std::size_t k = 0; k < r; ++k) h.at(k, j) = sol.x[k];
  }
  return h;
}

std::optional<RationalMatrix> rounded(const Eigen::MatrixXd& w, long q) {
  RationalMatrix out(static_cast<std::size_t>(w.rows()), static_cast<std::size_t>(w.cols()));
  for (Eigen::Index k = 0; k < w.cols(); ++k) {
    const double mx = w.col(k).maxCoeff();
    if (!(mx > 0)) return std::nullopt;
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      const long v = std::lround(w(i, k) / mx * static_cast<double>(q));
      out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = Rational(v, q);
    }
  }
  return out;
}

// Replaces each column of W by the column of S closest to it in angle.
std::optional<RationalMatrix> snapped(const RationalMatrix& s, const Eigen::MatrixXd& w) {
  const Eigen::MatrixXd a = to_eigen(s);
  RationalMatrix out(s.rows(), static_cast<std::size_t>(w.cols()));
  for (Eigen::Index k = 0; k < w.cols(); ++k) {
    const double wn = w.col(k).norm();
    if (!(wn > 0)) return std::nullopt;
    Eigen::Index best = -1;
    double best_cos = -1.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const double an = a.col(j).norm();
      if (an == 0) continue;
      const double c = a.col(j).dot(w.col(k)) / (an * wn);
      if (c > best_cos + 1e-12) {
        best_cos = c;
        best = j;
      }
    }
    if (best < 0) return std::nullopt;
    for (std::size_t i = 0; i < s.rows(); ++i) out.at(i, static_cast<std::size_t>(k)) = s.at(i, static_cast<std::size_t>(best));
  }
  return out;
}

}  // namespace

std::optional<Factorization> round_to_exact(const RationalMatrix& s, const Eigen::MatrixXd& w,
                                            const Eigen::MatrixXd& h) {
  const RationalMatrix st = transpose(s);
  if (auto ws = snapped(s, w)) {
    if (auto hx = solve_right_factor(s, *ws)) {
      Factorization f{*ws, *hx};
      if (verify_factorization(s, f)) return f;
    }
  }
  if (auto hs = snapped(st, h.transpose())) {
    if (auto wx = solve_right_factor(st, *hs)) {
      Factorization f{transpose(*wx), transpose(*hs)};
      if (verify_factorization(s, f)) return f;
    }
  }
  for (long q : {1L, 2L, 3L, 4L, 6L, 8L, 12L}) {
    if (auto wq = rounded(w, q)) {
      if (auto hx = solve_right_factor(s, *wq)) {
        Factorization f{*wq, *hx};
        if (verify_factorization(s, f)) return f;
      }
    }
    const Eigen::MatrixXd ht = h.transpose();
    if (auto hq = rounded(ht, q)) {
      if (auto wx = solve_right_factor(st, *hq)) {
        Factorization f{transpose(*wx), transpose(*hq)};
        if (verify_factorization(s, f)) return f;
      }
    }
  }
  return std::nullopt;
}

NnmfResult nnmf_upper_bound(const RationalMatrix& s, const NnmfOptions& opts) {
  const Eigen::MatrixXd a = to_eigen(s);
  const Eigen::Index l = a.rows(), m = a.cols(), r = static_cast<Eigen::Index>(opts.rank);
  const double eps = 1e-12;
  const double scale = std::sqrt(std::max(a.mean(), 1e-3) / static_cast<double>(std::max<Eigen::Index>(r, 1)));
  NnmfResult best;
  best.error = std::numeric_limits<double>::infinity();
  Rng root(opts.seed);
  for (std::size_t restart = 0; restart < opts.restarts; ++restart) {
    Rng rng = root.split();
    Eigen::MatrixXd w(l, r), h(r, m);
    for (Eigen::Index i = 0; i < w.size(); ++i) w.data()[i] = (0.1 + rng.unit()) * scale;
    for (Eigen::Index i = 0; i < h.size(); ++i) h.data()[i] = (0.1 + rng.unit()) * scale;
    double err = (a - w * h).cwiseAbs().maxCoeff();
    for (std::size_t it = 0; it < opts.max_iterations && err >= opts.tolerance; ++it) {
      h = h.cwiseProduct((w.transpose() * a).cwiseQuotient((w.transpose() * w * h).array().max(eps).matrix()));
      w = w.cwiseProduct((a * h.transpose()).cwiseQuotient((w * h * h.transpose()).array().max(eps).matrix()));
      if (it % 16 == 15) err = (a - w * h).cwiseAbs().maxCoeff();
    }
    err = (a - w * h).cwiseAbs().maxCoeff();
    if (err < best.error) {
      best.error = err;
      best.restart = restart;
      best.w = w;
      best.h = h;
    }
    if (err < opts.tolerance) break;
  }
  best.success = best.error < opts.tolerance;
  // The rounding is verified exactly, so near misses are worth a try too.
  if (best.error < std::max(opts.tolerance, 1e-2 * a.cwiseAbs().maxCoeff()))
    best.exact = round_to_exact(s, best.w, best.h);
  return best;
}

}  // namespace exmatch
