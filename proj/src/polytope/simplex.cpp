#include "exmatch/polytope/simplex.hpp"

#include <stdexcept>

#include "exmatch/core/errors.hpp"

namespace exmatch {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

class Tableau {
 public:
  // Column layout: [structural | surplus per inequality row | artificial per row | rhs].
  explicit Tableau(const LinearSystem& sys) : m_(sys.rows.size()), n_struct_(sys.num_vars) {
    std::size_t n_ineq = 0;
    for (const auto& r : sys.rows) n_ineq += r.equality ? 0 : 1;
    surplus0_ = n_struct_;
    art0_ = surplus0_ + n_ineq;
    rhs_ = art0_ + m_;
    t_.assign(m_, std::vector<Rational>(rhs_ + 1));
    sign_.assign(m_, 1);
    basis_.assign(m_, kNone);
    std::size_t s = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& row = sys.rows[i];
      const int sg = row.rhs < 0 ? -1 : 1;
      sign_[i] = sg;
      for (const auto& [j, a] : row.coeffs) {
        if (j >= n_struct_) throw std::invalid_argument("LinearSystem: column out of range");
        t_[i][j] += sg > 0 ? a : Rational(-a);
      }
      if (!row.equality) t_[i][surplus0_ + s++] = -sg;
      t_[i][art0_ + i] = 1;
      t_[i][rhs_] = sg > 0 ? row.rhs : Rational(-row.rhs);
      basis_[i] = art0_ + i;
    }
    allowed_.assign(rhs_, true);
  }

  std::size_t pivots() const { return pivots_; }

  /// Reduced-cost row for a cost vector over the first rhs_ columns.
  void set_objective(const std::vector<Rational>& cost) {
    cost_ = cost;
    obj_.assign(rhs_ + 1, Rational(0));
    for (std::size_t j = 0; j < rhs_; ++j) obj_[j] = cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= rhs_; ++j) {
        if (t_[i][j] != 0) obj_[j] -= cb * t_[i][j];
      }
    }
  }

  /// Bland's rule until optimal. Returns false when unbounded.
  bool optimize() {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < rhs_; ++j) {
        if (allowed_[j] && obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][rhs_] / t_[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    const Rational p = t_[r][c];
    for (std::size_t j = 0; j <= rhs_; ++j) {
      if (t_[r][j] != 0) t_[r][j] /= p;
    }
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= rhs_; ++j)
      if (t_[r][j] != 0) nz.push_back(j);
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c] == 0) return;
      const Rational f = row[c];
      for (std::size_t j : nz) row[j] -= f * t_[r][j];
    };
    for (std::size_t i = 0; i < m_; ++i)
      if (i != r) eliminate(t_[i]);
    eliminate(obj_);
    basis_[r] = c;
  }

  /// Pivot zero-level artificials out of the basis, dropping redundant rows.
  void purge_artificials() {
    for (std::size_t i = 0; i < m_;) {
      if (basis_[i] < art0_) {
        ++i;
        continue;
      }
      std::size_t c = kNone;
      for (std::size_t j = 0; j < art0_; ++j) {
        if (t_[i][j] != 0) {
          c = j;
          break;
        }
      }
      if (c != kNone) {
        pivot(i, c);
        ++i;
      } else {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        --m_;
      }
    }
    for (std::size_t j = art0_; j < rhs_; ++j) allowed_[j] = false;
  }

  Rational value() const { return -obj_[rhs_]; }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_struct_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_struct_) x[basis_[i]] = t_[i][rhs_];
    return x;
  }

  /// y_i = sign_i · (1 − reduced cost of artificial i), phase-1 costs.
  std::vector<Rational> farkas() const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      Rational yi = 1 - obj_[art0_ + i];
      y[i] = sign_[i] > 0 ? yi : Rational(-yi);
    }
    return y;
  }

  std::size_t art0() const { return art0_; }
  std::size_t width() const { return rhs_; }

 private:
  std::size_t m_;
  std::size_t n_struct_;
  std::size_t surplus0_ = 0, art0_ = 0, rhs_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> obj_;
  std::vector<Rational> cost_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpSolution solve_lp(const LinearSystem& sys, const std::optional<std::vector<Rational>>& objective) {
  if (objective && objective->size() != sys.num_vars) {
    throw std::invalid_argument("solve_lp: objective length differs from variable count");
  }
  Tableau tab(sys);
  std::vector<Rational> cost(tab.width(), Rational(0));
  for (std::size_t j = tab.art0(); j < tab.width(); ++j) cost[j] = 1;
  tab.set_objective(cost);
  if (!tab.optimize()) throw InvariantViolation("solve_lp: phase 1 reported unbounded");

  LpSolution out;
  if (tab.value() > 0) {
    out.status = LpStatus::infeasible;
    out.farkas = tab.farkas();
    out.pivots = tab.pivots();
    return out;
  }
  if (objective) {
    tab.purge_artificials();
    std::vector<Rational> c2(tab.width(), Rational(0));
    for (std::size_t j = 0; j < sys.num_vars; ++j) c2[j] = (*objective)[j];
    tab.set_objective(c2);
    if (!tab.optimize()) {
      out.status = LpStatus::unbounded;
      out.x = tab.primal();
      out.pivots = tab.pivots();
      return out;
    }
    out.objective = tab.value();
  }
  out.status = LpStatus::optimal;
  out.x = tab.primal();
  out.pivots = tab.pivots();
  return out;
}

bool satisfies(const LinearSystem& sys, const std::vector<Rational>& x) {
  if (x.size() != sys.num_vars) return false;
  for (const Rational& xi : x)
    if (xi < 0) return false;
  for (const auto& row : sys.rows) {
    Rational lhs = 0;
    for (const auto& [j, a] : row.coeffs) lhs += a * x[j];
    if (row.equality ? lhs != row.rhs : lhs < row.rhs) return false;
  }
  return true;
}

bool is_farkas_certificate(const LinearSystem& sys, const std::vector<Rational>& y) {
  if (y.size() != sys.rows.size()) return false;
  std::vector<Rational> ya(sys.num_vars, Rational(0));
  Rational yb = 0;
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    const auto& row = sys.rows[i];
    if (!row.equality && y[i] < 0) return false;
    if (y[i] == 0) continue;
    for (const auto& [j, a] : row.coeffs) ya[j] += y[i] * a;
    yb += y[i] * row.rhs;
  }
  for (const Rational& v : ya)
    if (v > 0) return false;
  return yb > 0;
}

}  // namespace exmatch
