// Exact linear programming.
//
// max { c.z : A z <= b } with free z is solved through its dual
//   min { b.w : A^T w = c, w >= 0 },
// a standard-form problem with only dim(z) equality rows. The simplex
// multipliers of an optimal dual basis are an optimal primal point.

#include "ucpoly/polycore.hpp"

#include <algorithm>
#include <stdexcept>

namespace ucpoly {

std::string_view to_string(LPStatus status) {
  switch (status) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::Unbounded: return "unbounded";
  }
  return "?";
}

namespace {

struct StandardResult {
  LPStatus status = LPStatus::Infeasible;
  Vector w;    // primal of the standard form
  Vector pi;   // simplex multipliers (E^T pi <= cost at optimum)
  Vector ray;  // descent direction when unbounded
  Rational objective;
};

// min cost.w  s.t.  E w = f, w >= 0. E is rows x cols, dense.
class StandardSimplex {
 public:
  StandardSimplex(const Matrix& E, const Vector& f, const Vector& cost)
      : rows_(E.size()), cols_(cost.size()), cost_(cost) {
    for (const auto& r : E) {
      if (r.size() != cols_) throw std::invalid_argument("simplex: ragged constraint matrix");
    }
    if (f.size() != rows_) throw std::invalid_argument("simplex: rhs size mismatch");
    // Columns: structural 0..cols-1, artificial cols..cols+rows-1.
    width_ = cols_ + rows_;
    tab_.assign(rows_, Vector(width_));
    rhs_.resize(rows_);
    sign_.resize(rows_);
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      sign_[i] = f[i] < 0 ? -1 : 1;
      for (std::size_t j = 0; j < cols_; ++j) tab_[i][j] = sign_[i] * E[i][j];
      tab_[i][cols_ + i] = 1;
      rhs_[i] = sign_[i] * f[i];
      basis_[i] = cols_ + i;
    }
  }

  StandardResult solve() {
    StandardResult res;
    // Phase 1: minimize the sum of artificials.
    Vector phase1(width_);
    for (std::size_t i = 0; i < rows_; ++i) phase1[cols_ + i] = 1;
    if (run(phase1, false) != LPStatus::Optimal) throw std::logic_error("simplex: phase 1 unbounded");
    Rational infeas = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] >= cols_) infeas += rhs_[i];
    }
    if (infeas > 0) {
      res.status = LPStatus::Infeasible;
      return res;
    }
    drive_out_artificials();

    Vector phase2(width_);
    for (std::size_t j = 0; j < cols_; ++j) phase2[j] = cost_[j];
    const auto st = run(phase2, true);
    res.status = st;
    if (st == LPStatus::Unbounded) {
      res.ray.assign(cols_, 0);
      res.ray[entering_] = 1;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (basis_[i] < cols_) res.ray[basis_[i]] = -tab_[i][entering_];
      }
      return res;
    }
    res.w.assign(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < cols_) res.w[basis_[i]] = rhs_[i];
    }
    // pi'_k = sum_l cost_{B_l} (B^-1)_{lk}; B^-1 sits in the artificial block.
    res.pi.assign(rows_, 0);
    for (std::size_t k = 0; k < rows_; ++k) {
      Rational s = 0;
      for (std::size_t l = 0; l < rows_; ++l) {
        const auto bl = basis_[l];
        if (bl < cols_ && cost_[bl] != 0 && tab_[l][cols_ + k] != 0) s += cost_[bl] * tab_[l][cols_ + k];
      }
      res.pi[k] = sign_[k] * s;
    }
    res.objective = 0;
    for (std::size_t j = 0; j < cols_; ++j) res.objective += cost_[j] * res.w[j];
    return res;
  }

 private:
  // Bland's rule on the current tableau; artificials never re-enter.
  LPStatus run(const Vector& cost, bool phase_two) {
    (void)phase_two;
    Vector reduced(width_);
    const auto recompute = [&] {
      for (std::size_t j = 0; j < cols_; ++j) {
        Rational d = cost[j];
        for (std::size_t i = 0; i < rows_; ++i) {
          const auto& cb = cost[basis_[i]];
          if (cb != 0 && tab_[i][j] != 0) d -= cb * tab_[i][j];
        }
        reduced[j] = std::move(d);
      }
    };
    recompute();
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return LPStatus::Optimal;

      std::size_t leave = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (tab_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / tab_[i][enter];
        if (leave == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == rows_) {
        entering_ = enter;
        return LPStatus::Unbounded;
      }
      pivot(leave, enter);
      // Update reduced costs with the pivot row.
      const Rational f = reduced[enter];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (tab_[leave][j] != 0) reduced[j] -= f * tab_[leave][j];
      }
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / tab_[r][c];
    auto& prow = tab_[r];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < width_; ++j) {
      if (prow[j] != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    }
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || tab_[i][c] == 0) continue;
      const Rational f = tab_[i][c];
      auto& row = tab_[i];
      for (auto j : nz) row[j] -= f * prow[j];
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < cols_) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (tab_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
      // A row with no structural entry is redundant; its artificial stays
      // basic at zero.
    }
  }

  std::size_t rows_, cols_, width_ = 0;
  Vector cost_;
  Matrix tab_;
  Vector rhs_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  std::size_t entering_ = 0;
};

Matrix transpose(const Matrix& A, std::size_t cols) {
  Matrix out(cols, Vector(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = A[i][j];
  }
  return out;
}

Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0 && b[k] != 0) s += a[k] * b[k];
  }
  return s;
}

// max c.z over A z <= b.
LPResult maximize(const HRep& rep, const Vector& c) {
  const std::size_t n = static_cast<std::size_t>(rep.dim);
  const Matrix At = transpose(rep.A, n);
  LPResult out;
  out.solution = Point(n);

  StandardSimplex dual(At, c, rep.b);
  auto res = dual.solve();
  if (res.status == LPStatus::Optimal) {
    out.status = LPStatus::Optimal;
    out.solution = Point(res.pi);
    out.objective = res.objective;
    out.certificate = res.w;
    return out;
  }
  if (res.status == LPStatus::Unbounded) {
    // Dual unbounded: primal infeasible, and the ray is a Farkas certificate.
    out.status = LPStatus::Infeasible;
    out.certificate = res.ray;
    return out;
  }
  // Dual infeasible: decide primal feasibility with a zero objective.
  StandardSimplex feas(At, Vector(n, 0), rep.b);
  auto fres = feas.solve();
  if (fres.status == LPStatus::Unbounded) {
    out.status = LPStatus::Infeasible;
    out.certificate = fres.ray;
    return out;
  }
  out.status = LPStatus::Unbounded;
  out.solution = Point(fres.pi);
  // Recession direction: max c.d over A d <= 0, -1 <= d <= 1.
  HRep box;
  box.dim = rep.dim;
  box.A = rep.A;
  box.b.assign(rep.A.size(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    Vector e(n);
    e[k] = 1;
    box.A.push_back(e);
    box.b.push_back(1);
    e[k] = -1;
    box.A.push_back(std::move(e));
    box.b.push_back(1);
  }
  auto dir = maximize(box, c);
  out.certificate = dir.solution.values;
  out.objective = 0;
  return out;
}

}  // namespace

LPResult lp_solve(const HRep& rep, const Vector& objective, Optimize sense) {
  if (static_cast<int>(objective.size()) != rep.dim) {
    throw std::invalid_argument("objective has wrong dimension");
  }
  if (rep.A.size() != rep.b.size()) throw std::invalid_argument("HRep rows and rhs differ in length");
  if (sense == Optimize::Max) return maximize(rep, objective);
  Vector neg(objective.size());
  for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = -objective[k];
  auto res = maximize(rep, neg);
  if (res.status == LPStatus::Optimal) res.objective = -res.objective;
  return res;
}

LPResult lp_solve(const InequalitySystem& sys, const std::map<int, Rational>& objective,
                  Optimize sense) {
  const HRep rep = to_hrep(sys);
  Vector c(rep.dim);
  for (const auto& [var, v] : objective) {
    if (var < 0 || var >= rep.dim) throw std::invalid_argument("objective references unknown variable");
    c[var] = v;
  }
  return lp_solve(rep, c, sense);
}

std::vector<std::string> redundant_rows(const InequalitySystem& sys) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    const auto& row = sys.rows[r];
    if (row.sense == Sense::Eq) continue;
    InequalitySystem rest = sys;
    rest.rows.erase(rest.rows.begin() + static_cast<std::ptrdiff_t>(r));
    const Rational sign = row.sense == Sense::Le ? 1 : -1;
    std::map<int, Rational> obj;
    for (const auto& [var, c] : row.coeffs) obj[var] = sign * c;
    const auto res = lp_solve(rest, obj, Optimize::Max);
    if (res.status == LPStatus::Optimal && res.objective <= sign * row.rhs) out.push_back(row.tag);
    if (res.status == LPStatus::Infeasible) out.push_back(row.tag);
  }
  return out;
}

HullMembership in_convex_hull(const Point& p, std::span<const Point> generators) {
  if (generators.empty()) throw std::invalid_argument("in_convex_hull needs generators");
  const std::size_t n = p.size();
  for (const auto& g : generators) {
    if (g.size() != n) throw std::invalid_argument("generator dimension mismatch");
  }
  // Variables (a_1..a_n, beta): max a.p - beta  s.t.  a.g - beta <= 0,
  // -1 <= a_k <= 1. Optimum 0 iff p lies in the hull.
  HRep rep;
  rep.dim = static_cast<int>(n + 1);
  for (const auto& g : generators) {
    Vector row(n + 1);
    for (std::size_t k = 0; k < n; ++k) row[k] = g[k];
    row[n] = -1;
    rep.A.push_back(std::move(row));
    rep.b.push_back(0);
  }
  for (std::size_t k = 0; k < n; ++k) {
    Vector hi(n + 1), lo(n + 1);
    hi[k] = 1;
    lo[k] = -1;
    rep.A.push_back(std::move(hi));
    rep.b.push_back(1);
    rep.A.push_back(std::move(lo));
    rep.b.push_back(1);
  }
  Vector c(n + 1);
  for (std::size_t k = 0; k < n; ++k) c[k] = p[k];
  c[n] = -1;
  const auto res = lp_solve(rep, c, Optimize::Max);
  if (res.status != LPStatus::Optimal) throw std::logic_error("in_convex_hull: bounded LP not optimal");
  HullMembership out;
  out.inside = res.objective <= 0;
  if (!out.inside) {
    out.separator.assign(res.solution.values.begin(), res.solution.values.begin() + static_cast<std::ptrdiff_t>(n));
    out.beta = res.solution[n];
    // beta from the LP is the max over generators only at optimality; make
    // it exact.
    Rational best = dot(out.separator, generators.front().values);
    for (const auto& g : generators) best = std::max(best, dot(out.separator, g.values));
    out.beta = best;
  }
  return out;
}

}  // namespace ucpoly
