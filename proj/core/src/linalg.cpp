#include "ucpoly/polycore.hpp"

#include <stdexcept>

namespace ucpoly {

HRep to_hrep(const InequalitySystem& sys) {
  HRep rep;
  rep.dim = sys.space.size();
  const auto push = [&](const LinearInequality& row, const Rational& sign, const std::string& tag) {
    Vector a(rep.dim);
    for (const auto& [var, c] : row.coeffs) {
      if (var < 0 || var >= rep.dim) throw std::invalid_argument("row '" + row.tag + "' out of space");
      a[var] = sign * c;
    }
    rep.A.push_back(std::move(a));
    rep.b.push_back(sign * row.rhs);
    rep.tags.push_back(tag);
  };
  for (const auto& row : sys.rows) {
    switch (row.sense) {
      case Sense::Le: push(row, 1, row.tag); break;
      case Sense::Ge: push(row, -1, row.tag); break;
      case Sense::Eq:
        push(row, 1, row.tag + "(<=)");
        push(row, -1, row.tag + "(>=)");
        break;
    }
  }
  return rep;
}

int matrix_rank(Matrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = 1 / rows[rank][c];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational f = rows[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) {
        if (rows[rank][k] != 0) rows[r][k] -= f * rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

int affine_rank(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("affine_rank of an empty point list");
  const auto& base = points.front();
  Matrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != base.size()) throw std::invalid_argument("points differ in dimension");
    Vector d(base.size());
    for (std::size_t k = 0; k < base.size(); ++k) d[k] = points[i][k] - base[k];
    diffs.push_back(std::move(d));
  }
  return matrix_rank(std::move(diffs));
}

std::optional<Vector> solve_square(Matrix A, Vector b) {
  const std::size_t n = A.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && A[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(A[c], A[pivot]);
    std::swap(b[c], b[pivot]);
    const Rational inv = 1 / A[c][c];
    for (std::size_t k = c; k < n; ++k) A[c][k] *= inv;
    b[c] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      const Rational f = A[r][c];
      for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
      b[r] -= f * b[c];
    }
  }
  return b;
}

}  // namespace ucpoly
