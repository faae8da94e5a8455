#ifndef UCPOLY_POLYCORE_HPP
#define UCPOLY_POLYCORE_HPP

#include "ucpoly/formulation.hpp"
#include "ucpoly/model.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ucpoly {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Dense H-representation A z <= b.
struct HRep {
  int dim = 0;
  Matrix A;
  Vector b;
  std::vector<std::string> tags;  // parallel to rows, may be empty
};

/// Flattens a system to A z <= b: >= rows are negated, = rows split in two.
HRep to_hrep(const InequalitySystem& sys);

// ---------------------------------------------------------------- rank --

/// Rank by exact Gaussian elimination.
int matrix_rank(Matrix rows);

/// Dimension of the affine hull of the points; 0 for a single point.
/// Throws std::invalid_argument for an empty list.
int affine_rank(std::span<const Point> points);

/// Solves A x = b for square nonsingular A; nullopt when singular.
std::optional<Vector> solve_square(Matrix A, Vector b);

// ------------------------------------------------------------------ DD --

struct VertexSet {
  enum class Status { Ok, Empty, Unbounded };
  Status status = Status::Ok;
  std::vector<Point> points;  // sorted lexicographically
  std::vector<Vector> rays;   // recession directions; empty for polytopes
};

std::string_view to_string(VertexSet::Status status);

/// Double-description vertex enumeration of {z : A z <= b}. Exact; the
/// returned points are exactly the vertices. Unbounded systems report
/// their extreme rays, and a polyhedron with lineality reports Unbounded
/// with no rays.
VertexSet dd_enumerate(const HRep& rep);

/// Same, inserting rows by nonzero count and then tag. This is the order
/// used by every verification routine.
VertexSet dd_enumerate(const InequalitySystem& sys);

// ------------------------------------------------------------------ LP --

enum class LPStatus { Optimal, Infeasible, Unbounded };
std::string_view to_string(LPStatus status);

enum class Optimize { Max, Min };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational objective;
  Point solution;  // optimal point, or any feasible point when unbounded
  /// Optimal: dual multipliers per HRep row (y >= 0, A^T y = c).
  /// Infeasible: Farkas multipliers (y >= 0, A^T y = 0, b.y < 0).
  /// Unbounded: a ray d with A d <= 0 and c.d > 0.
  Vector certificate;
};

/// Exact two-phase simplex with least-index pivoting, run on the dual of
/// max { c.z : A z <= b } (variables free). Min problems are negated.
LPResult lp_solve(const HRep& rep, const Vector& objective, Optimize sense);
LPResult lp_solve(const InequalitySystem& sys, const std::map<int, Rational>& objective,
                  Optimize sense);

/// Rows that the remaining rows imply (checked by one LP each). Only used
/// for reporting; nothing is removed.
std::vector<std::string> redundant_rows(const InequalitySystem& sys);

// ---------------------------------------------------------- membership --

struct HullMembership {
  bool inside = false;
  /// When outside: a.p > beta >= a.g for every generator g.
  Vector separator;
  Rational beta;
};

/// Exact test of p in conv(generators). Throws std::invalid_argument on an
/// empty generator list or mismatched dimensions.
HullMembership in_convex_hull(const Point& p, std::span<const Point> generators);

}  // namespace ucpoly

#endif  // UCPOLY_POLYCORE_HPP
