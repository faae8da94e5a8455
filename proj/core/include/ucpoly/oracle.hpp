#ifndef UCPOLY_ORACLE_HPP
#define UCPOLY_ORACLE_HPP

#include "ucpoly/formulation.hpp"
#include "ucpoly/model.hpp"
#include "ucpoly/polycore.hpp"

#include <compare>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace ucpoly {

/// Ground truth by enumeration: every on/off pattern, the vertices of each
/// pattern's generation fiber, and the extreme points of their union.

struct OracleOptions {
  int max_T = 7;  // 2^(2T-1) patterns are swept
};

/// Thrown when T exceeds OracleOptions::max_T.
class OracleCapError : public InputError {
 public:
  using InputError::InputError;
};

struct BinaryPattern {
  std::vector<int> y;  // y_1..y_T
  std::vector<int> u;  // u_2..u_T

  auto operator<=>(const BinaryPattern&) const = default;
  bool operator==(const BinaryPattern&) const = default;
};

/// Online intervals [first, last] of a pattern, in time order.
struct OnlineIntervalProfile {
  std::vector<std::pair<int, int>> intervals;
  int R() const noexcept { return static_cast<int>(intervals.size()); }
};

OnlineIntervalProfile profile_of(const BinaryPattern& pattern);

/// Exactly the binary (y,u) satisfying the minimum up/down and start-up
/// logic rows, in lexicographic (y, u) order.
std::vector<BinaryPattern> enumerate_patterns(const UCInstance& inst,
                                              const OracleOptions& options = {});

/// Vertices of { x : (x, y, u) in the variant } for a fixed pattern.
std::vector<Point> fiber_vertices(const UCInstance& inst, const BinaryPattern& pattern,
                                  Variant variant);

struct CandidateSet {
  std::vector<Point> points;
  std::vector<BinaryPattern> patterns;
  /// Per point: (index into patterns, index among that fiber's vertices).
  std::vector<std::pair<std::size_t, std::size_t>> provenance;
};

/// Union of the fiber vertices over all patterns. Every vertex of the
/// variant's convex hull is among them.
CandidateSet candidate_points(const UCInstance& inst, Variant variant,
                              const OracleOptions& options = {});

/// Drops candidates lying in the hull of the other candidates. Points with
/// binary (y,u) can only be combined from points with the same (y,u), so
/// each membership LP runs against the candidates of the same pattern.
std::vector<Point> extreme_points(const CandidateSet& candidates);

/// candidate_points followed by extreme_points.
std::vector<Point> extreme_points(const UCInstance& inst, Variant variant,
                                  const OracleOptions& options = {});

/// Points built from online-interval profiles for V = Cmax - Cmin: start-up
/// and shut-down periods take Cmin or Vbar, other online periods take Cmin
/// or Cmax, offline periods 0. Period 1 is not a start-up and period T is
/// not a shut-down. Throws InputError unless V = Cmax - Cmin.
std::vector<Point> k1_characterized_points(const UCInstance& inst,
                                           const OracleOptions& options = {});

/// Points generated by the scenario trees of the ramp-up polytope when
/// Cmax = Cmin + 2V. Each online x_t takes Cmin, Cmin+V, Cmax, Vbar or
/// Vbar+V, and any value other than Cmin, Cmax or a start-up at Vbar must
/// make a ramp-up row with a neighbouring period tight.
std::vector<Point> scenario_tree_points_k2up(const UCInstance& inst,
                                             const OracleOptions& options = {});

struct GridReport {
  bool ok = true;
  std::size_t checked = 0;                               // coordinates examined
  std::vector<std::pair<std::size_t, int>> violations;  // (point index, t)
};

/// Every x_t of every point must lie in the grid of derive_constants().
GridReport grid_check(std::span<const Point> points, const UCInstance& inst);

struct OracleOptimum {
  bool feasible = false;
  Rational objective;
  Point argmax;
};

/// Maximizes a linear objective by scanning points (ties keep the first).
OracleOptimum oracle_optimize(std::span<const Point> extreme, const std::map<int, Rational>& objective);
OracleOptimum oracle_optimize(const UCInstance& inst, Variant variant,
                              const std::map<int, Rational>& objective,
                              const OracleOptions& options = {});

}  // namespace ucpoly

#endif  // UCPOLY_ORACLE_HPP
