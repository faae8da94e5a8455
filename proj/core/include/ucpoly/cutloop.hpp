#ifndef UCPOLY_CUTLOOP_HPP
#define UCPOLY_CUTLOOP_HPP

#include "ucpoly/cuts.hpp"
#include "ucpoly/formulation.hpp"
#include "ucpoly/model.hpp"
#include "ucpoly/oracle.hpp"

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ucpoly {

struct CutLoopCaps {
  int cuts_per_iteration = 25;
  int max_iterations = 100;
  int stall_iterations = 3;  // unchanged objective with cuts still found
  Reading reading = Reading::Literal;
};

enum class LoopStatus { IntegralOptimal, Stalled, IterationCap };
std::string_view to_string(LoopStatus status);

struct CutLoopIteration {
  Rational objective;            // LP optimum before this iteration's cuts
  std::vector<CutParams> added;  // cuts appended after the solve
};

struct CutLoopReport {
  std::vector<CutLoopIteration> iterations;
  LoopStatus status = LoopStatus::Stalled;
  Rational final_objective;
  Rational oracle_objective;
  Rational gap;  // final LP optimum - oracle optimum
  Point final_solution;
  bool final_integral = false;
  /// Cuts that cut off an oracle extreme point (must stay empty).
  std::vector<CutParams> invalid_cuts;
};

/// Maximizes the objective over the relaxation of build_base(variant),
/// adding the most violated members of the given families until the LP
/// point has binary (y,u), no cut is violated, the objective stalls, or the
/// iteration cap is hit. Every added cut is checked against the oracle
/// extreme points. Throws std::runtime_error if the LP is infeasible or
/// unbounded.
CutLoopReport run_cut_loop(const UCInstance& inst, Variant variant,
                           const std::map<int, Rational>& objective,
                           const std::vector<Family>& families, std::span<const Point> extreme,
                           const CutLoopCaps& caps = {});
CutLoopReport run_cut_loop(const UCInstance& inst, Variant variant,
                           const std::map<int, Rational>& objective,
                           const std::vector<Family>& families, const CutLoopCaps& caps = {},
                           const OracleOptions& options = {});

struct GapRow {
  Rational base_gap;
  Rational final_gap;
  LoopStatus status = LoopStatus::Stalled;
  std::map<Family, int> cuts;  // cuts added per family
};

/// One cut loop per objective; families default to default_families().
std::vector<GapRow> gap_profile(const UCInstance& inst, Variant variant,
                                const std::vector<std::map<int, Rational>>& objectives,
                                const std::optional<std::vector<Family>>& families = std::nullopt,
                                const CutLoopCaps& caps = {}, const OracleOptions& options = {});

}  // namespace ucpoly

#endif  // UCPOLY_CUTLOOP_HPP
