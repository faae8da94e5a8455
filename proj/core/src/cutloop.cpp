#include "ucpoly/cutloop.hpp"

#include "ucpoly/polycore.hpp"
#include "ucpoly/separation.hpp"

#include <algorithm>
#include <stdexcept>

namespace ucpoly {

std::string_view to_string(LoopStatus status) {
  switch (status) {
    case LoopStatus::IntegralOptimal: return "integral-optimal";
    case LoopStatus::Stalled: return "stalled";
    case LoopStatus::IterationCap: return "iteration-cap";
  }
  return "?";
}

namespace {

LPResult solve(const InequalitySystem& sys, const std::map<int, Rational>& objective) {
  auto lp = lp_solve(sys, objective, Optimize::Max);
  if (lp.status != LPStatus::Optimal) {
    throw std::runtime_error("cut loop LP is " + std::string(to_string(lp.status)));
  }
  return lp;
}

}  // namespace

CutLoopReport run_cut_loop(const UCInstance& inst, Variant variant,
                           const std::map<int, Rational>& objective,
                           const std::vector<Family>& families, std::span<const Point> extreme,
                           const CutLoopCaps& caps) {
  CutLoopReport rep;
  const auto best = oracle_optimize(extreme, objective);
  if (!best.feasible) throw std::runtime_error("oracle found no feasible point");
  rep.oracle_objective = best.objective;

  auto sys = relax_integrality(build_base(inst, variant));
  std::vector<Family> active;
  for (Family f : families) {
    if (family_applies(inst, f)) active.push_back(f);
  }

  int unchanged = 0;
  std::optional<Rational> previous;
  for (int it = 0;; ++it) {
    const auto lp = solve(sys, objective);
    rep.final_objective = lp.objective;
    rep.final_solution = lp.solution;
    rep.final_integral = has_binary_yu(lp.solution, sys.space);

    CutLoopIteration step{lp.objective, {}};
    if (previous && *previous == lp.objective) {
      ++unchanged;
    } else {
      unchanged = 0;
    }
    previous = lp.objective;

    if (rep.final_integral) {
      rep.iterations.push_back(std::move(step));
      rep.status = LoopStatus::IntegralOptimal;
      break;
    }
    if (unchanged >= caps.stall_iterations) {
      rep.iterations.push_back(std::move(step));
      rep.status = LoopStatus::Stalled;
      break;
    }
    if (it >= caps.max_iterations) {
      rep.iterations.push_back(std::move(step));
      rep.status = LoopStatus::IterationCap;
      break;
    }

    std::vector<SeparationResult> cuts;
    for (Family f : active) {
      auto found = violated_members(inst, f, lp.solution, caps.reading);
      cuts.insert(cuts.end(), std::make_move_iterator(found.begin()),
                  std::make_move_iterator(found.end()));
    }
    std::sort(cuts.begin(), cuts.end(), separation_order);
    if (cuts.size() > static_cast<std::size_t>(caps.cuts_per_iteration)) {
      cuts.resize(static_cast<std::size_t>(caps.cuts_per_iteration));
    }
    if (cuts.empty()) {
      // Fractional, but the families have nothing more to offer.
      rep.iterations.push_back(std::move(step));
      rep.status = LoopStatus::Stalled;
      break;
    }
    for (const auto& c : cuts) {
      auto row = generate(inst, *c.params, caps.reading);
      for (const auto& p : extreme) {
        if (!eval_inequality(row, p, sys.space).satisfied) {
          rep.invalid_cuts.push_back(*c.params);
          break;
        }
      }
      sys.rows.push_back(std::move(row));
      step.added.push_back(*c.params);
    }
    rep.iterations.push_back(std::move(step));
  }
  rep.gap = rep.final_objective - rep.oracle_objective;
  return rep;
}

CutLoopReport run_cut_loop(const UCInstance& inst, Variant variant,
                           const std::map<int, Rational>& objective,
                           const std::vector<Family>& families, const CutLoopCaps& caps,
                           const OracleOptions& options) {
  const auto ext = extreme_points(inst, variant, options);
  return run_cut_loop(inst, variant, objective, families, ext, caps);
}

std::vector<GapRow> gap_profile(const UCInstance& inst, Variant variant,
                                const std::vector<std::map<int, Rational>>& objectives,
                                const std::optional<std::vector<Family>>& families,
                                const CutLoopCaps& caps, const OracleOptions& options) {
  std::vector<GapRow> out;
  if (objectives.empty()) return out;
  const auto ext = extreme_points(inst, variant, options);
  const auto fams = families ? *families : default_families(inst, variant);
  for (const auto& obj : objectives) {
    const auto rep = run_cut_loop(inst, variant, obj, fams, ext, caps);
    GapRow row;
    row.base_gap = rep.iterations.front().objective - rep.oracle_objective;
    row.final_gap = rep.gap;
    row.status = rep.status;
    for (const auto& it : rep.iterations) {
      for (const auto& p : it.added) ++row.cuts[p.family];
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace ucpoly
