#include "ucpoly/verify.hpp"

#include "ucpoly/polycore.hpp"

#include <algorithm>
#include <sstream>

namespace ucpoly {

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Confirmed: return "confirmed";
    case ClaimStatus::Refuted: return "refuted";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "?";
}

std::string_view to_string(HullTarget target) {
  switch (target) {
    case HullTarget::K1: return "q-k1";
    case HullTarget::K2: return "q-k2";
    case HullTarget::Up: return "q-up";
    case HullTarget::Down: return "q-down";
    case HullTarget::Base: return "base";
  }
  return "?";
}

HullTarget parse_hull_target(std::string_view text) {
  if (text == "base" || text == "P_FULL-relaxation") return HullTarget::Base;
  switch (parse_hull_kind(text)) {
    case HullKind::K1: return HullTarget::K1;
    case HullKind::K2: return HullTarget::K2;
    case HullKind::Up: return HullTarget::Up;
    case HullKind::Down: return HullTarget::Down;
  }
  return HullTarget::Base;
}

Variant variant_of(HullTarget target) {
  switch (target) {
    case HullTarget::Up: return Variant::Up;
    case HullTarget::Down: return Variant::Down;
    default: return Variant::Full;
  }
}

namespace {

HullKind kind_of(HullTarget target) {
  switch (target) {
    case HullTarget::K1: return HullKind::K1;
    case HullTarget::K2: return HullKind::K2;
    case HullTarget::Up: return HullKind::Up;
    case HullTarget::Down: return HullKind::Down;
    case HullTarget::Base: break;
  }
  throw std::logic_error("base has no hull kind");
}

VerificationReport start(std::string claim, const UCInstance& inst) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.instance = describe(inst);
  return r;
}

std::string violation_detail(const Evaluation& ev, const LinearInequality& row) {
  std::ostringstream os;
  os << "lhs=" << format_rational(ev.lhs) << " rhs=" << format_rational(row.rhs)
     << " violation=" << format_rational(ev.violation);
  return os.str();
}

// q-down, q-down-F10 (family omitted), q-down@amended.
std::string target_label(HullTarget target, const VerifyOptions& options) {
  std::string label(to_string(target));
  for (Family f : options.omit) label += "-" + std::string(to_string(f));
  if (options.reading == Reading::Amended && target != HullTarget::Base) label += "@amended";
  return label;
}

std::string variant_claim(std::string_view what, Variant variant) {
  return std::string(what) + "/" + std::string(to_string(variant));
}

}  // namespace

VerificationReport check_validity(const LinearInequality& ineq, const UCInstance& inst, Variant variant,
                                  std::span<const Point> extreme) {
  auto rep = start(variant_claim("valid:" + ineq.tag, variant), inst);
  const VariableSpace sp(inst.T);
  std::int64_t violated = 0;
  for (const auto& p : extreme) {
    const auto ev = eval_inequality(ineq, p, sp);
    if (ev.satisfied) continue;
    ++violated;
    if (rep.witnesses.size() < 5) {
      rep.witnesses.push_back({"violating-point", p, ineq.tag, violation_detail(ev, ineq)});
    }
  }
  rep.counts["points"] = static_cast<std::int64_t>(extreme.size());
  rep.counts["violations"] = violated;
  rep.status = violated == 0 ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  return rep;
}

VerificationReport check_validity(const LinearInequality& ineq, const UCInstance& inst, Variant variant,
                                  const OracleOptions& options) {
  const auto ext = extreme_points(inst, variant, options);
  return check_validity(ineq, inst, variant, ext);
}

VerificationReport check_facet(const LinearInequality& ineq, const UCInstance& inst, Variant variant,
                               std::span<const Point> extreme) {
  auto rep = check_validity(ineq, inst, variant, extreme);
  rep.claim = variant_claim("facet:" + ineq.tag, variant);
  if (rep.refuted()) return rep;
  const VariableSpace sp(inst.T);
  std::vector<Point> tight;
  for (const auto& p : extreme) {
    if (eval_inequality(ineq, p, sp).tight) tight.push_back(p);
  }
  const int want = 3 * inst.T - 2;
  const int rank = tight.empty() ? -1 : affine_rank(tight);
  rep.counts["tight"] = static_cast<std::int64_t>(tight.size());
  rep.counts["rank"] = rank;
  rep.counts["expected_rank"] = want;
  if (rank == want) {
    rep.status = ClaimStatus::Confirmed;
  } else {
    rep.status = ClaimStatus::Refuted;
    std::ostringstream os;
    os << tight.size() << " tight extreme points span affine rank " << rank << ", need " << want;
    rep.witnesses.push_back({"rank-deficient", std::nullopt, ineq.tag, os.str()});
  }
  return rep;
}

VerificationReport check_facet(const LinearInequality& ineq, const UCInstance& inst, Variant variant,
                               const OracleOptions& options) {
  const auto ext = extreme_points(inst, variant, options);
  return check_facet(ineq, inst, variant, ext);
}

VerificationReport check_full_dimension(const UCInstance& inst, Variant variant,
                                        std::span<const Point> extreme) {
  auto rep = start(variant_claim("full-dimension", variant), inst);
  const int want = 3 * inst.T - 1;
  const int rank = extreme.empty() ? -1 : affine_rank(extreme);
  rep.counts["points"] = static_cast<std::int64_t>(extreme.size());
  rep.counts["rank"] = rank;
  rep.counts["expected_rank"] = want;
  rep.status = rank == want ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  if (rep.refuted()) {
    rep.witnesses.push_back({"rank-deficient", std::nullopt, "",
                             "extreme points span affine rank " + std::to_string(rank)});
  }
  return rep;
}

VerificationReport check_full_dimension(const UCInstance& inst, Variant variant,
                                        const OracleOptions& options) {
  const auto ext = extreme_points(inst, variant, options);
  return check_full_dimension(inst, variant, ext);
}

InequalitySystem hull_system(const UCInstance& inst, HullTarget target, const HullOptions& options) {
  if (target == HullTarget::Base) return relax_integrality(build_base(inst, Variant::Full));
  try {
    return assemble_hull(inst, kind_of(target), options);
  } catch (const CutParamError& e) {
    throw InputError(e.what());
  }
}

VerificationReport check_hull_equality(const UCInstance& inst, HullTarget target,
                                       std::span<const Point> extreme, const VerifyOptions& options) {
  auto rep = start("hull:" + target_label(target, options), inst);
  const auto sys = hull_system(inst, target, {options.omit, options.reading});
  rep.counts["rows"] = static_cast<std::int64_t>(sys.rows.size());

  const int limit = options.dd_max_T > 0 ? options.dd_max_T
                    : (target == HullTarget::Up || target == HullTarget::Down) ? 5
                                                                               : 6;
  if (inst.T > limit) {
    rep.status = ClaimStatus::Skipped;
    rep.note = "DD limited to T <= " + std::to_string(limit);
    return rep;
  }

  // (a) conv(P) is inside the system.
  std::int64_t outside = 0;
  for (const auto& p : extreme) {
    for (const auto& row : sys.rows) {
      const auto ev = eval_inequality(row, p, sys.space);
      if (ev.satisfied) continue;
      ++outside;
      if (rep.witnesses.size() < options.max_witnesses) {
        rep.witnesses.push_back({"violating-point", p, row.tag, violation_detail(ev, row)});
      }
    }
  }
  rep.counts["oracle_points"] = static_cast<std::int64_t>(extreme.size());
  rep.counts["violated_rows"] = outside;

  // (b) every vertex of the system is a feasible mixed-integer point.
  const auto vs = dd_enumerate(sys);
  rep.counts["dd_vertices"] = static_cast<std::int64_t>(vs.points.size());
  std::int64_t bad = 0;
  if (vs.status != VertexSet::Status::Ok) {
    ++bad;
    rep.witnesses.push_back({std::string(to_string(vs.status)), std::nullopt, "",
                             "system is " + std::string(to_string(vs.status))});
  }
  const auto model = build_base(inst, variant_of(target));
  for (const auto& v : vs.points) {
    if (!has_binary_yu(v, sys.space)) {
      ++bad;
      if (rep.witnesses.size() < options.max_witnesses) {
        rep.witnesses.push_back({"fractional-vertex", v, "", "vertex has fractional (y,u)"});
      }
      continue;
    }
    const auto failed = first_violated_row(model, v);
    if (!failed.empty()) {
      ++bad;
      if (rep.witnesses.size() < options.max_witnesses) {
        rep.witnesses.push_back({"infeasible-vertex", v, failed, "vertex violates " + failed});
      }
    }
  }
  rep.counts["bad_vertices"] = bad;
  rep.status = outside == 0 && bad == 0 ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  return rep;
}

VerificationReport check_hull_equality(const UCInstance& inst, HullTarget target,
                                       const VerifyOptions& options) {
  const auto ext = extreme_points(inst, variant_of(target), options.oracle);
  return check_hull_equality(inst, target, ext, options);
}

std::map<int, Rational> random_objective(int dim, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::map<int, Rational> obj;
  for (int k = 0; k < dim; ++k) {
    const int c = dist(rng);
    if (c != 0) obj[k] = c;
  }
  return obj;
}

VerificationReport random_objective_equivalence(const UCInstance& inst, HullTarget target, int trials,
                                                std::uint64_t seed, std::span<const Point> extreme,
                                                const VerifyOptions& options) {
  auto rep = start("objective-equivalence:" + target_label(target, options), inst);
  rep.seed = seed;
  const auto sys = hull_system(inst, target, {options.omit, options.reading});
  const auto hrep = to_hrep(sys);
  std::mt19937_64 rng(seed);
  std::int64_t gaps = 0;
  for (int k = 0; k < trials; ++k) {
    const auto obj = random_objective(sys.space.size(), rng);
    Vector c(sys.space.size());
    for (const auto& [var, v] : obj) c[var] = v;
    const auto lp = lp_solve(hrep, c, Optimize::Max);
    const auto best = oracle_optimize(extreme, obj);
    if (lp.status == LPStatus::Optimal && best.feasible && lp.objective == best.objective) continue;
    ++gaps;
    if (rep.witnesses.size() < options.max_witnesses) {
      std::ostringstream os;
      os << "trial " << k << ": lp=" << to_string(lp.status);
      if (lp.status == LPStatus::Optimal) os << " " << format_rational(lp.objective);
      os << " oracle=" << (best.feasible ? format_rational(best.objective) : std::string("none"));
      std::optional<Point> at;
      if (lp.status == LPStatus::Optimal) at = lp.solution;
      rep.witnesses.push_back({"objective-gap", at, "", os.str()});
    }
  }
  rep.counts["trials"] = trials;
  rep.counts["gaps"] = gaps;
  rep.counts["oracle_points"] = static_cast<std::int64_t>(extreme.size());
  rep.status = gaps == 0 ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  return rep;
}

VerificationReport random_objective_equivalence(const UCInstance& inst, HullTarget target, int trials,
                                                std::uint64_t seed, const VerifyOptions& options) {
  const auto ext = extreme_points(inst, variant_of(target), options.oracle);
  return random_objective_equivalence(inst, target, trials, seed, ext, options);
}

}  // namespace ucpoly
