#include "ucpoly/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace ucpoly {

namespace {

void check_cap(const UCInstance& inst, const OracleOptions& options) {
  if (inst.T > options.max_T) {
    throw OracleCapError("oracle enumeration is capped at T=" + std::to_string(options.max_T) +
                         " (instance has T=" + std::to_string(inst.T) + ")");
  }
}

Point pattern_point(const BinaryPattern& pattern, const std::vector<Rational>& x) {
  std::vector<Rational> y(pattern.y.begin(), pattern.y.end());
  std::vector<Rational> u(pattern.u.begin(), pattern.u.end());
  return make_point(x, y, u);
}

std::vector<Rational> sorted_unique_values(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Point> sorted_unique(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

OnlineIntervalProfile profile_of(const BinaryPattern& pattern) {
  OnlineIntervalProfile prof;
  const int T = static_cast<int>(pattern.y.size());
  for (int t = 1; t <= T; ++t) {
    if (pattern.y[t - 1] == 0) continue;
    if (t == 1 || pattern.y[t - 2] == 0) {
      prof.intervals.emplace_back(t, t);
    } else {
      prof.intervals.back().second = t;
    }
  }
  return prof;
}

std::vector<BinaryPattern> enumerate_patterns(const UCInstance& inst, const OracleOptions& options) {
  check_cap(inst, options);
  const int T = inst.T;
  const VariableSpace space(T);
  // Rows without x terms: minimum up/down, start-up logic, y/u bounds.
  std::vector<LinearInequality> logic;
  for (auto& row : build_base(inst, Variant::Full).rows) {
    const bool has_x = std::any_of(row.coeffs.begin(), row.coeffs.end(),
                                   [&](const auto& kv) { return kv.first < T; });
    if (!has_x) logic.push_back(std::move(row));
  }

  std::vector<BinaryPattern> out;
  const unsigned ny = 1u << T;
  const unsigned nu = 1u << (T - 1);
  Point p(static_cast<std::size_t>(space.size()));
  for (unsigned ym = 0; ym < ny; ++ym) {
    for (unsigned um = 0; um < nu; ++um) {
      BinaryPattern pat;
      pat.y.resize(T);
      pat.u.resize(T - 1);
      for (int t = 1; t <= T; ++t) {
        pat.y[t - 1] = (ym >> (T - t)) & 1u;
        p[space.y(t)] = pat.y[t - 1];
      }
      for (int t = 2; t <= T; ++t) {
        pat.u[t - 2] = (um >> (T - t)) & 1u;
        p[space.u(t)] = pat.u[t - 2];
      }
      const bool ok = std::all_of(logic.begin(), logic.end(), [&](const LinearInequality& row) {
        return eval_inequality(row, p, space).satisfied;
      });
      if (ok) out.push_back(std::move(pat));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> fiber_vertices(const UCInstance& inst, const BinaryPattern& pattern,
                                  Variant variant) {
  const int T = inst.T;
  if (static_cast<int>(pattern.y.size()) != T || static_cast<int>(pattern.u.size()) != T - 1) {
    throw std::invalid_argument("pattern does not match the horizon");
  }
  const VariableSpace space(T);
  std::vector<Rational> fixed(static_cast<std::size_t>(space.size()));
  for (int t = 1; t <= T; ++t) fixed[space.y(t)] = pattern.y[t - 1];
  for (int t = 2; t <= T; ++t) fixed[space.u(t)] = pattern.u[t - 2];

  HRep rep;
  rep.dim = T;
  for (const auto& row : build_base(inst, variant).rows) {
    Vector a(T);
    Rational rhs = row.rhs;
    bool has_x = false;
    for (const auto& [var, c] : row.coeffs) {
      if (var < T) {
        a[var] = c;
        has_x = true;
      } else {
        rhs -= c * fixed[var];
      }
    }
    if (!has_x) continue;
    const auto push = [&](const Rational& sign) {
      Vector s(T);
      for (int k = 0; k < T; ++k) s[k] = sign * a[k];
      rep.A.push_back(std::move(s));
      rep.b.push_back(sign * rhs);
      rep.tags.push_back(row.tag);
    };
    if (row.sense != Sense::Ge) push(1);
    if (row.sense != Sense::Le) push(-1);
  }

  const VertexSet vs = dd_enumerate(rep);
  if (vs.status == VertexSet::Status::Unbounded) {
    throw std::logic_error("generation fiber is unbounded");
  }
  std::vector<Point> out;
  out.reserve(vs.points.size());
  for (const auto& xp : vs.points) out.push_back(pattern_point(pattern, xp.values));
  return out;
}

CandidateSet candidate_points(const UCInstance& inst, Variant variant, const OracleOptions& options) {
  CandidateSet cs;
  cs.patterns = enumerate_patterns(inst, options);
  for (std::size_t k = 0; k < cs.patterns.size(); ++k) {
    auto verts = fiber_vertices(inst, cs.patterns[k], variant);
    for (std::size_t v = 0; v < verts.size(); ++v) {
      cs.points.push_back(std::move(verts[v]));
      cs.provenance.emplace_back(k, v);
    }
  }
  return cs;
}

std::vector<Point> extreme_points(const CandidateSet& candidates) {
  if (candidates.points.empty()) return {};
  const int T = candidates.patterns.empty()
                    ? 0
                    : static_cast<int>(candidates.patterns.front().y.size());
  std::map<std::size_t, std::vector<std::size_t>> by_pattern;
  for (std::size_t i = 0; i < candidates.points.size(); ++i) {
    by_pattern[candidates.provenance[i].first].push_back(i);
  }
  std::vector<Point> out;
  for (const auto& [_, members] : by_pattern) {
    // Within one pattern only the x-part varies.
    std::vector<Point> xs;
    for (std::size_t i : members) {
      xs.emplace_back(std::vector<Rational>(candidates.points[i].values.begin(),
                                            candidates.points[i].values.begin() + T));
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::vector<Point> others;
      others.reserve(xs.size() - 1);
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j != i) others.push_back(xs[j]);
      }
      if (others.empty() || !in_convex_hull(xs[i], others).inside) {
        out.push_back(candidates.points[members[i]]);
      }
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<Point> extreme_points(const UCInstance& inst, Variant variant, const OracleOptions& options) {
  return extreme_points(candidate_points(inst, variant, options));
}

std::vector<Point> k1_characterized_points(const UCInstance& inst, const OracleOptions& options) {
  if (inst.V != inst.Cmax - inst.Cmin) throw InputError("the characterization needs V = Cmax - Cmin");
  const int T = inst.T;
  std::vector<Point> out;
  for (const auto& pat : enumerate_patterns(inst, options)) {
    std::vector<std::vector<Rational>> choices(T, std::vector<Rational>{0});
    for (const auto& [a, b] : profile_of(pat).intervals) {
      for (int t = a; t <= b; ++t) {
        const bool boundary = (t == a && a > 1) || (t == b && b < T);
        choices[t - 1] = boundary ? std::vector<Rational>{inst.Cmin, inst.Vbar}
                                  : std::vector<Rational>{inst.Cmin, inst.Cmax};
      }
    }
    std::vector<Rational> x(T);
    std::function<void(int)> rec = [&](int t) {
      if (t == T) {
        out.push_back(pattern_point(pat, x));
        return;
      }
      for (const auto& v : choices[t]) {
        x[t] = v;
        rec(t + 1);
      }
    };
    rec(0);
  }
  return sorted_unique(std::move(out));
}

std::vector<Point> scenario_tree_points_k2up(const UCInstance& inst, const OracleOptions& options) {
  if (inst.Cmax != inst.Cmin + 2 * inst.V) {
    throw InputError("scenario trees need Cmax = Cmin + 2V");
  }
  // Node values of the trees. An online x_t sits at Cmin, at Cmax, at Vbar
  // when the unit starts up at t, or makes a ramp-up row tight with one of
  // its neighbours (Cmin+V after Cmin or before Cmax, Vbar+V after Vbar).
  const std::vector<Rational> values = sorted_unique_values(
      {inst.Cmin, inst.Cmin + inst.V, inst.Cmax, inst.Vbar, inst.Vbar + inst.V});
  const int T = inst.T;
  std::vector<Point> out;
  for (const auto& pat : enumerate_patterns(inst, options)) {
    std::vector<Rational> x(T);
    // needs_tight_next: x_{t-1} is justified only if x_t - x_{t-1} = V.
    std::function<void(int, bool)> grow = [&](int t, bool needs_tight_next) {
      const bool prev_on = t >= 2 && pat.y[t - 2] == 1;
      if (t > T || pat.y[t - 1] == 0) {
        if (needs_tight_next) return;
        if (t > T) {
          out.push_back(pattern_point(pat, x));
          return;
        }
        x[t - 1] = 0;
        grow(t + 1, false);
        return;
      }
      const bool start_up = t >= 2 && !prev_on;
      for (const auto& v : values) {
        if (prev_on && v - x[t - 2] > inst.V) continue;
        if (start_up && v > inst.Vbar) continue;
        const bool tight_prev = prev_on && v - x[t - 2] == inst.V;
        if (needs_tight_next && !tight_prev) continue;
        const bool at_bound = v == inst.Cmin || v == inst.Cmax || (start_up && v == inst.Vbar);
        x[t - 1] = v;
        grow(t + 1, !at_bound && !tight_prev);
      }
    };
    grow(1, false);
  }
  return sorted_unique(std::move(out));
}

GridReport grid_check(std::span<const Point> points, const UCInstance& inst) {
  const auto dc = derive_constants(inst);
  GridReport rep;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int t = 1; t <= inst.T; ++t) {
      ++rep.checked;
      if (!dc.in_grid(points[i][t - 1])) {
        rep.ok = false;
        rep.violations.emplace_back(i, t);
      }
    }
  }
  return rep;
}

OracleOptimum oracle_optimize(std::span<const Point> extreme, const std::map<int, Rational>& objective) {
  OracleOptimum best;
  for (const auto& p : extreme) {
    Rational v = 0;
    for (const auto& [var, c] : objective) {
      if (var < 0 || static_cast<std::size_t>(var) >= p.size()) {
        throw std::invalid_argument("objective references a variable outside the space");
      }
      v += c * p[var];
    }
    if (!best.feasible || v > best.objective) {
      best.feasible = true;
      best.objective = v;
      best.argmax = p;
    }
  }
  return best;
}

OracleOptimum oracle_optimize(const UCInstance& inst, Variant variant,
                              const std::map<int, Rational>& objective, const OracleOptions& options) {
  const auto ext = extreme_points(inst, variant, options);
  return oracle_optimize(ext, objective);
}

}  // namespace ucpoly
