#include "ucpoly/formulation.hpp"

#include <sstream>

namespace ucpoly {

std::string_view to_string(Variant variant) {
  switch (variant) {
    case Variant::Full: return "full";
    case Variant::Up: return "up";
    case Variant::Down: return "down";
  }
  return "?";
}

Variant parse_variant(std::string_view text) {
  if (text == "full" || text == "P_FULL" || text == "p") return Variant::Full;
  if (text == "up" || text == "P_UP") return Variant::Up;
  if (text == "down" || text == "P_DOWN") return Variant::Down;
  throw InputError("unknown variant '" + std::string(text) + "' (expected full, up or down)");
}

const LinearInequality* InequalitySystem::find(std::string_view tag) const {
  for (const auto& row : rows) {
    if (row.tag == tag) return &row;
  }
  return nullptr;
}

namespace {

std::string indexed(std::string_view eq, int t) {
  return std::string(eq) + "[t=" + std::to_string(t) + "]";
}

LinearInequality le_row(std::string tag, Rational rhs) {
  LinearInequality row;
  row.tag = std::move(tag);
  row.rhs = std::move(rhs);
  row.sense = Sense::Le;
  return row;
}

}  // namespace

void append_min_up_down_rows(const UCInstance& inst, const VariableSpace& sp,
                             std::vector<LinearInequality>& rows) {
  const int T = sp.T();
  // sum_{i=t-L+1}^{t} u_i <= y_t
  for (int t = inst.L + 1; t <= T; ++t) {
    auto row = le_row(indexed("1a", t), 0);
    for (int i = t - inst.L + 1; i <= t; ++i) row.add(sp.u(i), 1);
    row.add(sp.y(t), -1);
    rows.push_back(std::move(row));
  }
  // sum_{i=t-ell+1}^{t} u_i <= 1 - y_{t-ell}
  for (int t = inst.ell + 1; t <= T; ++t) {
    auto row = le_row(indexed("1b", t), 1);
    for (int i = t - inst.ell + 1; i <= t; ++i) row.add(sp.u(i), 1);
    row.add(sp.y(t - inst.ell), 1);
    rows.push_back(std::move(row));
  }
  // y_t - y_{t-1} - u_t <= 0
  for (int t = 2; t <= T; ++t) {
    auto row = le_row(indexed("1c", t), 0);
    row.add(sp.y(t), 1);
    row.add(sp.y(t - 1), -1);
    row.add(sp.u(t), -1);
    rows.push_back(std::move(row));
  }
}

void append_lower_generation_rows(const UCInstance& inst, const VariableSpace& sp,
                                  std::vector<LinearInequality>& rows) {
  for (int t = 1; t <= sp.T(); ++t) {
    auto row = le_row(indexed("1d", t), 0);
    row.add(sp.x(t), -1);
    row.add(sp.y(t), inst.Cmin);
    rows.push_back(std::move(row));
  }
}

void append_bound_rows(const VariableSpace& sp, std::vector<LinearInequality>& rows) {
  const int T = sp.T();
  for (int t = 1; t <= T; ++t) {
    auto row = le_row("x" + std::to_string(t) + ">=0", 0);
    row.add(sp.x(t), -1);
    rows.push_back(std::move(row));
  }
  for (int t = 1; t <= T; ++t) {
    auto lo = le_row("y" + std::to_string(t) + ">=0", 0);
    lo.add(sp.y(t), -1);
    rows.push_back(std::move(lo));
    auto hi = le_row("y" + std::to_string(t) + "<=1", 1);
    hi.add(sp.y(t), 1);
    rows.push_back(std::move(hi));
  }
  for (int t = 2; t <= T; ++t) {
    auto lo = le_row("u" + std::to_string(t) + ">=0", 0);
    lo.add(sp.u(t), -1);
    rows.push_back(std::move(lo));
    auto hi = le_row("u" + std::to_string(t) + "<=1", 1);
    hi.add(sp.u(t), 1);
    rows.push_back(std::move(hi));
  }
}

InequalitySystem build_base(const UCInstance& inst, Variant variant) {
  validate(inst);
  InequalitySystem sys;
  sys.space = VariableSpace(inst.T);
  sys.name = "P_" + std::string(variant == Variant::Full ? "FULL"
                                : variant == Variant::Up ? "UP"
                                                         : "DOWN");
  sys.integral_yu = true;
  const auto& sp = sys.space;
  auto& rows = sys.rows;

  append_min_up_down_rows(inst, sp, rows);
  append_lower_generation_rows(inst, sp, rows);
  for (int t = 1; t <= inst.T; ++t) {
    auto row = le_row(indexed("1e", t), 0);
    row.add(sp.x(t), 1);
    row.add(sp.y(t), -inst.Cmax);
    rows.push_back(std::move(row));
  }
  const Rational slack = inst.V - inst.Vbar;
  if (variant != Variant::Down) {
    // x_t - x_{t-1} <= V y_{t-1} + Vbar (1 - y_{t-1})
    for (int t = 2; t <= inst.T; ++t) {
      auto row = le_row(indexed("1f", t), inst.Vbar);
      row.add(sp.x(t), 1);
      row.add(sp.x(t - 1), -1);
      row.add(sp.y(t - 1), -slack);
      rows.push_back(std::move(row));
    }
  }
  if (variant != Variant::Up) {
    // x_{t-1} - x_t <= V y_t + Vbar (1 - y_t)
    for (int t = 2; t <= inst.T; ++t) {
      auto row = le_row(indexed("1g", t), inst.Vbar);
      row.add(sp.x(t - 1), 1);
      row.add(sp.x(t), -1);
      row.add(sp.y(t), -slack);
      rows.push_back(std::move(row));
    }
  }
  append_bound_rows(sp, rows);
  return sys;
}

InequalitySystem build_mud_hull_base(const UCInstance& inst) {
  validate(inst);
  InequalitySystem sys;
  sys.space = VariableSpace(inst.T);
  sys.name = "MUD_HULL";
  sys.integral_yu = false;
  const auto& sp = sys.space;
  append_min_up_down_rows(inst, sp, sys.rows);
  for (int t = 2; t <= inst.T; ++t) {
    auto lo = le_row("u" + std::to_string(t) + ">=0", 0);
    lo.add(sp.u(t), -1);
    sys.rows.push_back(std::move(lo));
  }
  for (int t = 1; t <= inst.T; ++t) {
    auto lo = le_row("y" + std::to_string(t) + ">=0", 0);
    lo.add(sp.y(t), -1);
    sys.rows.push_back(std::move(lo));
    auto hi = le_row("y" + std::to_string(t) + "<=1", 1);
    hi.add(sp.y(t), 1);
    sys.rows.push_back(std::move(hi));
  }
  for (int t = 2; t <= inst.T; ++t) {
    auto hi = le_row("u" + std::to_string(t) + "<=1", 1);
    hi.add(sp.u(t), 1);
    sys.rows.push_back(std::move(hi));
  }
  // x plays no part in this polytope; pin it so the system stays bounded.
  for (int t = 1; t <= inst.T; ++t) {
    auto row = le_row("x" + std::to_string(t) + "=0", 0);
    row.sense = Sense::Eq;
    row.add(sp.x(t), 1);
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

InequalitySystem relax_integrality(InequalitySystem sys) {
  sys.integral_yu = false;
  return sys;
}

std::string format_row(const LinearInequality& row, const VariableSpace& space) {
  std::ostringstream os;
  os << row.tag << ":";
  if (row.coeffs.empty()) os << " 0";
  for (const auto& [var, c] : row.coeffs) {
    os << " " << (c > 0 ? "+" : "") << format_rational(c) << "*" << space.name(var);
  }
  os << " " << to_string(row.sense) << " " << format_rational(row.rhs);
  return os.str();
}

std::string dump_system(const InequalitySystem& sys) {
  std::string out;
  for (const auto& row : sys.rows) {
    out += format_row(row, sys.space);
    out += '\n';
  }
  return out;
}

std::string first_violated_row(const InequalitySystem& sys, const Point& p) {
  for (const auto& row : sys.rows) {
    if (!eval_inequality(row, p, sys.space).satisfied) return row.tag;
  }
  if (sys.integral_yu && !has_binary_yu(p, sys.space)) return "integrality(y,u)";
  return {};
}

bool is_feasible(const InequalitySystem& sys, const Point& p) {
  return first_violated_row(sys, p).empty();
}

}  // namespace ucpoly
