#ifndef UCPOLY_FORMULATION_HPP
#define UCPOLY_FORMULATION_HPP

#include "ucpoly/model.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ucpoly {

/// Which ramping rows the polytope carries.
enum class Variant {
  Full,  // ramp-up and ramp-down
  Up,    // ramp-up only
  Down,  // ramp-down only
};

std::string_view to_string(Variant variant);
/// Accepts "full", "up", "down" (also the P_FULL / P_UP / P_DOWN spellings).
Variant parse_variant(std::string_view text);

struct InequalitySystem {
  VariableSpace space{2};
  std::string name;
  std::vector<LinearInequality> rows;
  /// y and u are restricted to {0,1}; rows alone describe the relaxation.
  bool integral_yu = false;

  const LinearInequality* find(std::string_view tag) const;
};

/// The mixed-integer formulation of the chosen variant: minimum up/down
/// rows, start-up logic, generation limits, ramping rows, then explicit
/// bounds x >= 0, 0 <= y <= 1, 0 <= u <= 1. Row tags are "1a[t=3]" ...
/// "1g[t=2]" and "x1>=0", "y1<=1", "u2>=0" and so on.
InequalitySystem build_base(const UCInstance& inst, Variant variant);

/// Minimum up/down rows, start-up logic, u >= 0 and the y/u upper and lower
/// bounds: the integral description of the on/off pattern polytope.
InequalitySystem build_mud_hull_base(const UCInstance& inst);

InequalitySystem relax_integrality(InequalitySystem sys);

/// Rows shared by every hull assembly: minimum up/down, start-up logic,
/// generation lower bound, and all variable bounds.
void append_min_up_down_rows(const UCInstance& inst, const VariableSpace& space,
                             std::vector<LinearInequality>& rows);
void append_lower_generation_rows(const UCInstance& inst, const VariableSpace& space,
                                  std::vector<LinearInequality>& rows);
void append_bound_rows(const VariableSpace& space, std::vector<LinearInequality>& rows);

/// "tag: 1*x1 -3*y1 <= 0", coefficients in variable-id order.
std::string format_row(const LinearInequality& row, const VariableSpace& space);
/// One row per line, in system order.
std::string dump_system(const InequalitySystem& sys);

/// Checks a point against every row, treating integral_yu as an extra
/// requirement. Returns the first failing tag, or an empty string.
std::string first_violated_row(const InequalitySystem& sys, const Point& p);
bool is_feasible(const InequalitySystem& sys, const Point& p);

}  // namespace ucpoly

#endif  // UCPOLY_FORMULATION_HPP
