#ifndef UCPOLY_MODEL_HPP
#define UCPOLY_MODEL_HPP

#include "ucpoly/rational.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ucpoly {

/// Malformed user input (documents, flags, parameter tuples).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An instance that parses but breaks one of the generator assumptions.
class InstanceError : public InputError {
 public:
  InstanceError(std::string assumption, const std::string& detail);
  const std::string& assumption() const noexcept { return assumption_; }

 private:
  std::string assumption_;
};

/// Single-generator parameters. Construct through make_instance() or
/// load_instance(); both validate.
struct UCInstance {
  int T = 0;    // time periods
  int L = 1;    // minimum up time
  int ell = 1;  // minimum down time
  Rational Cmax;
  Rational Cmin;
  Rational Vbar;  // start-up / shut-down ramp
  Rational V;     // ramp rate in the stable region

  friend bool operator==(const UCInstance&, const UCInstance&) = default;
};

/// Checks every parameter assumption and throws InstanceError naming the
/// first one that fails.
///
/// Cmin < Vbar is relaxed to Cmin <= Vbar when Cmax = Cmin + 2V, the
/// setting whose hull result fixes Vbar = Cmin.
void validate(const UCInstance& inst);

UCInstance make_instance(int T, int L, int ell, Rational Cmin, Rational Cmax, Rational Vbar,
                         Rational V);

/// Parses an instance document: a JSON object with keys T, L, ell, Cmin,
/// Cmax, Vbar, V. Rationals may be JSON integers or "p/q" strings.
UCInstance load_instance(std::string_view json_text);
std::string instance_to_json(const UCInstance& inst);
/// One-line human summary, e.g. "T=4 L=2 ell=2 Cmin=1 Cmax=3 Vbar=3/2 V=1".
std::string describe(const UCInstance& inst);

struct DerivedConstants {
  int kappa = 0;   // ceil((Cmax-Cmin)/V) - 1
  int gamma = 0;   // floor((Cmax-Cmin)/V)
  int alpha1 = 0;  // max n in [1,T] with Cmin + nV <= Cmax
  int alpha2 = 0;  // max n in [1,T] with Vbar + nV <= Cmax, 0 when none
  std::vector<Rational> grid;  // sorted, duplicates removed

  bool in_grid(const Rational& value) const;
};

DerivedConstants derive_constants(const UCInstance& inst);

enum class Regime { K1, K2, SubHull, General };

/// K1: V = Cmax - Cmin. K2: Cmax = Cmin + 2V and Vbar = Cmin.
/// SubHull: V < Cmax - Cmin otherwise.
Regime classify(const UCInstance& inst);
std::string_view to_string(Regime regime);

/// Maps x_1..x_T, y_1..y_T, u_2..u_T onto ids 0..3T-2.
class VariableSpace {
 public:
  explicit VariableSpace(int T);

  int T() const noexcept { return T_; }
  int size() const noexcept { return 3 * T_ - 1; }

  int x(int t) const;
  int y(int t) const;
  int u(int t) const;

  std::string name(int id) const;
  int id(std::string_view name) const;

  friend bool operator==(const VariableSpace&, const VariableSpace&) = default;

 private:
  int T_;
};

enum class Sense { Le, Ge, Eq };
std::string_view to_string(Sense sense);

struct LinearInequality {
  std::map<int, Rational> coeffs;  // variable id -> nonzero coefficient
  Rational rhs;
  Sense sense = Sense::Le;
  std::string tag;

  /// Accumulates c into the coefficient of var, erasing it if it cancels.
  void add(int var, const Rational& c);
  Rational coeff(int var) const;
};

/// Exact assignment to every variable of a VariableSpace.
struct Point {
  std::vector<Rational> values;

  Point() = default;
  explicit Point(std::vector<Rational> v) : values(std::move(v)) {}
  explicit Point(std::size_t dim) : values(dim) {}

  std::size_t size() const noexcept { return values.size(); }
  Rational& operator[](std::size_t i) { return values[i]; }
  const Rational& operator[](std::size_t i) const { return values[i]; }

  friend bool operator==(const Point& a, const Point& b) { return a.values == b.values; }
  friend bool operator<(const Point& a, const Point& b) { return a.values < b.values; }
};

/// Builds a point from its x, y and u parts (u holds u_2..u_T).
Point make_point(const std::vector<Rational>& x, const std::vector<Rational>& y,
                 const std::vector<Rational>& u);

/// True when every y and u entry of p is 0 or 1.
bool has_binary_yu(const Point& p, const VariableSpace& space);

struct Evaluation {
  Rational lhs;
  bool satisfied = false;
  bool tight = false;
  /// How far the row is violated (0 when satisfied).
  Rational violation;
};

/// Exact evaluation of a row. Throws std::invalid_argument on a dimension
/// mismatch between the row, the point and the space.
Evaluation eval_inequality(const LinearInequality& ineq, const Point& p,
                           const VariableSpace& space);

}  // namespace ucpoly

#endif  // UCPOLY_MODEL_HPP
