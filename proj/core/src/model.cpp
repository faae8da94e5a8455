#include "ucpoly/model.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ucpoly {

InstanceError::InstanceError(std::string assumption, const std::string& detail)
    : InputError("assumption " + assumption + " violated: " + detail),
      assumption_(std::move(assumption)) {}

namespace {

std::string pair_detail(std::string_view a_name, const Rational& a, std::string_view b_name,
                        const Rational& b) {
  std::ostringstream os;
  os << a_name << "=" << format_rational(a) << ", " << b_name << "=" << format_rational(b);
  return os.str();
}

}  // namespace

void validate(const UCInstance& inst) {
  if (inst.T < 2) throw InstanceError("T >= 2", "T=" + std::to_string(inst.T));
  if (inst.L < 1) throw InstanceError("L >= 1", "L=" + std::to_string(inst.L));
  if (inst.ell < 1) throw InstanceError("ell >= 1", "ell=" + std::to_string(inst.ell));
  if (inst.L > inst.T)
    throw InstanceError("L <= T", "L=" + std::to_string(inst.L) + ", T=" + std::to_string(inst.T));
  if (inst.ell > inst.T)
    throw InstanceError("ell <= T",
                        "ell=" + std::to_string(inst.ell) + ", T=" + std::to_string(inst.T));
  if (inst.Cmin < 0) throw InstanceError("Cmin >= 0", "Cmin=" + format_rational(inst.Cmin));
  if (inst.V <= 0) throw InstanceError("V > 0", "V=" + format_rational(inst.V));

  const bool half_gap = inst.Cmax == inst.Cmin + 2 * inst.V;
  if (half_gap ? inst.Vbar < inst.Cmin : inst.Vbar <= inst.Cmin) {
    throw InstanceError(half_gap ? "Cmin <= Vbar" : "Cmin < Vbar",
                        pair_detail("Cmin", inst.Cmin, "Vbar", inst.Vbar));
  }
  if (!(inst.Vbar < inst.Cmin + inst.V)) {
    throw InstanceError("Vbar < Cmin + V",
                        pair_detail("Vbar", inst.Vbar, "Cmin+V", Rational(inst.Cmin + inst.V)));
  }
  if (inst.Cmax - inst.Cmin - inst.V < 0) {
    throw InstanceError("Cmax - Cmin - V >= 0",
                        pair_detail("Cmax", inst.Cmax, "Cmin+V", Rational(inst.Cmin + inst.V)));
  }
}

UCInstance make_instance(int T, int L, int ell, Rational Cmin, Rational Cmax, Rational Vbar,
                         Rational V) {
  UCInstance inst{T, L, ell, std::move(Cmax), std::move(Cmin), std::move(Vbar), std::move(V)};
  validate(inst);
  return inst;
}

namespace {

using nlohmann::json;

int read_int(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("instance document lacks key '") + key + "'");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw InputError(std::string("key '") + key + "' must be an integer");
  const auto value = v.get<long long>();
  if (value < -1000000 || value > 1000000) throw InputError(std::string("key '") + key + "' out of range");
  return static_cast<int>(value);
}

Rational read_rational(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("instance document lacks key '") + key + "'");
  const json& v = doc.at(key);
  if (v.is_number_integer()) {
    // Large integers arrive as unsigned or signed 64-bit.
    return v.is_number_unsigned() ? Rational(Integer(std::to_string(v.get<unsigned long long>())))
                                  : Rational(Integer(std::to_string(v.get<long long>())));
  }
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("key '") + key + "': " + e.what());
    }
  }
  throw InputError(std::string("key '") + key + "' must be an integer or a \"p/q\" string");
}

}  // namespace

UCInstance load_instance(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("instance document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("instance document must be a JSON object");
  static const char* const kKeys[] = {"T", "L", "ell", "Cmin", "Cmax", "Vbar", "V", "name"};
  for (const auto& [key, _] : doc.items()) {
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw InputError("unknown key '" + key + "' in instance document");
    }
  }
  UCInstance inst;
  inst.T = read_int(doc, "T");
  inst.L = read_int(doc, "L");
  inst.ell = read_int(doc, "ell");
  inst.Cmin = read_rational(doc, "Cmin");
  inst.Cmax = read_rational(doc, "Cmax");
  inst.Vbar = read_rational(doc, "Vbar");
  inst.V = read_rational(doc, "V");
  validate(inst);
  return inst;
}

namespace {

json rational_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return json(r.get_num().get_si());
  return json(format_rational(r));
}

}  // namespace

std::string instance_to_json(const UCInstance& inst) {
  json doc = json::object();
  doc["T"] = inst.T;
  doc["L"] = inst.L;
  doc["ell"] = inst.ell;
  doc["Cmin"] = rational_json(inst.Cmin);
  doc["Cmax"] = rational_json(inst.Cmax);
  doc["Vbar"] = rational_json(inst.Vbar);
  doc["V"] = rational_json(inst.V);
  return doc.dump();
}

std::string describe(const UCInstance& inst) {
  std::ostringstream os;
  os << "T=" << inst.T << " L=" << inst.L << " ell=" << inst.ell
     << " Cmin=" << format_rational(inst.Cmin) << " Cmax=" << format_rational(inst.Cmax)
     << " Vbar=" << format_rational(inst.Vbar) << " V=" << format_rational(inst.V);
  return os.str();
}

bool DerivedConstants::in_grid(const Rational& value) const {
  return std::binary_search(grid.begin(), grid.end(), value);
}

DerivedConstants derive_constants(const UCInstance& inst) {
  DerivedConstants dc;
  const Rational gap = inst.Cmax - inst.Cmin;
  const Rational ratio = gap / inst.V;
  dc.kappa = to_int(ceil_of(ratio)) - 1;
  dc.gamma = to_int(floor_of(ratio));

  const auto largest_step = [&](const Rational& base) {
    // max n in [1,T] with base + nV <= Cmax, or 0 when even n = 1 fails.
    const Rational room = inst.Cmax - base;
    if (room < inst.V) return 0;
    const int n = to_int(floor_of(Rational(room / inst.V)));
    return std::min(n, inst.T);
  };
  dc.alpha1 = largest_step(inst.Cmin);
  dc.alpha2 = largest_step(inst.Vbar);

  dc.grid.push_back(Rational(0));
  for (int n = 0; n <= dc.alpha1; ++n) dc.grid.push_back(inst.Cmin + n * inst.V);
  for (int n = 0; n <= dc.alpha2; ++n) dc.grid.push_back(inst.Vbar + n * inst.V);
  for (int n = 0; n <= dc.alpha1; ++n) dc.grid.push_back(inst.Cmax - n * inst.V);
  std::sort(dc.grid.begin(), dc.grid.end());
  dc.grid.erase(std::unique(dc.grid.begin(), dc.grid.end()), dc.grid.end());
  return dc;
}

Regime classify(const UCInstance& inst) {
  const Rational gap = inst.Cmax - inst.Cmin;
  if (inst.V == gap) return Regime::K1;
  if (gap == 2 * inst.V && inst.Vbar == inst.Cmin) return Regime::K2;
  if (inst.V < gap) return Regime::SubHull;
  return Regime::General;
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::K1: return "K1";
    case Regime::K2: return "K2";
    case Regime::SubHull: return "SUBHULL";
    case Regime::General: return "GENERAL";
  }
  return "?";
}

VariableSpace::VariableSpace(int T) : T_(T) {
  if (T < 1) throw std::invalid_argument("variable space needs T >= 1");
}

int VariableSpace::x(int t) const {
  if (t < 1 || t > T_) throw std::out_of_range("x index " + std::to_string(t));
  return t - 1;
}

int VariableSpace::y(int t) const {
  if (t < 1 || t > T_) throw std::out_of_range("y index " + std::to_string(t));
  return T_ + t - 1;
}

int VariableSpace::u(int t) const {
  if (t < 2 || t > T_) throw std::out_of_range("u index " + std::to_string(t));
  return 2 * T_ + t - 2;
}

std::string VariableSpace::name(int id) const {
  if (id < 0 || id >= size()) throw std::out_of_range("variable id " + std::to_string(id));
  if (id < T_) return "x" + std::to_string(id + 1);
  if (id < 2 * T_) return "y" + std::to_string(id - T_ + 1);
  return "u" + std::to_string(id - 2 * T_ + 2);
}

int VariableSpace::id(std::string_view name) const {
  if (name.size() < 2) throw std::invalid_argument("bad variable name '" + std::string(name) + "'");
  int t = 0;
  const auto* first = name.data() + 1;
  const auto* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, t);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("bad variable name '" + std::string(name) + "'");
  }
  switch (name[0]) {
    case 'x': return x(t);
    case 'y': return y(t);
    case 'u': return u(t);
    default: throw std::invalid_argument("bad variable name '" + std::string(name) + "'");
  }
}

std::string_view to_string(Sense sense) {
  switch (sense) {
    case Sense::Le: return "<=";
    case Sense::Ge: return ">=";
    case Sense::Eq: return "=";
  }
  return "?";
}

void LinearInequality::add(int var, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.try_emplace(var, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

Rational LinearInequality::coeff(int var) const {
  auto it = coeffs.find(var);
  return it == coeffs.end() ? Rational(0) : it->second;
}

Point make_point(const std::vector<Rational>& x, const std::vector<Rational>& y,
                 const std::vector<Rational>& u) {
  if (x.size() != y.size() || x.empty() || u.size() + 1 != x.size()) {
    throw std::invalid_argument("point parts need |x| = |y| = T >= 1 and |u| = T-1");
  }
  Point p;
  p.values.reserve(3 * x.size() - 1);
  p.values.insert(p.values.end(), x.begin(), x.end());
  p.values.insert(p.values.end(), y.begin(), y.end());
  p.values.insert(p.values.end(), u.begin(), u.end());
  return p;
}

bool has_binary_yu(const Point& p, const VariableSpace& space) {
  for (int id = space.T(); id < space.size(); ++id) {
    if (p[id] != 0 && p[id] != 1) return false;
  }
  return true;
}

Evaluation eval_inequality(const LinearInequality& ineq, const Point& p,
                           const VariableSpace& space) {
  if (static_cast<int>(p.size()) != space.size()) {
    throw std::invalid_argument("point has " + std::to_string(p.size()) + " entries, space has " +
                                std::to_string(space.size()));
  }
  Evaluation ev;
  for (const auto& [var, c] : ineq.coeffs) {
    if (var < 0 || var >= space.size()) {
      throw std::invalid_argument("row '" + ineq.tag + "' references variable id " +
                                  std::to_string(var) + " outside the space");
    }
    ev.lhs += c * p[var];
  }
  ev.tight = ev.lhs == ineq.rhs;
  switch (ineq.sense) {
    case Sense::Le: ev.satisfied = ev.lhs <= ineq.rhs; break;
    case Sense::Ge: ev.satisfied = ev.lhs >= ineq.rhs; break;
    case Sense::Eq: ev.satisfied = ev.tight; break;
  }
  if (!ev.satisfied) {
    ev.violation = ev.lhs - ineq.rhs;
    if (ev.violation < 0) ev.violation = -ev.violation;
  }
  return ev;
}

}  // namespace ucpoly
