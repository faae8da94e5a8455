#include "ucpoly/io.hpp"

#include <fstream>
#include <sstream>

namespace ucpoly {

Json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(format_rational(q));
}

Rational rational_from_json(const Json& j, std::string_view what) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw InputError(std::string(what) + ": expected an integer or a \"p/q\" string, got " + j.dump());
}

Json point_to_json(const Point& p, int T) {
  const VariableSpace sp(T);
  if (static_cast<int>(p.size()) != sp.size()) throw std::invalid_argument("point does not match T");
  Json x = Json::array(), y = Json::array(), u = Json::array();
  for (int t = 1; t <= T; ++t) {
    x.push_back(rational_to_json(p[sp.x(t)]));
    y.push_back(rational_to_json(p[sp.y(t)]));
    if (t >= 2) u.push_back(rational_to_json(p[sp.u(t)]));
  }
  Json out;
  out["x"] = std::move(x);
  out["y"] = std::move(y);
  out["u"] = std::move(u);
  return out;
}

Point point_from_json(const Json& j, int T) {
  if (!j.is_object()) throw InputError("point document must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "x" && key != "y" && key != "u") throw InputError("point document: unknown key '" + key + "'");
  }
  const VariableSpace sp(T);
  Point p(static_cast<std::size_t>(sp.size()));
  const auto read = [&](const char* key, int first, auto id) {
    if (!j.contains(key) || !j[key].is_array()) {
      throw InputError(std::string("point document: '") + key + "' must be an array");
    }
    const auto& arr = j[key];
    const int want = T - first + 1;
    if (static_cast<int>(arr.size()) != want) {
      throw InputError(std::string("point document: '") + key + "' must have " + std::to_string(want) +
                       " entries");
    }
    for (int t = first; t <= T; ++t) {
      p[id(t)] = rational_from_json(arr[t - first], std::string(key) + std::to_string(t));
    }
  };
  read("x", 1, [&](int t) { return sp.x(t); });
  read("y", 1, [&](int t) { return sp.y(t); });
  read("u", 2, [&](int t) { return sp.u(t); });
  return p;
}

Point load_point(std::string_view text, int T) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("point document: ") + e.what());
  }
  return point_from_json(j, T);
}

std::map<int, Rational> objective_from_json(const Json& j, int T) {
  const auto p = point_from_json(j, T);
  std::map<int, Rational> obj;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] != 0) obj[static_cast<int>(k)] = p[k];
  }
  return obj;
}

std::map<int, Rational> load_objective(std::string_view text, int T) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("objective document: ") + e.what());
  }
  return objective_from_json(j, T);
}

Json cut_params_to_json(const CutParams& p) {
  Json j;
  j["family"] = std::string(to_string(p.family));
  j["t"] = p.t;
  j["m"] = p.m;
  j["S"] = p.S;
  j["tag"] = to_string(p);
  return j;
}

Json report_to_json(const VerificationReport& rep, int T) {
  Json j;
  j["claim"] = rep.claim;
  j["instance"] = rep.instance;
  j["status"] = std::string(to_string(rep.status));
  Json counts = Json::object();
  for (const auto& [k, v] : rep.counts) counts[k] = v;
  j["counts"] = std::move(counts);
  Json ws = Json::array();
  for (const auto& w : rep.witnesses) {
    Json wj;
    wj["kind"] = w.kind;
    if (!w.row.empty()) wj["row"] = w.row;
    if (w.point) wj["point"] = point_to_json(*w.point, T);
    wj["detail"] = w.detail;
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  if (rep.seed) j["seed"] = *rep.seed;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

Json separation_to_json(const SeparationResult& r) {
  Json j;
  j["family"] = std::string(to_string(r.family));
  j["found"] = r.found;
  j["violation"] = rational_to_json(r.violation);
  j["params"] = r.params ? cut_params_to_json(*r.params) : Json();
  return j;
}

Json cut_loop_to_json(const CutLoopReport& rep, int T) {
  Json j;
  Json its = Json::array();
  for (const auto& it : rep.iterations) {
    Json ij;
    ij["objective"] = rational_to_json(it.objective);
    Json added = Json::array();
    for (const auto& p : it.added) added.push_back(to_string(p));
    ij["cuts"] = std::move(added);
    its.push_back(std::move(ij));
  }
  j["iterations"] = std::move(its);
  j["status"] = std::string(to_string(rep.status));
  j["final_objective"] = rational_to_json(rep.final_objective);
  j["oracle_objective"] = rational_to_json(rep.oracle_objective);
  j["gap"] = rational_to_json(rep.gap);
  j["final_integral"] = rep.final_integral;
  j["final_solution"] = point_to_json(rep.final_solution, T);
  Json invalid = Json::array();
  for (const auto& p : rep.invalid_cuts) invalid.push_back(to_string(p));
  j["invalid_cuts"] = std::move(invalid);
  return j;
}

Json pattern_to_json(const BinaryPattern& p) {
  Json j;
  j["y"] = p.y;
  j["u"] = p.u;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace ucpoly
