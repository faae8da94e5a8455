#ifndef UCPOLY_IO_HPP
#define UCPOLY_IO_HPP

#include "ucpoly/cutloop.hpp"
#include "ucpoly/model.hpp"
#include "ucpoly/oracle.hpp"
#include "ucpoly/separation.hpp"
#include "ucpoly/verify.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <string_view>

namespace ucpoly {

using Json = nlohmann::ordered_json;

/// Rationals are written as JSON integers when integral, "p/q" otherwise.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, std::string_view what);

/// Point document {"x": [...], "y": [...], "u": [...]}, u holding u_2..u_T.
Json point_to_json(const Point& p, int T);
Point point_from_json(const Json& j, int T);
Point load_point(std::string_view text, int T);

/// Objective documents share the point layout: one coefficient per
/// variable.
std::map<int, Rational> objective_from_json(const Json& j, int T);
std::map<int, Rational> load_objective(std::string_view text, int T);

Json cut_params_to_json(const CutParams& p);
Json report_to_json(const VerificationReport& rep, int T);
Json separation_to_json(const SeparationResult& r);
Json cut_loop_to_json(const CutLoopReport& rep, int T);
Json pattern_to_json(const BinaryPattern& p);

/// Reads a whole file; throws InputError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace ucpoly

#endif  // UCPOLY_IO_HPP
