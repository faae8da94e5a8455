#ifndef UCPOLY_SEPARATION_HPP
#define UCPOLY_SEPARATION_HPP

#include "ucpoly/cuts.hpp"
#include "ucpoly/formulation.hpp"
#include "ucpoly/model.hpp"

#include <optional>
#include <vector>

namespace ucpoly {

/// Most violated member found for one family (or one (t, m) slice of it).
/// violation = lhs - rhs of the generated row at the query point; found is
/// violation > 0. When nothing is admissible, params is unset and found is
/// false.
struct SeparationResult {
  Family family = Family::F2;
  std::optional<CutParams> params;
  Rational violation;
  bool found = false;
};

/// Exact maximum over S for a fixed (t, m) of a chain family (F7, F8, F9),
/// by a longest-chain recursion over the telescoping neighbour structure.
/// nullopt when (t, m) is not admissible or the member leaves the horizon.
std::optional<SeparationResult> separate_chain_slice(const UCInstance& inst, Family family, int t,
                                                     int m, const Point& point,
                                                     Reading reading = Reading::Literal);

/// Exact maximum over every (t, m, S) of a chain family.
SeparationResult separate_chain_family(const UCInstance& inst, Family family, const Point& point,
                                       Reading reading = Reading::Literal);

/// Exact maximum by enumeration for F2, F5, F6U, F6D and F10. Throws
/// CutParamError when the family does not apply to the regime.
SeparationResult separate_finite_family(const UCInstance& inst, Family family, const Point& point,
                                        Reading reading = Reading::Literal);

/// Dispatches to the chain or finite separator.
SeparationResult separate_family(const UCInstance& inst, Family family, const Point& point,
                                 Reading reading = Reading::Literal);

/// Every violated candidate of a family: the best member of each (t, m)
/// slice for chain families, every violated member otherwise. Sorted like
/// separate_all.
std::vector<SeparationResult> violated_members(const UCInstance& inst, Family family,
                                               const Point& point, Reading reading = Reading::Literal);

/// Families separated for a variant when none are given: P_UP F7, F9;
/// P_DOWN F8, F10; P_FULL F2 in regime K1, F5, F6U, F6D in regime K2 and
/// F7, F9, F8, F10 otherwise.
std::vector<Family> default_families(const UCInstance& inst, Variant variant);

/// Best violated member of each family (families not applying to the
/// regime are skipped), sorted by violation descending, then family, then
/// parameters.
std::vector<SeparationResult> separate_all(const UCInstance& inst, Variant variant,
                                           const Point& point, Reading reading = Reading::Literal);
std::vector<SeparationResult> separate_all(const UCInstance& inst, const std::vector<Family>& families,
                                           const Point& point, Reading reading = Reading::Literal);

/// Sort order used by every separator.
bool separation_order(const SeparationResult& a, const SeparationResult& b);

}  // namespace ucpoly

#endif  // UCPOLY_SEPARATION_HPP
