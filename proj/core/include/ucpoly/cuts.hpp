#ifndef UCPOLY_CUTS_HPP
#define UCPOLY_CUTS_HPP

#include "ucpoly/formulation.hpp"
#include "ucpoly/model.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ucpoly {

/// Strong valid inequality families, named after the equations that define
/// them: F2 (V = Cmax - Cmin), F5/F6U/F6D (Cmax = Cmin + 2V, Vbar = Cmin),
/// F7/F9 (ramp-up polytope) and F8/F10 (ramp-down polytope).
enum class Family { F2, F5, F6U, F6D, F7, F8, F9, F10 };

inline constexpr Family kAllFamilies[] = {Family::F2,  Family::F5, Family::F6U, Family::F6D,
                                          Family::F7,  Family::F8, Family::F9,  Family::F10};

std::string_view to_string(Family family);
Family parse_family(std::string_view text);
/// Parses a comma separated list such as "F7,F9". An empty string is an
/// empty list.
std::vector<Family> parse_family_list(std::string_view text);

/// The index data selecting one member of a family. S holds the free index
/// set: S for F5/F7/F8, S0 for F9, S for F10 and {t} for F2 under the
/// amended reading, and
/// nothing for the other families.
struct CutParams {
  Family family = Family::F2;
  int t = 0;
  int m = 0;
  std::vector<int> S;

  auto operator<=>(const CutParams&) const = default;
  bool operator==(const CutParams&) const = default;
};

std::string to_string(const CutParams& params);

/// How the generators read the few places where the written formulas were
/// found to be off. Literal follows the text. Amended
///  - adds, when L = 1, the F2 member with s = t for every 2 <= t < T,
///  - moves the F5 anchor at t = T to T+2,
///  - lets the F6D u-sum reach u_t (j2 = min{1, t-1, L-1}),
///  - caps the F7 u-sums at floor((Cmax - Vbar)/V) instead of kappa and its
///    m range at floor((Cmax - Vbar)/V) - L + 1 instead of floor((Cmax -
///    Cmin)/V) - L,
///  - frees the F10 index set: any S in [t+L+1, t+m], chain (S + {t+L})
///    minus {t+m} anchored at t+m, and the (Cmin + V - Vbar) term at
///    q = max(S + {t+L}), or at t+m when m < L.
enum class Reading { Literal, Amended };

std::string_view to_string(Reading reading);
Reading parse_reading(std::string_view text);

/// Thrown when parameters fall outside a family's admissible range or the
/// instance is in the wrong regime.
class CutParamError : public InputError {
 public:
  using InputError::InputError;
};

/// Thrown for admissible tuples whose member would reference a period past
/// the horizon convention (T+1 for F8, T for the others). Such members are
/// skipped by enumerate_family.
class HorizonError : public CutParamError {
 public:
  using CutParamError::CutParamError;
};

enum class ChainDirection { Backward, Forward };

/// Nearest chosen neighbour of each chain member, looking toward (backward)
/// or away from (forward) the anchor.
struct ChainMap {
  int anchor = 0;
  std::vector<int> members;  // sorted
  ChainDirection dir = ChainDirection::Backward;

  /// Backward: max{a in members + anchor : a < i}.
  /// Forward: min{a in members + anchor : a > i}.
  int neighbor(int i) const;
};

/// S = {t} (amended reading, L = 1, 2 <= t < T) selects the s = t member.
LinearInequality gen_F2(const UCInstance& inst, int t, const std::vector<int>& S = {},
                        Reading reading = Reading::Literal);
LinearInequality gen_F5(const UCInstance& inst, int t, const std::vector<int>& S,
                        Reading reading = Reading::Literal);
LinearInequality gen_F6U(const UCInstance& inst, int t);
LinearInequality gen_F6D(const UCInstance& inst, int t, Reading reading = Reading::Literal);
LinearInequality gen_F7(const UCInstance& inst, int t, int m, const std::vector<int>& S,
                        Reading reading = Reading::Literal);
LinearInequality gen_F8(const UCInstance& inst, int t, int m, const std::vector<int>& S);
LinearInequality gen_F9(const UCInstance& inst, int t, int m, const std::vector<int>& S0);
/// Literal: S must be empty; the chain runs over all of [t+L, t+m]. Amended:
/// S is any subset of [t+L+1, t+m] (see Reading).
LinearInequality gen_F10(const UCInstance& inst, int t, int m, const std::vector<int>& S = {},
                         Reading reading = Reading::Literal);

/// Dispatches on params.family.
LinearInequality generate(const UCInstance& inst, const CutParams& params,
                          Reading reading = Reading::Literal);

/// Inclusive integer interval of admissible m for a family at period t;
/// nullopt when there is none.
std::optional<std::pair<int, int>> m_range(const UCInstance& inst, Family family, int t,
                                           Reading reading = Reading::Literal);

/// Upper limit of the u-sums in F7 (and its separator): kappa when literal,
/// floor((Cmax - Vbar)/V) when amended.
int f7_sum_cap(const UCInstance& inst, Reading reading = Reading::Literal);

/// True when the family's validity claim covers the instance's regime.
bool family_applies(const UCInstance& inst, Family family);

/// Every admissible parameter tuple of a family in (t, m, S) order.
std::vector<CutParams> enumerate_params(const UCInstance& inst, Family family,
                                        Reading reading = Reading::Literal);

struct FamilyMember {
  CutParams params;
  std::vector<CutParams> duplicates;  // tuples that produced the same row
  LinearInequality row;
};

struct FamilyListing {
  std::vector<FamilyMember> members;
  std::vector<CutParams> skipped;  // tuples rejected by the horizon rule
};

/// All members of a family, deduplicated by normalized row. Throws
/// CutParamError when the family does not apply to the instance regime.
FamilyListing enumerate_family(const UCInstance& inst, Family family,
                              Reading reading = Reading::Literal);

enum class HullKind { K1, K2, Up, Down };
std::string_view to_string(HullKind kind);
/// Accepts q-k1, q-k2, q-up, q-down (and Q_K1 ... spellings).
HullKind parse_hull_kind(std::string_view text);
Variant variant_of(HullKind kind);
std::vector<Family> hull_families(HullKind kind);

struct HullOptions {
  std::vector<Family> omit;  // families left out (negative controls)
  Reading reading = Reading::Literal;
};

/// Minimum up/down rows, start-up logic, generation lower bound, u >= 0,
/// variable bounds, then every member of the hull's families. Identical
/// rows are merged and keep a "|"-joined tag.
InequalitySystem assemble_hull(const UCInstance& inst, HullKind kind,
                               const HullOptions& options = {});

/// Canonical key of a row up to positive scaling; used for deduplication.
std::string normalized_key(const LinearInequality& row);

}  // namespace ucpoly

#endif  // UCPOLY_CUTS_HPP
