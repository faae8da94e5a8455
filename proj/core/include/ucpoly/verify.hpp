#ifndef UCPOLY_VERIFY_HPP
#define UCPOLY_VERIFY_HPP

#include "ucpoly/cuts.hpp"
#include "ucpoly/formulation.hpp"
#include "ucpoly/model.hpp"
#include "ucpoly/oracle.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace ucpoly {

enum class ClaimStatus { Confirmed, Refuted, Skipped };
std::string_view to_string(ClaimStatus status);

struct Witness {
  /// "violating-point", "fractional-vertex", "infeasible-vertex",
  /// "rank-deficient", "objective-gap", "unbounded".
  std::string kind;
  std::optional<Point> point;
  std::string row;     // tag of the row involved, if any
  std::string detail;  // human-readable re-check data
};

struct VerificationReport {
  std::string claim;
  std::string instance;  // describe(inst)
  ClaimStatus status = ClaimStatus::Skipped;
  std::vector<Witness> witnesses;
  std::map<std::string, std::int64_t> counts;
  std::optional<std::uint64_t> seed;
  std::string note;

  bool confirmed() const noexcept { return status == ClaimStatus::Confirmed; }
  bool refuted() const noexcept { return status == ClaimStatus::Refuted; }
};

/// What a hull-equality check compares against the oracle.
enum class HullTarget { K1, K2, Up, Down, Base };
std::string_view to_string(HullTarget target);
/// Accepts q-k1, q-k2, q-up, q-down and base.
HullTarget parse_hull_target(std::string_view text);
Variant variant_of(HullTarget target);

struct VerifyOptions {
  OracleOptions oracle;
  /// Largest T for which the hull is enumerated by DD (0 keeps the
  /// defaults: 5 for q-up/q-down, 6 otherwise).
  int dd_max_T = 0;
  std::vector<Family> omit;  // families dropped from the assembly
  Reading reading = Reading::Literal;
  std::size_t max_witnesses = 5;
};

/// Validity: the row holds at every extreme point.
VerificationReport check_validity(const LinearInequality& ineq, const UCInstance& inst,
                                  Variant variant, std::span<const Point> extreme);
VerificationReport check_validity(const LinearInequality& ineq, const UCInstance& inst,
                                  Variant variant, const OracleOptions& options = {});

/// Facet: valid, and the tight extreme points have affine rank 3T-2.
VerificationReport check_facet(const LinearInequality& ineq, const UCInstance& inst,
                               Variant variant, std::span<const Point> extreme);
VerificationReport check_facet(const LinearInequality& ineq, const UCInstance& inst,
                               Variant variant, const OracleOptions& options = {});

/// The extreme points span an affine space of dimension 3T-1.
VerificationReport check_full_dimension(const UCInstance& inst, Variant variant,
                                        std::span<const Point> extreme);
VerificationReport check_full_dimension(const UCInstance& inst, Variant variant,
                                        const OracleOptions& options = {});

/// The system a hull target is checked with: assemble_hull for q-*, the
/// relaxation of build_base(P_FULL) for base.
InequalitySystem hull_system(const UCInstance& inst, HullTarget target,
                             const HullOptions& options = {});

/// (a) every extreme point satisfies every row of the system;
/// (b) every DD vertex of the system has binary (y,u) and is feasible for
/// the variant. Skipped when T exceeds the DD limit.
VerificationReport check_hull_equality(const UCInstance& inst, HullTarget target,
                                       std::span<const Point> extreme,
                                       const VerifyOptions& options = {});
VerificationReport check_hull_equality(const UCInstance& inst, HullTarget target,
                                       const VerifyOptions& options = {});

/// LP over the hull system against the oracle optimum for random integer
/// objectives with coefficients in [-10, 10].
VerificationReport random_objective_equivalence(const UCInstance& inst, HullTarget target,
                                                int trials, std::uint64_t seed,
                                                std::span<const Point> extreme,
                                                const VerifyOptions& options = {});
VerificationReport random_objective_equivalence(const UCInstance& inst, HullTarget target,
                                                int trials, std::uint64_t seed,
                                                const VerifyOptions& options = {});

/// Integer objective with coefficients drawn uniformly from [lo, hi].
std::map<int, Rational> random_objective(int dim, std::mt19937_64& rng, int lo = -10, int hi = 10);

inline constexpr std::uint64_t kDefaultSeed = 20240607;

}  // namespace ucpoly

#endif  // UCPOLY_VERIFY_HPP
