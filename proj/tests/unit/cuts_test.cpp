#include "ucpoly/cuts.hpp"
#include "ucpoly/oracle.hpp"
#include "ucpoly/verify.hpp"

#include "sampling.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace ucpoly;

namespace {

Rational q(int n, int d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string row_text(const UCInstance& inst, const CutParams& p, Reading reading = Reading::Literal) {
  return format_row(generate(inst, p, reading), VariableSpace(inst.T));
}

const UCInstance k1_t3 = make_instance(3, 1, 1, 1, 3, 2, 2);
const UCInstance k2_t4 = make_instance(4, 1, 1, 1, 3, 1, 1);
const UCInstance gen_t3 = make_instance(3, 1, 1, 1, 3, q(3, 2), 1);
const UCInstance gen_t5 = make_instance(5, 1, 1, 1, 3, q(3, 2), 1);

}  // namespace

TEST(Names, FamiliesAndReadings) {
  for (Family f : kAllFamilies) EXPECT_EQ(parse_family(to_string(f)), f);
  EXPECT_EQ(parse_family_list("F7,F9"), (std::vector<Family>{Family::F7, Family::F9}));
  EXPECT_TRUE(parse_family_list("").empty());
  EXPECT_THROW(parse_family("F11"), InputError);
  EXPECT_EQ(parse_reading("amended"), Reading::Amended);
  EXPECT_EQ(to_string(Reading::Literal), "literal");
  EXPECT_THROW(parse_reading("loose"), InputError);
  EXPECT_EQ(to_string(CutParams{Family::F7, 4, 2, {3}}), "F7[t=4,m=2,S={3}]");
  EXPECT_EQ(to_string(CutParams{Family::F2, 2, 0, {}}), "F2[t=2]");
  EXPECT_EQ(to_string(CutParams{Family::F10, 1, 1, {}}), "F10[t=1,m=1]");
}

TEST(ChainMap, Neighbours) {
  const ChainMap back{2, {3, 5}, ChainDirection::Backward};
  EXPECT_EQ(back.neighbor(3), 2);
  EXPECT_EQ(back.neighbor(5), 3);
  EXPECT_EQ(back.neighbor(6), 5);
  const ChainMap fwd{7, {3, 5}, ChainDirection::Forward};
  EXPECT_EQ(fwd.neighbor(3), 5);
  EXPECT_EQ(fwd.neighbor(5), 7);
}

TEST(ChainMap, Telescopes) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 200; ++k) {
    const int anchor = 1 + static_cast<int>(rng() % 4);
    const int last = anchor + 1 + static_cast<int>(rng() % 6);
    std::vector<int> members;
    for (int i = anchor + 1; i < last; ++i) {
      if (rng() % 2) members.push_back(i);
    }
    members.push_back(last);
    const ChainMap back{anchor, members, ChainDirection::Backward};
    int sum = 0;
    for (int i : members) sum += i - back.neighbor(i);
    EXPECT_EQ(sum, last - anchor);

    // Mirror image for the forward direction: anchor above the chain.
    std::vector<int> mirrored;
    for (int i : members) mirrored.push_back(2 * last - i);
    std::sort(mirrored.begin(), mirrored.end());
    const int top = 2 * last - anchor;
    const ChainMap fwd{top, mirrored, ChainDirection::Forward};
    sum = 0;
    for (int i : mirrored) sum += fwd.neighbor(i) - i;
    EXPECT_EQ(sum, top - mirrored.front());
  }
}

TEST(F2, Examples) {
  EXPECT_EQ(format_row(gen_F2(k1_t3, 3), VariableSpace(3)), "F2[t=3]: +1*x3 -3*y3 +1*u3 <= 0");
  EXPECT_EQ(format_row(gen_F2(k1_t3, 1), VariableSpace(3)), "F2[t=1]: +1*x1 -2*y1 -1*y2 +1*u2 <= 0");
  const VariableSpace sp(3);
  const auto p = make_point({3, 3, 3}, {1, 1, 1}, {0, 0});
  const auto ev = eval_inequality(gen_F2(k1_t3, 1), p, sp);
  EXPECT_TRUE(ev.tight);
}

TEST(F2, RegimeAndRange) {
  EXPECT_THROW(gen_F2(gen_t3, 1), CutParamError);
  EXPECT_THROW(gen_F2(k1_t3, 4), CutParamError);
  EXPECT_THROW(gen_F2(k1_t3, 2, {2}), CutParamError);  // needs the amended reading
}

TEST(F2, AmendedAddsTheSameStepMember) {
  // x_t <= Cmax y_t - (Cmax - Vbar) u_t for 2 <= t < T, only when L = 1.
  EXPECT_EQ(format_row(gen_F2(k1_t3, 2, {2}, Reading::Amended), VariableSpace(3)),
            "F2[t=2,S={2}]: +1*x2 -3*y2 +1*u2 <= 0");
  EXPECT_EQ(enumerate_params(k1_t3, Family::F2, Reading::Amended).size(), 4u);
  const auto l2 = make_instance(4, 2, 1, 1, 3, 2, 2);
  EXPECT_EQ(enumerate_params(l2, Family::F2, Reading::Amended).size(), 4u);
  EXPECT_THROW(gen_F2(l2, 2, {2}, Reading::Amended), CutParamError);
  EXPECT_THROW(gen_F2(k1_t3, 1, {1}, Reading::Amended), CutParamError);
}

TEST(F5, Examples) {
  // The u-sum of the i = 3 term stops at j = min{L-1, i-2} = 0.
  EXPECT_EQ(row_text(k2_t4, {Family::F5, 1, 0, {}}), "F5[t=1,S={}]: +1*x1 -1*y1 -2*y2 +2*u2 <= 0");
  EXPECT_EQ(row_text(k2_t4, {Family::F5, 1, 0, {3}}),
            "F5[t=1,S={3}]: +1*x1 -1*y1 -1*y2 -1*y3 +1*u2 +1*u3 <= 0");
  EXPECT_THROW(gen_F5(k2_t4, 1, {4}), CutParamError);
  EXPECT_THROW(gen_F5(k1_t3, 1, {}), CutParamError);
}

TEST(F5, AtMostTwoMembersPerPeriod) {
  const auto listing = enumerate_family(k2_t4, Family::F5);
  std::map<int, int> per_t;
  for (const auto& m : listing.members) ++per_t[m.params.t];
  for (const auto& [t, n] : per_t) EXPECT_LE(n, 2) << t;
  // At t >= T-1 both choices of S give the same row; both tags are kept.
  const auto it = std::find_if(listing.members.begin(), listing.members.end(),
                               [](const auto& m) { return m.params.t == 4; });
  ASSERT_NE(it, listing.members.end());
  EXPECT_EQ(it->duplicates.size(), 1u);
}

TEST(F5, AmendedAnchorAtHorizon) {
  // Literal anchor t+3 at t = T gives coefficient 3V on y_T; amended T+2 gives 2V.
  EXPECT_EQ(row_text(k2_t4, {Family::F5, 4, 0, {}}), "F5[t=4,S={}]: +1*x4 -4*y4 +3*u4 <= 0");
  EXPECT_EQ(row_text(k2_t4, {Family::F5, 4, 0, {}}, Reading::Amended),
            "F5[t=4,S={}]: +1*x4 -3*y4 +2*u4 <= 0");
  EXPECT_EQ(row_text(k2_t4, {Family::F5, 2, 0, {}}, Reading::Amended),
            row_text(k2_t4, {Family::F5, 2, 0, {}}));
}

TEST(F6, Examples) {
  EXPECT_EQ(format_row(gen_F6D(k2_t4, 1), VariableSpace(4)), "F6D[t=1]: +1*x1 -1*x2 -1*y1 <= 0");
  EXPECT_EQ(format_row(gen_F6U(k2_t4, 2), VariableSpace(4)),
            "F6U[t=2]: -1*x2 +1*x3 +1*y2 -1*y3 -1*y4 +1*u4 <= 0");
  EXPECT_THROW(gen_F6U(k2_t4, 4), CutParamError);
  EXPECT_THROW(gen_F6D(k2_t4, 0), CutParamError);
}

TEST(F6, AmendedDownwardSumReachesUtPlusOne) {
  EXPECT_EQ(format_row(gen_F6D(k2_t4, 1, Reading::Amended), VariableSpace(4)),
            "F6D[t=1]: +1*x1 -1*x2 -1*y1 +1*u2 <= 0");
}

TEST(F6, ValidOnTheOracle) {
  const auto ext = extreme_points(k2_t4, Variant::Full);
  for (Family f : {Family::F5, Family::F6U, Family::F6D}) {
    for (const auto& m : enumerate_family(k2_t4, f).members) {
      EXPECT_TRUE(check_validity(m.row, k2_t4, Variant::Full, ext).confirmed()) << m.row.tag;
    }
  }
}

TEST(F7, DegenerateMember) {
  // m = 0, L = 1, t = 1: the u-sums are empty and the row is x1 <= Cmax y1.
  EXPECT_EQ(row_text(gen_t3, {Family::F7, 1, 0, {}}), "F7[t=1,m=0,S={}]: +1*x1 -3*y1 <= 0");
}

TEST(F7, MRangeIsFloored) {
  // min{[t-L-1]+, floor((Cmax-Vbar)/V), [floor((Cmax-Cmin)/V) - L]+} = min{2, 1, 1}.
  EXPECT_EQ(m_range(gen_t5, Family::F7, 4), std::make_pair(0, 1));
  EXPECT_THROW(gen_F7(gen_t5, 4, 2, {3}), CutParamError);
  EXPECT_EQ(enumerate_family(gen_t5, Family::F7).members.size(), 8u);
}

TEST(F7, ChainMember) {
  // (Cmax - Cmin)/V = 3 admits m = 2. Chain 2 -> 3 -> 4 with unit gaps and
  // end coefficient Cmax - Vbar - (m+L-1)V = 4 - 3/2 - 2 = 1/2.
  const auto inst = make_instance(5, 1, 1, 1, 4, q(3, 2), 1);
  EXPECT_EQ(row_text(inst, {Family::F7, 4, 2, {3}}),
            "F7[t=4,m=2,S={3}]: +1*x4 -1/2*y2 -1*y3 -5/2*y4 +1/2*u2 +1*u3 +1*u4 <= 0");
  EXPECT_EQ(row_text(inst, {Family::F7, 4, 2, {}}),
            "F7[t=4,m=2,S={}]: +1*x4 -1/2*y2 -7/2*y4 +1/2*u2 +2*u4 <= 0");
  EXPECT_THROW(gen_F7(inst, 4, 2, {2}), CutParamError);
  const auto ext = extreme_points(inst, Variant::Up);
  EXPECT_TRUE(check_facet(gen_F7(inst, 4, 2, {3}), inst, Variant::Up, ext).confirmed());
}

TEST(F7, EndCoefficientMayBeNegative) {
  // Cmax - Vbar < (L-1)V: the end term is produced exactly as written.
  const auto inst = make_instance(5, 3, 1, 0, q(3, 2), q(1, 3), 1);
  const auto row = gen_F7(inst, 5, 0, {});
  const VariableSpace sp(5);
  // (L-1)V + (Cmax - Vbar - (L-1)V) + Vbar = Cmax on y_t.
  EXPECT_EQ(row.coeff(sp.y(5)), -inst.Cmax);
  EXPECT_LT(inst.Cmax - inst.Vbar - 2 * inst.V, 0);
}

TEST(F7, AmendedCapMatchesLiteralForIntegralRatio) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 30; ++k) {
    const auto inst = ucpoly::testing::random_instance(rng, ucpoly::testing::Draw::General, 3, 6);
    const Rational ratio = (inst.Cmax - inst.Cmin) / inst.V;
    const bool integral = ratio.get_den() == 1;
    if (!integral) continue;
    EXPECT_EQ(enumerate_params(inst, Family::F7, Reading::Amended), enumerate_params(inst, Family::F7));
    for (const auto& p : enumerate_params(inst, Family::F7)) {
      EXPECT_EQ(row_text(inst, p, Reading::Amended), row_text(inst, p));
    }
  }
}

TEST(F8, Example) {
  EXPECT_EQ(row_text(gen_t5, {Family::F8, 2, 1, {}}),
            "F8[t=2,m=1,S={}]: +1*x2 -3/2*y2 -1*y3 -1/2*y4 +1*u3 +1/2*u4 <= 0");
}

TEST(F8, LastPeriodUsesTheHorizonConvention) {
  // y_{T+1} = y_T, u_{T+1} = 0: x_T <= Vbar y_T + (Cmax - Vbar) y_T.
  EXPECT_EQ(row_text(gen_t5, {Family::F8, 5, 0, {}}), "F8[t=5,m=0,S={}]: +1*x5 -3*y5 <= 0");
}

TEST(F8, NoMemberReachesPastTheConvention) {
  // m <= [T-t-1]+ keeps t+m+1 <= T+1, and the t+L term vanishes when m < L.
  std::mt19937_64 rng(12);
  for (int k = 0; k < 40; ++k) {
    const auto inst = ucpoly::testing::random_instance(rng, ucpoly::testing::Draw::Wide, 2, 7);
    EXPECT_TRUE(enumerate_family(inst, Family::F8).skipped.empty()) << describe(inst);
  }
  const auto inst = make_instance(5, 3, 1, 0, 3, q(1, 2), 1);
  EXPECT_THROW(gen_F8(inst, 4, 1, {}), CutParamError);
}

TEST(F9, Example) {
  EXPECT_EQ(row_text(gen_t3, {Family::F9, 2, 1, {}}),
            "F9[t=2,m=1,S={}]: -1*x1 +1*x2 +1*y1 -2*y2 +1/2*u2 <= 0");
}

TEST(F10, Example) {
  EXPECT_EQ(row_text(gen_t3, {Family::F10, 1, 1, {}}),
            "F10[t=1,m=1]: +1*x1 -1*x2 -3/2*y1 +1/2*y2 +1/2*u2 <= 0");
}

TEST(F10, LiteralEnumeratesTMOnly) {
  const auto inst = make_instance(5, 1, 1, 0, 3, q(1, 2), 1);
  for (const auto& p : enumerate_params(inst, Family::F10)) EXPECT_TRUE(p.S.empty());
  EXPECT_THROW(gen_F10(inst, 1, 2, {3}), CutParamError);
  EXPECT_GT(enumerate_params(inst, Family::F10, Reading::Amended).size(),
            enumerate_params(inst, Family::F10).size());
}

TEST(F10, ReadingsAgreeWhenTheWindowIsOneChainLong) {
  const auto inst = make_instance(5, 1, 1, 0, 3, q(1, 2), 1);
  // m = L: both chains reduce to the anchor t+m and q = t+L.
  const auto amended = gen_F10(inst, 1, 1, {}, Reading::Amended);
  const auto literal = gen_F10(inst, 1, 1);
  EXPECT_EQ(amended.coeffs, literal.coeffs);
  EXPECT_EQ(amended.rhs, literal.rhs);
}

TEST(GeneratedRows, StayInsideTheVariableSpace) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 20; ++k) {
    const auto inst = ucpoly::testing::random_instance(rng, ucpoly::testing::Draw::Wide, 3, 6);
    for (Reading r : {Reading::Literal, Reading::Amended}) {
      for (Family f : {Family::F7, Family::F8, Family::F9, Family::F10}) {
        for (const auto& m : enumerate_family(inst, f, r).members) {
          for (const auto& [var, c] : m.row.coeffs) {
            EXPECT_GE(var, 0);
            EXPECT_LT(var, VariableSpace(inst.T).size());
            EXPECT_NE(c, 0);
          }
        }
      }
    }
  }
}

TEST(Dedup, NormalizedKeyIgnoresScaling) {
  LinearInequality a, b;
  a.add(0, 2);
  a.add(3, -4);
  a.rhs = 6;
  b.add(0, 1);
  b.add(3, -2);
  b.rhs = 3;
  EXPECT_EQ(normalized_key(a), normalized_key(b));
  b.rhs = 4;
  EXPECT_NE(normalized_key(a), normalized_key(b));
}

TEST(Hull, K1Assembly) {
  const auto sys = assemble_hull(k1_t3, HullKind::K1);
  const auto n = std::count_if(sys.rows.begin(), sys.rows.end(),
                               [](const auto& r) { return r.tag.starts_with("F2"); });
  EXPECT_EQ(n, 3);
  EXPECT_EQ(sys.find("1e[t=1]"), nullptr);
  EXPECT_NE(sys.find("1d[t=1]"), nullptr);
  EXPECT_THROW(assemble_hull(gen_t3, HullKind::K1), CutParamError);
  EXPECT_THROW(assemble_hull(k1_t3, HullKind::K2), CutParamError);
}

TEST(Hull, UpAssemblyHoldsEveryMember) {
  const auto sys = assemble_hull(gen_t3, HullKind::Up);
  std::set<std::string> keys;
  for (const auto& r : sys.rows) keys.insert(normalized_key(r));
  for (Family f : {Family::F7, Family::F9}) {
    for (const auto& m : enumerate_family(gen_t3, f).members) EXPECT_TRUE(keys.count(normalized_key(m.row)));
  }
}

TEST(Hull, OmitDropsAFamily) {
  const auto sys = assemble_hull(gen_t3, HullKind::Down, {{Family::F10}});
  for (const auto& r : sys.rows) EXPECT_EQ(r.tag.find("F10"), std::string::npos) << r.tag;
}
