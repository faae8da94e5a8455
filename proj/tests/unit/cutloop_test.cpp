#include "ucpoly/cutloop.hpp"
#include "ucpoly/verify.hpp"

#include "sampling.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ucpoly;

namespace {

Rational q(int n, int d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

CutLoopCaps amended_caps() {
  CutLoopCaps caps;
  caps.reading = Reading::Amended;
  return caps;
}

void expect_closed(const UCInstance& inst, Variant variant, const std::vector<Family>& families,
                   const CutLoopCaps& caps, int objectives, std::uint64_t seed) {
  const auto ext = extreme_points(inst, variant);
  std::mt19937_64 rng(seed);
  for (int k = 0; k < objectives; ++k) {
    const auto obj = random_objective(VariableSpace(inst.T).size(), rng);
    const auto rep = run_cut_loop(inst, variant, obj, families, ext, caps);
    EXPECT_EQ(rep.gap, 0) << describe(inst) << " objective " << k;
    EXPECT_EQ(rep.status, LoopStatus::IntegralOptimal);
    EXPECT_TRUE(rep.final_integral);
    EXPECT_TRUE(rep.invalid_cuts.empty());
    EXPECT_EQ(rep.final_objective, oracle_optimize(ext, obj).objective);
  }
}

}  // namespace

TEST(CutLoop, K1ClosesWithF2) {
  expect_closed(make_instance(4, 2, 2, 1, 3, 2, 2), Variant::Full, {Family::F2}, {}, 15, 1);
  expect_closed(make_instance(4, 1, 2, 1, 3, 2, 2), Variant::Full, {Family::F2}, amended_caps(), 15, 2);
}

TEST(CutLoop, UpAndDownClose) {
  const auto inst = make_instance(4, 1, 2, 1, 3, q(3, 2), 1);
  expect_closed(inst, Variant::Up, {Family::F7, Family::F9}, amended_caps(), 15, 3);
  expect_closed(inst, Variant::Down, {Family::F8, Family::F10}, amended_caps(), 15, 4);
}

TEST(CutLoop, ObjectiveNeverIncreases) {
  const auto inst = make_instance(4, 2, 1, 1, 4, q(3, 2), 1);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 5; ++k) {
    const auto obj = random_objective(VariableSpace(4).size(), rng);
    const auto rep = run_cut_loop(inst, Variant::Up, obj, {Family::F7, Family::F9}, amended_caps());
    ASSERT_FALSE(rep.iterations.empty());
    for (std::size_t i = 1; i < rep.iterations.size(); ++i) {
      EXPECT_LE(rep.iterations[i].objective, rep.iterations[i - 1].objective);
    }
    EXPECT_LE(rep.final_objective, rep.iterations.front().objective);
    EXPECT_GE(rep.gap, 0);
    EXPECT_EQ(rep.gap, rep.final_objective - rep.oracle_objective);
  }
}

TEST(CutLoop, NoFamiliesAddsNoCuts) {
  const auto inst = make_instance(4, 1, 1, 1, 4, q(3, 2), 1);
  std::map<int, Rational> obj;
  const VariableSpace sp(4);
  for (int t = 1; t <= 4; ++t) {
    obj[sp.x(t)] = 1;
    obj[sp.y(t)] = -1;
  }
  const auto rep = run_cut_loop(inst, Variant::Full, obj, {});
  for (const auto& it : rep.iterations) EXPECT_TRUE(it.added.empty());
  EXPECT_GE(rep.gap, 0);
  EXPECT_TRUE(rep.invalid_cuts.empty());
}

TEST(CutLoop, CapsAreHonoured) {
  const auto inst = make_instance(4, 1, 1, 1, 4, q(3, 2), 1);
  CutLoopCaps caps;
  caps.max_iterations = 1;
  caps.cuts_per_iteration = 1;
  std::mt19937_64 rng(6);
  const auto obj = random_objective(VariableSpace(4).size(), rng);
  const auto rep = run_cut_loop(inst, Variant::Full, obj, default_families(inst, Variant::Full), caps);
  EXPECT_LE(rep.iterations.size(), 2u);
  for (const auto& it : rep.iterations) EXPECT_LE(it.added.size(), 1u);
}

TEST(GapProfile, OneRowPerObjective) {
  const auto inst = make_instance(4, 1, 2, 1, 3, q(3, 2), 1);
  EXPECT_TRUE(gap_profile(inst, Variant::Up, {}).empty());
  std::mt19937_64 rng(7);
  std::vector<std::map<int, Rational>> objs;
  for (int k = 0; k < 4; ++k) objs.push_back(random_objective(VariableSpace(4).size(), rng));
  const auto rows = gap_profile(inst, Variant::Up, objs, std::nullopt, amended_caps());
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) {
    EXPECT_GE(r.base_gap, r.final_gap);
    EXPECT_EQ(r.final_gap, 0);
    for (const auto& [f, n] : r.cuts) EXPECT_TRUE(f == Family::F7 || f == Family::F9);
  }
}

TEST(Names, LoopStatus) {
  EXPECT_EQ(to_string(LoopStatus::IntegralOptimal), "integral-optimal");
  EXPECT_EQ(to_string(LoopStatus::Stalled), "stalled");
  EXPECT_EQ(to_string(LoopStatus::IterationCap), "iteration-cap");
}
