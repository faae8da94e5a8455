#include "ucpoly/cuts.hpp"
#include "ucpoly/oracle.hpp"
#include "ucpoly/polycore.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace ucpoly;

namespace {

HRep box(int dim) {
  HRep h;
  h.dim = dim;
  for (int k = 0; k < dim; ++k) {
    Vector lo(dim), hi(dim);
    lo[k] = -1;
    hi[k] = 1;
    h.A.push_back(lo);
    h.b.push_back(0);
    h.A.push_back(hi);
    h.b.push_back(1);
  }
  return h;
}

HRep simplex(int dim) {
  HRep h;
  h.dim = dim;
  Vector sum(dim, Rational(1));
  for (int k = 0; k < dim; ++k) {
    Vector lo(dim);
    lo[k] = -1;
    h.A.push_back(lo);
    h.b.push_back(0);
  }
  h.A.push_back(sum);
  h.b.push_back(1);
  return h;
}

Point pt(std::initializer_list<int> v) {
  Point p;
  for (int x : v) p.values.emplace_back(x);
  return p;
}

Rational dot(const Vector& a, const Point& p) {
  Rational s;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * p[k];
  return s;
}

// Random bounded system: the box [0, 3]^dim cut by a few random rows.
HRep random_polytope(std::mt19937_64& rng, int dim, int extra) {
  HRep h = box(dim);
  for (auto& b : h.b) b *= 3;
  std::uniform_int_distribution<int> c(-3, 3), r(2, 8);
  for (int k = 0; k < extra; ++k) {
    Vector a(dim);
    for (auto& x : a) x = c(rng);
    h.A.push_back(a);
    h.b.push_back(r(rng));
  }
  return h;
}

}  // namespace

TEST(DD, UnitCube) {
  const auto vs = dd_enumerate(box(3));
  ASSERT_EQ(vs.status, VertexSet::Status::Ok);
  EXPECT_EQ(vs.points.size(), 8u);
  EXPECT_TRUE(vs.rays.empty());
  EXPECT_TRUE(std::is_sorted(vs.points.begin(), vs.points.end()));
}

TEST(DD, Simplex) {
  const auto vs = dd_enumerate(simplex(3));
  ASSERT_EQ(vs.status, VertexSet::Status::Ok);
  EXPECT_EQ(std::set<Point>(vs.points.begin(), vs.points.end()),
            (std::set<Point>{pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}));
}

TEST(DD, EmptyAndUnbounded) {
  HRep h;
  h.dim = 1;
  h.A = {{Rational(1)}, {Rational(-1)}};
  h.b = {0, -1};
  EXPECT_EQ(dd_enumerate(h).status, VertexSet::Status::Empty);

  HRep open = simplex(2);
  open.A.pop_back();
  open.b.pop_back();
  const auto vs = dd_enumerate(open);
  EXPECT_EQ(vs.status, VertexSet::Status::Unbounded);
  EXPECT_EQ(vs.rays.size(), 2u);
}

TEST(DD, EveryVertexIsBasic) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) {
    const auto h = random_polytope(rng, 4, 4);
    const auto vs = dd_enumerate(h);
    for (const auto& v : vs.points) {
      Matrix tight;
      for (std::size_t r = 0; r < h.A.size(); ++r) {
        const Rational lhs = dot(h.A[r], v);
        ASSERT_LE(lhs, h.b[r]);
        if (lhs == h.b[r]) tight.push_back(h.A[r]);
      }
      EXPECT_EQ(matrix_rank(tight), h.dim);
    }
  }
}

TEST(DD, InvariantUnderRowPermutation) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    auto h = random_polytope(rng, 4, 5);
    const auto a = dd_enumerate(h).points;
    std::vector<std::size_t> order(h.A.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    HRep p;
    p.dim = h.dim;
    for (auto i : order) {
      p.A.push_back(h.A[i]);
      p.b.push_back(h.b[i]);
    }
    EXPECT_EQ(dd_enumerate(p).points, a);
  }
}

TEST(DD, AgreesWithLPOnRandomObjectives) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int k = 0; k < 20; ++k) {
    const auto h = random_polytope(rng, 4, 4);
    const auto vs = dd_enumerate(h);
    for (int trial = 0; trial < 5; ++trial) {
      Vector obj(h.dim);
      for (auto& x : obj) x = c(rng);
      Rational best = dot(obj, vs.points.front());
      for (const auto& v : vs.points) best = std::max(best, dot(obj, v));
      const auto lp = lp_solve(h, obj, Optimize::Max);
      ASSERT_EQ(lp.status, LPStatus::Optimal);
      EXPECT_EQ(lp.objective, best);
    }
  }
}

TEST(Rank, AffineExamples) {
  EXPECT_EQ(affine_rank(std::vector<Point>{pt({1, 2})}), 0);
  EXPECT_EQ(affine_rank(std::vector<Point>{pt({0, 0}), pt({1, 1}), pt({2, 2})}), 1);
  EXPECT_EQ(affine_rank(std::vector<Point>{pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}),
            3);
  EXPECT_THROW(affine_rank(std::vector<Point>{}), std::invalid_argument);
}

TEST(Rank, AffineCombinationDoesNotRaiseRank) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int k = 0; k < 20; ++k) {
    std::vector<Point> pts;
    for (int i = 0; i < 3; ++i) pts.push_back(pt({c(rng), c(rng), c(rng), c(rng), c(rng)}));
    const int before = affine_rank(pts);
    Point comb(5);
    const Rational w[] = {Rational(2), Rational(-3), Rational(2)};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 5; ++j) comb[j] += w[i] * pts[i][j];
    }
    pts.push_back(comb);
    EXPECT_EQ(affine_rank(pts), before);
  }
}

TEST(Rank, FullDimensionalK1Polytope) {
  const auto inst = make_instance(3, 1, 1, 1, 3, 2, 2);
  EXPECT_EQ(affine_rank(extreme_points(inst, Variant::Full)), 8);
}

TEST(LP, MaxOverCube) {
  const auto lp = lp_solve(box(3), Vector{1, 0, 0}, Optimize::Max);
  ASSERT_EQ(lp.status, LPStatus::Optimal);
  EXPECT_EQ(lp.objective, 1);
  const auto mn = lp_solve(box(3), Vector{1, 1, 0}, Optimize::Min);
  EXPECT_EQ(mn.objective, 0);
}

TEST(LP, OptimalCertificateIsDualFeasible) {
  const auto h = box(3);
  const Vector c{2, -1, 3};
  const auto lp = lp_solve(h, c, Optimize::Max);
  ASSERT_EQ(lp.status, LPStatus::Optimal);
  ASSERT_EQ(lp.certificate.size(), h.A.size());
  Rational by;
  for (int j = 0; j < h.dim; ++j) {
    Rational s;
    for (std::size_t r = 0; r < h.A.size(); ++r) s += h.A[r][j] * lp.certificate[r];
    EXPECT_EQ(s, c[j]);
  }
  for (std::size_t r = 0; r < h.A.size(); ++r) {
    EXPECT_GE(lp.certificate[r], 0);
    by += h.b[r] * lp.certificate[r];
  }
  EXPECT_EQ(by, lp.objective);
}

TEST(LP, InfeasibleWithFarkasCertificate) {
  HRep h;
  h.dim = 1;
  h.A = {{Rational(1)}, {Rational(-1)}};
  h.b = {0, -1};
  const auto lp = lp_solve(h, Vector{1}, Optimize::Max);
  ASSERT_EQ(lp.status, LPStatus::Infeasible);
  ASSERT_EQ(lp.certificate.size(), 2u);
  EXPECT_EQ(lp.certificate[0] - lp.certificate[1], 0);
  EXPECT_LT(h.b[0] * lp.certificate[0] + h.b[1] * lp.certificate[1], 0);
}

TEST(LP, UnboundedWithRay) {
  HRep h = simplex(2);
  h.A.pop_back();
  h.b.pop_back();
  const auto lp = lp_solve(h, Vector{1, 1}, Optimize::Max);
  ASSERT_EQ(lp.status, LPStatus::Unbounded);
  ASSERT_EQ(lp.certificate.size(), 2u);
  EXPECT_GT(lp.certificate[0] + lp.certificate[1], 0);
  for (const auto& row : h.A) EXPECT_LE(row[0] * lp.certificate[0] + row[1] * lp.certificate[1], 0);
}

TEST(LP, MaxTotalOutputOnK1) {
  const auto inst = make_instance(3, 1, 1, 1, 3, 2, 2);
  const auto sys = assemble_hull(inst, HullKind::K1);
  const VariableSpace sp(3);
  std::map<int, Rational> obj{{sp.x(1), 1}, {sp.x(2), 1}, {sp.x(3), 1}};
  const auto lp = lp_solve(sys, obj, Optimize::Max);
  ASSERT_EQ(lp.status, LPStatus::Optimal);
  EXPECT_EQ(lp.objective, 9);
  EXPECT_TRUE(has_binary_yu(lp.solution, sp));
  EXPECT_EQ(oracle_optimize(inst, Variant::Full, obj).objective, 9);
}

TEST(Membership, MidpointAndOutside) {
  const std::vector<Point> gens{pt({0, 0}), pt({2, 2})};
  EXPECT_TRUE(in_convex_hull(pt({1, 1}), gens).inside);
  const auto out = in_convex_hull(pt({3, 3}), gens);
  ASSERT_FALSE(out.inside);
  EXPECT_GT(dot(out.separator, pt({3, 3})), out.beta);
  for (const auto& g : gens) EXPECT_LE(dot(out.separator, g), out.beta);
  EXPECT_THROW(in_convex_hull(pt({0}), std::vector<Point>{}), std::invalid_argument);
}

TEST(Membership, FilterDropsExactlyTheNonExtremeCandidates) {
  const auto inst = make_instance(3, 1, 2, 1, 4, Rational(3, 2), 1);
  auto cands = candidate_points(inst, Variant::Up);
  // A fiber vertex has binary (y,u), so it can only be combined from points
  // of its own fiber: every candidate is extreme.
  EXPECT_EQ(extreme_points(cands).size(), cands.points.size());

  // Midpoints of two vertices of one fiber are not.
  const std::size_t n = cands.points.size();
  std::vector<Point> mids;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (cands.provenance[i].first != cands.provenance[i + 1].first) continue;
    Point m(cands.points[i].size());
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = (cands.points[i][k] + cands.points[i + 1][k]) / 2;
    mids.push_back(m);
    cands.points.push_back(m);
    cands.provenance.push_back({cands.provenance[i].first, 1000 + i});
  }
  ASSERT_FALSE(mids.empty());
  const auto ext = extreme_points(cands);
  EXPECT_EQ(ext.size(), n);
  for (const auto& m : mids) {
    EXPECT_EQ(std::find(ext.begin(), ext.end(), m), ext.end());
    EXPECT_TRUE(in_convex_hull(m, ext).inside);
  }
}

TEST(Redundancy, ReportsImpliedBounds) {
  const auto inst = make_instance(3, 1, 1, 1, 3, 2, 2);
  const auto red = redundant_rows(relax_integrality(build_base(inst, Variant::Full)));
  // u <= 1 follows from the minimum-up rows and y <= 1.
  EXPECT_NE(std::find(red.begin(), red.end(), "u2<=1"), red.end());
}
