// Double description method on the homogenized cone
//   { (z, lambda) : b lambda - A z >= 0, lambda >= 0 }.
// Rays are kept as primitive integer vectors; adjacency is the
// combinatorial test on zero sets over the rows inserted so far.

#include "ucpoly/polycore.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ucpoly {

std::string_view to_string(VertexSet::Status status) {
  switch (status) {
    case VertexSet::Status::Ok: return "ok";
    case VertexSet::Status::Empty: return "empty";
    case VertexSet::Status::Unbounded: return "unbounded";
  }
  return "?";
}

namespace {

using IVec = std::vector<Integer>;
using Bits = boost::dynamic_bitset<>;

struct Ray {
  IVec v;
  Bits zero;
};

void make_primitive(IVec& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

Integer dot(const IVec& g, const IVec& r) {
  Integer s = 0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k] != 0 && r[k] != 0) mpz_addmul(s.get_mpz_t(), g[k].get_mpz_t(), r[k].get_mpz_t());
  }
  return s;
}

// Integer row of b lambda - a.z >= 0, scaled to coprime integers.
IVec homogenize(const Vector& a, const Rational& b) {
  Integer den = 1;
  for (const auto& c : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), b.get_den_mpz_t());
  IVec g(a.size() + 1);
  for (std::size_t k = 0; k < a.size(); ++k) g[k] = -a[k].get_num() * (den / a[k].get_den());
  g[a.size()] = b.get_num() * (den / b.get_den());
  make_primitive(g);
  return g;
}

// Picks dim linearly independent rows in order; returns their positions.
std::vector<std::size_t> pick_basis(const std::vector<IVec>& G, std::size_t dim) {
  std::vector<std::size_t> chosen;
  Matrix echelon;  // reduced rows, each with a pivot column
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < G.size() && chosen.size() < dim; ++r) {
    Vector v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = Rational(G[r][k]);
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const auto pc = pivots[e];
      if (v[pc] == 0) continue;
      const Rational f = v[pc] / echelon[e][pc];
      for (std::size_t k = 0; k < dim; ++k) {
        if (echelon[e][k] != 0) v[k] -= f * echelon[e][k];
      }
    }
    const auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) continue;
    pivots.push_back(static_cast<std::size_t>(it - v.begin()));
    echelon.push_back(std::move(v));
    chosen.push_back(r);
  }
  return chosen;
}

}  // namespace

VertexSet dd_enumerate(const HRep& rep) {
  if (rep.A.size() != rep.b.size()) throw std::invalid_argument("HRep rows and rhs differ in length");
  const std::size_t n = static_cast<std::size_t>(rep.dim);
  const std::size_t dim = n + 1;

  std::vector<IVec> G;
  G.reserve(rep.A.size() + 1);
  {
    IVec lambda(dim);
    lambda[n] = 1;
    G.push_back(std::move(lambda));
  }
  for (std::size_t r = 0; r < rep.A.size(); ++r) {
    if (rep.A[r].size() != n) throw std::invalid_argument("HRep row has wrong dimension");
    G.push_back(homogenize(rep.A[r], rep.b[r]));
  }
  const std::size_t M = G.size();

  VertexSet out;
  const auto basis = pick_basis(G, dim);
  if (basis.size() < dim) {
    out.status = VertexSet::Status::Unbounded;
    return out;
  }

  // Initial simplicial cone: columns of the inverse of the basis rows.
  std::vector<Ray> rays;
  {
    Matrix B(dim, Vector(dim));
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t k = 0; k < dim; ++k) B[i][k] = Rational(G[basis[i]][k]);
    }
    for (std::size_t j = 0; j < dim; ++j) {
      Vector e(dim);
      e[j] = 1;
      auto col = solve_square(B, e);
      if (!col) throw std::logic_error("dd: singular basis");
      Integer den = 1;
      for (const auto& c : *col) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      Ray ray;
      ray.v.resize(dim);
      for (std::size_t k = 0; k < dim; ++k) ray.v[k] = (*col)[k].get_num() * (den / (*col)[k].get_den());
      make_primitive(ray.v);
      ray.zero.resize(M);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i != j) ray.zero.set(basis[i]);
      }
      rays.push_back(std::move(ray));
    }
  }

  Bits in_basis(M);
  for (auto r : basis) in_basis.set(r);
  const std::size_t need = dim >= 2 ? dim - 2 : 0;

  for (std::size_t k = 0; k < M; ++k) {
    if (in_basis.test(k)) continue;
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> plus, minus, zero;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(G[k], rays[r].v);
      const int s = sgn(val[r]);
      (s > 0 ? plus : s < 0 ? minus : zero).push_back(r);
    }
    if (minus.empty()) {
      for (auto r : zero) rays[r].zero.set(k);
      continue;
    }

    std::vector<Ray> next;
    next.reserve(plus.size() + zero.size());
    for (std::size_t pi = 0; pi < plus.size(); ++pi) {
      const auto p = plus[pi];
      for (auto q : minus) {
        Bits common = rays[p].zero & rays[q].zero;
        if (common.count() < need) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh;
        fresh.v.resize(dim);
        const Integer a = val[p];
        const Integer b = -val[q];
        for (std::size_t c = 0; c < dim; ++c) fresh.v[c] = a * rays[q].v[c] + b * rays[p].v[c];
        make_primitive(fresh.v);
        fresh.zero = std::move(common);
        fresh.zero.set(k);
        next.push_back(std::move(fresh));
      }
    }
    for (auto r : plus) next.push_back(std::move(rays[r]));
    for (auto r : zero) {
      rays[r].zero.set(k);
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
  }

  for (const auto& ray : rays) {
    const Integer& lam = ray.v[n];
    if (lam > 0) {
      Point p(n);
      for (std::size_t c = 0; c < n; ++c) {
        p[c] = Rational(ray.v[c], lam);
        p[c].canonicalize();
      }
      out.points.push_back(std::move(p));
    } else {
      Vector d(n);
      for (std::size_t c = 0; c < n; ++c) d[c] = Rational(ray.v[c]);
      out.rays.push_back(std::move(d));
    }
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  std::sort(out.rays.begin(), out.rays.end());
  if (!out.rays.empty()) {
    out.status = VertexSet::Status::Unbounded;
  } else if (out.points.empty()) {
    out.status = VertexSet::Status::Empty;
  }
  return out;
}

VertexSet dd_enumerate(const InequalitySystem& sys) {
  HRep rep = to_hrep(sys);
  std::vector<std::size_t> order(rep.A.size());
  std::iota(order.begin(), order.end(), 0);
  const auto nnz = [&](std::size_t r) {
    return std::count_if(rep.A[r].begin(), rep.A[r].end(), [](const Rational& c) { return c != 0; });
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto na = nnz(a), nb = nnz(b);
    if (na != nb) return na < nb;
    return rep.tags[a] < rep.tags[b];
  });
  HRep sorted;
  sorted.dim = rep.dim;
  for (auto r : order) {
    sorted.A.push_back(std::move(rep.A[r]));
    sorted.b.push_back(std::move(rep.b[r]));
    sorted.tags.push_back(std::move(rep.tags[r]));
  }
  return dd_enumerate(sorted);
}

}  // namespace ucpoly
