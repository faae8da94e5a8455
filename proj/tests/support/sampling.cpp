#include "sampling.hpp"

#include <algorithm>
#include <map>

namespace ucpoly::testing {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational sixths(std::mt19937_64& rng, int hi) { return Rational(pick(rng, 0, 6 * hi)) / 6; }

}  // namespace

UCInstance random_instance(std::mt19937_64& rng, Draw draw, int Tmin, int Tmax) {
  const int T = pick(rng, Tmin, Tmax);
  const int L = pick(rng, 1, std::min(3, T - 1));
  const int ell = pick(rng, 1, std::min(3, T - 1));
  const Rational V = pick(rng, 1, 3);
  Rational Cmin = pick(rng, draw == Draw::K2 ? 1 : 0, 3);
  const Rational share[] = {Rational(1, 3), Rational(1, 2), Rational(2, 3)};
  Rational Vbar = Cmin + V * share[pick(rng, 0, 2)];
  Rational Cmax;
  switch (draw) {
    case Draw::K1: Cmax = Cmin + V; break;
    case Draw::K2:
      Cmax = Cmin + 2 * V;
      Vbar = Cmin;
      break;
    case Draw::General: {
      const Rational ratio[] = {Rational(3, 2), Rational(2), Rational(5, 2), Rational(3)};
      Cmax = Cmin + V * ratio[pick(rng, 0, 3)];
      break;
    }
    case Draw::Wide: {
      const Rational ratio[] = {Rational(3, 2), Rational(2),    Rational(5, 2), Rational(3),
                                Rational(7, 2), Rational(13, 3), Rational(5)};
      Cmax = Cmin + V * ratio[pick(rng, 0, 6)];
      break;
    }
  }
  return make_instance(T, L, ell, Cmin, Cmax, Vbar, V);
}

Point random_point(const UCInstance& inst, std::mt19937_64& rng) {
  const VariableSpace sp(inst.T);
  Point p(static_cast<std::size_t>(sp.size()));
  const int cap = to_int(ceil_of(inst.Cmax));
  for (int t = 1; t <= inst.T; ++t) {
    p[sp.x(t)] = sixths(rng, cap);
    p[sp.y(t)] = sixths(rng, 1);
    if (t >= 2) p[sp.u(t)] = sixths(rng, 1);
  }
  return p;
}

std::vector<BruteSlice> brute_force_slices(const UCInstance& inst, Family family, const Point& p,
                                           Reading reading) {
  const VariableSpace sp(inst.T);
  std::map<std::pair<int, int>, BruteSlice> best;
  for (const auto& params : enumerate_params(inst, family, reading)) {
    LinearInequality row;
    try {
      row = generate(inst, params, reading);
    } catch (const HorizonError&) {
      continue;
    }
    const auto ev = eval_inequality(row, p, sp);
    const Rational v = ev.lhs - row.rhs;
    const auto key = std::make_pair(params.t, params.m);
    const auto it = best.find(key);
    if (it == best.end() || v > it->second.violation) best[key] = {params, v};
  }
  std::vector<BruteSlice> out;
  for (auto& [_, b] : best) out.push_back(std::move(b));
  return out;
}

}  // namespace ucpoly::testing
