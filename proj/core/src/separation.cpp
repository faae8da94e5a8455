// For fixed (t, m) every chain family has the shape
//   x-part - base - sum over consecutive chain elements p -> i of V |i - p| W_i <= 0
// (plus an endpoint term for F9), where W_i = y_i - sum_{j<=top} u_{i-j} is
// read off the query point. The violation therefore grows with the chain sum
// of -W; the recursions maximize that and the winner is re-evaluated from
// its generated row.

#include "ucpoly/separation.hpp"

#include <algorithm>
#include <functional>

namespace ucpoly {

namespace {

Rational row_value(const LinearInequality& row, const Point& p, const VariableSpace& sp) {
  return eval_inequality(row, p, sp).lhs - row.rhs;
}

class Weights {
 public:
  Weights(const UCInstance& inst, const Point& p) : sp_(inst.T), p_(p), T_(inst.T) {
    if (static_cast<int>(p.size()) != sp_.size()) {
      throw std::invalid_argument("point dimension does not match the instance");
    }
  }

  Rational W(int i, int top) const {
    Rational w = p_[sp_.y(i)];
    for (int j = 0; j <= top; ++j) {
      if (i - j >= 2) w -= p_[sp_.u(i - j)];
    }
    return w;
  }

  const VariableSpace& space() const { return sp_; }

 private:
  VariableSpace sp_;
  const Point& p_;
  int T_;
};

std::optional<LinearInequality> try_generate(const UCInstance& inst, const CutParams& params,
                                             Reading reading = Reading::Literal) {
  try {
    return generate(inst, params, reading);
  } catch (const HorizonError&) {
    return std::nullopt;
  }
}

SeparationResult finish(const UCInstance& inst, CutParams params, const Point& point,
                        Reading reading = Reading::Literal) {
  const auto row = generate(inst, params, reading);
  SeparationResult r;
  r.family = params.family;
  r.violation = row_value(row, point, VariableSpace(inst.T));
  r.found = r.violation > 0;
  r.params = std::move(params);
  return r;
}

// Best chain a = s0 < s1 < ... < sk = end with inner elements in (a, end),
// maximizing sum V (s_j - s_{j-1}) G_{s_j}. Returns the inner elements.
std::vector<int> best_backward_chain(int a, int end, const std::function<Rational(int)>& G,
                                     const Rational& V) {
  // f[i]: best value of a chain a -> ... -> i; pred[i] its predecessor.
  const int n = end - a;
  std::vector<Rational> f(n + 1);
  std::vector<int> pred(n + 1, -1);
  for (int k = 1; k <= n; ++k) {
    const int i = a + k;
    const Rational wi = G(i);
    for (int pk = 0; pk < k; ++pk) {
      const Rational cand = f[pk] + V * (k - pk) * wi;
      if (pred[k] < 0 || cand > f[k]) {
        f[k] = cand;
        pred[k] = pk;
      }
    }
  }
  std::vector<int> inner;
  for (int k = pred[n]; k > 0; k = pred[k]) inner.push_back(a + k);
  std::reverse(inner.begin(), inner.end());
  return inner;
}

std::optional<SeparationResult> slice_F7(const UCInstance& inst, int t, int m, const Point& pt,
                                         Reading reading) {
  CutParams params{Family::F7, t, m, {}};
  if (m == 0) return finish(inst, params, pt, reading);
  const Weights w(inst, pt);
  const int kappa = f7_sum_cap(inst, reading);
  const auto G = [&](int i) -> Rational { return -w.W(i, std::min({inst.L - 1, i - 2, kappa})); };
  params.S = best_backward_chain(t - m, t, G, inst.V);
  return finish(inst, params, pt, reading);
}

std::optional<SeparationResult> slice_F8(const UCInstance& inst, int t, int m, const Point& pt) {
  CutParams params{Family::F8, t, m, {}};
  if (!try_generate(inst, params)) return std::nullopt;
  if (m < inst.L) return finish(inst, params, pt);
  // Forward chain t+L = s0 < s1 < ... < sk < anchor; the term of s_j is
  // -V (s_{j+1} - s_j) W_{s_j}, maximized from the anchor backward.
  const Weights w(inst, pt);
  const int top = std::min(m, inst.L - 1);
  const int first = t + inst.L;
  const int anchor = t + m + 1;
  // g[i]: best value of a chain i -> ... -> anchor (i included, its term
  // counted); next[i] its successor.
  const int n = anchor - first;
  std::vector<Rational> g(n + 1);
  std::vector<int> next(n + 1, -1);
  for (int k = n - 1; k >= 0; --k) {
    const Rational wi = -w.W(first + k, top);
    for (int nk = k + 1; nk <= n; ++nk) {
      const Rational cand = g[nk] + inst.V * (nk - k) * wi;
      if (next[k] < 0 || cand > g[k]) {
        g[k] = cand;
        next[k] = nk;
      }
    }
  }
  for (int k = next[0]; k < n; k = next[k]) params.S.push_back(first + k);
  return finish(inst, params, pt);
}

std::optional<SeparationResult> slice_F9(const UCInstance& inst, int t, int m, const Point& pt) {
  CutParams params{Family::F9, t, m, {}};
  const int a = t - m + inst.L;
  if (a >= t) return finish(inst, params, pt);
  const Weights w(inst, pt);
  const int delta = std::min(inst.L - 1, m - 1);
  const auto G = [&](int i) -> Rational { return -w.W(i, delta); };
  const Rational endpoint = inst.Cmin + inst.V - inst.Vbar;

  // h[k]: best value of the chain after element a+k up to t, i.e. the sum
  // over its successors of V (n - p) G_n; succ[k] the next element.
  const int n = t - a;
  std::vector<Rational> h(n + 1);
  std::vector<int> succ(n + 1, -1);
  for (int k = n - 1; k >= 0; --k) {
    for (int nk = k + 1; nk <= n; ++nk) {
      const Rational cand = h[nk] + inst.V * (nk - k) * G(a + nk);
      if (succ[k] < 0 || cand > h[k]) {
        h[k] = cand;
        succ[k] = nk;
      }
    }
  }
  // q = a: a is chosen and the chain runs freely from it. q = a+k > a: the
  // first chosen element is a+k, reached directly from the anchor.
  Rational best = h[0] + endpoint * G(a);
  int best_q = 0;
  for (int k = 1; k <= n; ++k) {
    const Rational cand = inst.V * k * G(a + k) + h[k] + endpoint * G(a + k);
    if (cand > best) {
      best = cand;
      best_q = k;
    }
  }
  if (best_q == 0) params.S.push_back(a);
  for (int k = best_q; k < n; k = succ[k]) {
    if (k > 0) params.S.push_back(a + k);
  }
  return finish(inst, params, pt);
}

SeparationResult empty_result(Family family) {
  SeparationResult r;
  r.family = family;
  return r;
}

// Higher violation first; a missing result sorts last.
bool better(const SeparationResult& a, const SeparationResult& b) {
  if (a.params.has_value() != b.params.has_value()) return a.params.has_value();
  if (!a.params) return false;
  if (a.violation != b.violation) return a.violation > b.violation;
  if (a.family != b.family) return a.family < b.family;
  return *a.params < *b.params;
}

bool is_chain(Family family) {
  return family == Family::F7 || family == Family::F8 || family == Family::F9;
}

std::vector<SeparationResult> all_slices(const UCInstance& inst, Family family, const Point& point,
                                         Reading reading) {
  std::vector<SeparationResult> out;
  for (int t = 1; t <= inst.T; ++t) {
    const auto range = m_range(inst, family, t, reading);
    if (!range) continue;
    for (int m = range->first; m <= range->second; ++m) {
      if (auto r = separate_chain_slice(inst, family, t, m, point, reading)) {
        out.push_back(std::move(*r));
      }
    }
  }
  return out;
}

std::vector<SeparationResult> all_members(const UCInstance& inst, Family family, const Point& point,
                                          Reading reading) {
  if (!family_applies(inst, family)) {
    throw CutParamError(std::string(to_string(family)) + " does not apply to regime " +
                        std::string(to_string(classify(inst))));
  }
  const VariableSpace sp(inst.T);
  std::vector<SeparationResult> out;
  for (const auto& params : enumerate_params(inst, family, reading)) {
    const auto row = try_generate(inst, params, reading);
    if (!row) continue;
    SeparationResult r;
    r.family = family;
    r.params = params;
    r.violation = row_value(*row, point, sp);
    r.found = r.violation > 0;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

bool separation_order(const SeparationResult& a, const SeparationResult& b) { return better(a, b); }

std::optional<SeparationResult> separate_chain_slice(const UCInstance& inst, Family family, int t,
                                                     int m, const Point& point, Reading reading) {
  if (!is_chain(family)) throw CutParamError(std::string(to_string(family)) + " is not a chain family");
  const auto range = m_range(inst, family, t, reading);
  if (!range || m < range->first || m > range->second) return std::nullopt;
  switch (family) {
    case Family::F7: return slice_F7(inst, t, m, point, reading);
    case Family::F8: return slice_F8(inst, t, m, point);
    default: return slice_F9(inst, t, m, point);
  }
}

SeparationResult separate_chain_family(const UCInstance& inst, Family family, const Point& point,
                                       Reading reading) {
  if (!is_chain(family)) throw CutParamError(std::string(to_string(family)) + " is not a chain family");
  auto slices = all_slices(inst, family, point, reading);
  if (slices.empty()) return empty_result(family);
  return *std::min_element(slices.begin(), slices.end(), better);
}

SeparationResult separate_finite_family(const UCInstance& inst, Family family, const Point& point,
                                        Reading reading) {
  if (is_chain(family)) throw CutParamError(std::string(to_string(family)) + " is a chain family");
  auto members = all_members(inst, family, point, reading);
  if (members.empty()) return empty_result(family);
  return *std::min_element(members.begin(), members.end(), better);
}

SeparationResult separate_family(const UCInstance& inst, Family family, const Point& point,
                                 Reading reading) {
  return is_chain(family) ? separate_chain_family(inst, family, point, reading)
                          : separate_finite_family(inst, family, point, reading);
}

std::vector<SeparationResult> violated_members(const UCInstance& inst, Family family,
                                               const Point& point, Reading reading) {
  auto all = is_chain(family) ? all_slices(inst, family, point, reading)
                              : all_members(inst, family, point, reading);
  std::erase_if(all, [](const SeparationResult& r) { return !r.found; });
  std::sort(all.begin(), all.end(), better);
  return all;
}

std::vector<Family> default_families(const UCInstance& inst, Variant variant) {
  switch (variant) {
    case Variant::Up: return {Family::F7, Family::F9};
    case Variant::Down: return {Family::F8, Family::F10};
    case Variant::Full:
      switch (classify(inst)) {
        case Regime::K1: return {Family::F2};
        case Regime::K2: return {Family::F5, Family::F6U, Family::F6D};
        default: return {Family::F7, Family::F9, Family::F8, Family::F10};
      }
  }
  return {};
}

std::vector<SeparationResult> separate_all(const UCInstance& inst, const std::vector<Family>& families,
                                           const Point& point, Reading reading) {
  std::vector<SeparationResult> out;
  for (Family f : families) {
    if (!family_applies(inst, f)) continue;
    auto r = separate_family(inst, f, point, reading);
    if (r.found) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), better);
  return out;
}

std::vector<SeparationResult> separate_all(const UCInstance& inst, Variant variant, const Point& point,
                                           Reading reading) {
  return separate_all(inst, default_families(inst, variant), point, reading);
}

}  // namespace ucpoly
