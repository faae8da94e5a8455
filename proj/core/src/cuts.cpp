#include "ucpoly/cuts.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace ucpoly {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::F2: return "F2";
    case Family::F5: return "F5";
    case Family::F6U: return "F6U";
    case Family::F6D: return "F6D";
    case Family::F7: return "F7";
    case Family::F8: return "F8";
    case Family::F9: return "F9";
    case Family::F10: return "F10";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  for (Family f : kAllFamilies) {
    if (to_string(f) == text) return f;
  }
  throw InputError("unknown family '" + std::string(text) + "'");
}

std::vector<Family> parse_family_list(std::string_view text) {
  std::vector<Family> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    if (!item.empty()) out.push_back(parse_family(item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string_view to_string(Reading reading) {
  return reading == Reading::Amended ? "amended" : "literal";
}

Reading parse_reading(std::string_view text) {
  if (text == "literal") return Reading::Literal;
  if (text == "amended") return Reading::Amended;
  throw InputError("unknown reading '" + std::string(text) + "' (expected literal or amended)");
}

std::string to_string(const CutParams& p) {
  std::ostringstream os;
  os << to_string(p.family) << "[t=" << p.t;
  switch (p.family) {
    case Family::F7:
    case Family::F8:
    case Family::F9:
    case Family::F10: os << ",m=" << p.m; break;
    default: break;
  }
  switch (p.family) {
    case Family::F2:
    case Family::F10:
      if (p.S.empty()) break;
      [[fallthrough]];
    case Family::F5:
    case Family::F7:
    case Family::F8:
    case Family::F9: {
      os << ",S={";
      for (std::size_t i = 0; i < p.S.size(); ++i) os << (i ? "," : "") << p.S[i];
      os << "}";
      break;
    }
    default: break;
  }
  os << "]";
  return os.str();
}

int ChainMap::neighbor(int i) const {
  if (dir == ChainDirection::Backward) {
    int best = anchor < i ? anchor : std::numeric_limits<int>::min();
    for (int a : members) {
      if (a < i) best = std::max(best, a);
    }
    if (best == std::numeric_limits<int>::min()) throw std::logic_error("chain has no predecessor");
    return best;
  }
  int best = anchor > i ? anchor : std::numeric_limits<int>::max();
  for (int a : members) {
    if (a > i) best = std::min(best, a);
  }
  if (best == std::numeric_limits<int>::max()) throw std::logic_error("chain has no successor");
  return best;
}

namespace {

int pos(int v) { return std::max(v, 0); }

// Collects the right-hand side of "lhs <= rhs" for one family member while
// enforcing the horizon conventions.
class RowBuilder {
 public:
  RowBuilder(const UCInstance& inst, CutParams params, bool extended_horizon)
      : inst_(inst), sp_(inst.T), params_(std::move(params)), extended_(extended_horizon) {}

  void lhs_x(int t, const Rational& c) { row_.add(sp_.x(t), c); }

  void y(int i, const Rational& c) {
    if (c == 0) return;
    if (extended_ && i == inst_.T + 1) i = inst_.T;  // y_{T+1} := y_T
    check_index(i, 1);
    row_.add(sp_.y(i), -c);
  }

  void u(int i, const Rational& c) {
    if (c == 0) return;
    if (extended_ && i == inst_.T + 1) return;  // u_{T+1} := 0
    if (i < 2) throw std::logic_error(to_string(params_) + " references u_" + std::to_string(i));
    check_index(i, 2);
    row_.add(sp_.u(i), -c);
  }

  /// c * (y_i - sum_{j=0}^{top} u_{i-j}); the sum is empty when top < 0.
  void w(int i, int top, const Rational& c) {
    if (c == 0) return;
    y(i, c);
    for (int j = 0; j <= top; ++j) u(i - j, -c);
  }

  LinearInequality finish() {
    row_.rhs = 0;
    row_.sense = Sense::Le;
    row_.tag = to_string(params_);
    return std::move(row_);
  }

 private:
  void check_index(int i, int lo) const {
    if (i > inst_.T) {
      throw HorizonError(to_string(params_) + " references period " + std::to_string(i) +
                         " beyond the horizon");
    }
    if (i < lo) throw std::logic_error(to_string(params_) + " references period " + std::to_string(i));
  }

  const UCInstance& inst_;
  VariableSpace sp_;
  CutParams params_;
  bool extended_;
  LinearInequality row_;
};

void require(bool ok, const CutParams& p, const std::string& what) {
  if (!ok) throw CutParamError(to_string(p) + ": " + what);
}

void require_regime(const UCInstance& inst, Family family) {
  if (!family_applies(inst, family)) {
    throw CutParamError(std::string(to_string(family)) + " does not apply to regime " +
                        std::string(to_string(classify(inst))));
  }
}

bool sorted_unique(const std::vector<int>& S) {
  return std::adjacent_find(S.begin(), S.end(), [](int a, int b) { return a >= b; }) == S.end();
}

void require_subset(const CutParams& p, int lo, int hi) {
  require(sorted_unique(p.S), p, "index set must be strictly increasing");
  for (int i : p.S) {
    require(i >= lo && i <= hi, p,
            "index " + std::to_string(i) + " outside [" + std::to_string(lo) + "," +
                std::to_string(hi) + "]");
  }
}

void require_m(const UCInstance& inst, const CutParams& p, Reading reading = Reading::Literal) {
  const auto range = m_range(inst, p.family, p.t, reading);
  require(range && p.m >= range->first && p.m <= range->second, p,
          range ? "m outside [" + std::to_string(range->first) + "," +
                      std::to_string(range->second) + "]"
                : "no admissible m at this t");
}

int floor_ratio(const Rational& num, const Rational& den) {
  return to_int(floor_of(Rational(num / den)));
}

}  // namespace

int f7_sum_cap(const UCInstance& inst, Reading reading) {
  // floor((Cmax - Vbar)/V) never exceeds kappa and equals it when V divides
  // Cmax - Cmin; past it the u_{t-j} coefficients Cmax - Vbar - jV turn
  // negative.
  return reading == Reading::Amended ? floor_ratio(inst.Cmax - inst.Vbar, inst.V)
                                     : derive_constants(inst).kappa;
}

namespace {

}  // namespace

bool family_applies(const UCInstance& inst, Family family) {
  switch (family) {
    case Family::F2: return classify(inst) == Regime::K1;
    case Family::F5:
    case Family::F6U:
    case Family::F6D: return classify(inst) == Regime::K2;
    default: return true;
  }
}

std::optional<std::pair<int, int>> m_range(const UCInstance& inst, Family family, int t,
                                           Reading reading) {
  const int T = inst.T;
  const auto dc = derive_constants(inst);
  std::pair<int, int> r{0, 0};
  switch (family) {
    case Family::F7: {
      if (t < 1 || t > T) return std::nullopt;
      const int ramp_room = floor_ratio(inst.Cmax - inst.Vbar, inst.V);
      const int cap = reading == Reading::Amended ? ramp_room - inst.L + 1 : dc.gamma - inst.L;
      r = {0, std::min({pos(t - inst.L - 1), ramp_room, pos(cap)})};
      break;
    }
    case Family::F8: {
      if (t < 1 || t > T) return std::nullopt;
      const int ramp_room = floor_ratio(inst.Cmax - inst.Vbar, inst.V);
      r = {std::min({pos(T - t - 1), inst.L - 1, ramp_room}), std::min(pos(T - t - 1), ramp_room)};
      break;
    }
    case Family::F9:
      if (t < 2 || t > T) return std::nullopt;
      r = {1, std::min(t - 1, dc.kappa)};
      break;
    case Family::F10:
      if (t < 1 || t > T - 1) return std::nullopt;
      r = {1, std::min(T - t, dc.kappa)};
      break;
    default: return std::pair<int, int>{0, 0};
  }
  if (r.first > r.second) return std::nullopt;
  return r;
}

LinearInequality gen_F2(const UCInstance& inst, int t, const std::vector<int>& S, Reading reading) {
  const CutParams p{Family::F2, t, 0, S};
  require_regime(inst, Family::F2);
  require(t >= 1 && t <= inst.T, p, "t outside [1,T]");
  require(S.empty() || (reading == Reading::Amended && inst.L == 1 && t >= 2 && S == std::vector<int>{t}), p,
          "S = {t} needs the amended reading and L = 1");
  const int s = S.empty() ? std::min(t + 1, inst.T) : t;
  const int j = std::min({1, inst.L - 1, s - 2, s - t});
  RowBuilder b(inst, p, false);
  b.lhs_x(t, 1);
  b.y(t, inst.Vbar);
  b.w(s, j, inst.Cmax - inst.Vbar);
  return b.finish();
}

LinearInequality gen_F5(const UCInstance& inst, int t, const std::vector<int>& S, Reading reading) {
  const CutParams p{Family::F5, t, 0, S};
  require_regime(inst, Family::F5);
  require(t >= 1 && t <= inst.T, p, "t outside [1,T]");
  const int far = std::min(t + 2, inst.T);
  require(S.empty() || (S.size() == 1 && S[0] == far), p,
          "S must be empty or {" + std::to_string(far) + "}");

  std::vector<int> chain = S;
  chain.push_back(std::min(t + 1, inst.T));
  std::sort(chain.begin(), chain.end());
  chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
  // At t = T the literal anchor t+3 gives the lone chain member T the
  // coefficient 3V; the amended anchor T+2 gives 2V.
  const int anchor = reading == Reading::Amended ? std::min(t + 3, inst.T + 2) : t + 3;
  const ChainMap d{anchor, S, ChainDirection::Forward};

  RowBuilder b(inst, p, false);
  b.lhs_x(t, 1);
  b.y(t, inst.Vbar);
  for (int i : chain) {
    b.w(i, std::min(inst.L - 1, i - 2), inst.V * (d.neighbor(i) - i));
  }
  for (int j = 0; j <= std::min(inst.L - 1, t - 2); ++j) b.u(t - j, inst.V * j);
  return b.finish();
}

LinearInequality gen_F6U(const UCInstance& inst, int t) {
  const CutParams p{Family::F6U, t, 0, {}};
  require_regime(inst, Family::F6U);
  require(t >= 1 && t <= inst.T - 1, p, "t outside [1,T-1]");
  const int s = std::min(t + 2, inst.T);
  const int j1 = std::min({s - 2, 1, inst.L - 1, s - t - 1});
  RowBuilder b(inst, p, false);
  b.lhs_x(t + 1, 1);
  b.lhs_x(t, -1);
  b.y(t + 1, inst.Vbar);
  b.y(t, -inst.Cmin);
  b.w(s, j1, inst.V);
  return b.finish();
}

LinearInequality gen_F6D(const UCInstance& inst, int t, Reading reading) {
  const CutParams p{Family::F6D, t, 0, {}};
  require_regime(inst, Family::F6D);
  require(t >= 1 && t <= inst.T - 1, p, "t outside [1,T-1]");
  const int j2 = std::min({1, reading == Reading::Amended ? t - 1 : t - 2, inst.L - 1});
  RowBuilder b(inst, p, false);
  b.lhs_x(t, 1);
  b.lhs_x(t + 1, -1);
  b.y(t, inst.Vbar);
  b.y(t + 1, -inst.Cmin);
  b.w(t + 1, j2, inst.V);
  return b.finish();
}

LinearInequality gen_F7(const UCInstance& inst, int t, int m, const std::vector<int>& S,
                        Reading reading) {
  const CutParams p{Family::F7, t, m, S};
  require(t >= 1 && t <= inst.T, p, "t outside [1,T]");
  require_m(inst, p, reading);
  require_subset(p, t - m + 1, t - 1);
  const int kappa = f7_sum_cap(inst, reading);
  const auto top = [&](int i) { return std::min({inst.L - 1, i - 2, kappa}); };

  RowBuilder b(inst, p, false);
  b.lhs_x(t, 1);
  b.y(t, inst.Vbar);
  b.w(t, top(t), (inst.L - 1) * inst.V);
  const ChainMap d{t - m, S, ChainDirection::Backward};
  std::vector<int> chain = S;
  chain.push_back(t);
  for (int i : chain) {
    const int di = m == 0 ? t : d.neighbor(i);
    b.w(i, top(i), inst.V * (i - di));
  }
  b.w(t - m, top(t - m), inst.Cmax - inst.Vbar - (m + inst.L - 1) * inst.V);
  for (int j = 0; j <= top(t); ++j) b.u(t - j, inst.V * j);
  return b.finish();
}

LinearInequality gen_F8(const UCInstance& inst, int t, int m, const std::vector<int>& S) {
  const CutParams p{Family::F8, t, m, S};
  require(t >= 1 && t <= inst.T, p, "t outside [1,T]");
  require_m(inst, p);
  require_subset(p, t + inst.L + 1, t + m);
  const int top = std::min(m, inst.L - 1);

  RowBuilder b(inst, p, true);
  b.lhs_x(t, 1);
  b.y(t, inst.Vbar);
  for (int i = 1; i <= top; ++i) {
    b.y(t + i, inst.V);
    for (int j = 1; j <= i; ++j) b.u(t + j, -inst.V);
  }
  const ChainMap d{t + m + 1, S, ChainDirection::Forward};
  std::vector<int> chain = S;
  chain.insert(chain.begin(), t + inst.L);
  for (int i : chain) {
    const int di = (m <= inst.L - 1 && i == t + inst.L) ? i : d.neighbor(i);
    b.w(i, top, inst.V * (di - i));
  }
  b.w(t + m + 1, top, inst.Cmax - inst.Vbar - m * inst.V);
  return b.finish();
}

LinearInequality gen_F9(const UCInstance& inst, int t, int m, const std::vector<int>& S0) {
  const CutParams p{Family::F9, t, m, S0};
  require(t >= 2 && t <= inst.T, p, "t outside [2,T]");
  require_m(inst, p);
  const int anchor = t - m + inst.L;
  require_subset(p, anchor, t - 1);
  const int delta = std::min(inst.L - 1, m - 1);

  std::vector<int> S = S0;
  S.push_back(t);
  const int q = S.front();
  const ChainMap d{anchor, S, ChainDirection::Backward};

  RowBuilder b(inst, p, false);
  b.lhs_x(t, 1);
  b.lhs_x(t - m, -1);
  b.y(t, inst.Vbar);
  b.y(t - m, -inst.Cmin);
  for (int i : S) {
    if (i == anchor) continue;
    const int di = (m <= inst.L && i == t) ? t : d.neighbor(i);
    b.w(i, delta, inst.V * (i - di));
  }
  b.w(t, delta, delta * inst.V);
  b.w(q, delta, inst.Cmin + inst.V - inst.Vbar);
  for (int j = 0; j <= delta; ++j) b.u(t - j, inst.V * j);
  return b.finish();
}

LinearInequality gen_F10(const UCInstance& inst, int t, int m, const std::vector<int>& S,
                         Reading reading) {
  const CutParams p{Family::F10, t, m, S};
  require(t >= 1 && t <= inst.T - 1, p, "t outside [1,T-1]");
  require_m(inst, p);
  require(S.empty() || reading == Reading::Amended, p, "S is derived under the literal reading");
  require_subset(p, t + inst.L + 1, t + m);
  const int delta = std::min(inst.L - 1, m - 1);

  // Chain elements before the anchor t+m, and the period q carrying the
  // (Cmin + V - Vbar) term.
  std::vector<int> chain{t + inst.L};
  int q = t + inst.L;
  if (reading == Reading::Literal) {
    for (int i = t + inst.L + 1; i <= t + m; ++i) chain.push_back(i);
  } else {
    chain.insert(chain.end(), S.begin(), S.end());
    // With m < L the window ends before t+L; the endpoint then sits at t+m,
    // the mirror image of the up direction where q = t.
    q = m < inst.L ? t + m : chain.back();
  }
  std::erase(chain, t + m);

  RowBuilder b(inst, p, false);
  b.lhs_x(t, 1);
  b.lhs_x(t + m, -1);
  b.y(t, inst.Vbar);
  b.y(t + m, -inst.Cmin);
  for (int i = 1; i <= delta; ++i) {
    b.y(t + i, inst.V);
    for (int j = 1; j <= i; ++j) b.u(t + j, -inst.V);
  }
  const ChainMap d{t + m, chain, ChainDirection::Forward};
  for (int i : chain) {
    const int di = (m <= inst.L && i == t + inst.L) ? i : d.neighbor(i);
    b.w(i, delta, inst.V * (di - i));
  }
  b.w(q, delta, inst.Cmin + inst.V - inst.Vbar);
  return b.finish();
}

LinearInequality generate(const UCInstance& inst, const CutParams& p, Reading reading) {
  switch (p.family) {
    case Family::F2: return gen_F2(inst, p.t, p.S, reading);
    case Family::F5: return gen_F5(inst, p.t, p.S, reading);
    case Family::F6U: return gen_F6U(inst, p.t);
    case Family::F6D: return gen_F6D(inst, p.t, reading);
    case Family::F7: return gen_F7(inst, p.t, p.m, p.S, reading);
    case Family::F8: return gen_F8(inst, p.t, p.m, p.S);
    case Family::F9: return gen_F9(inst, p.t, p.m, p.S);
    case Family::F10: return gen_F10(inst, p.t, p.m, p.S, reading);
  }
  throw std::logic_error("unhandled family");
}

namespace {

// Every subset of [lo, hi] in increasing bitmask order.
std::vector<std::vector<int>> subsets(int lo, int hi) {
  std::vector<std::vector<int>> out;
  const int n = std::max(hi - lo + 1, 0);
  if (n > 20) throw CutParamError("index interval too wide for subset enumeration");
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int k = 0; k < n; ++k) {
      if (mask & (1u << k)) s.push_back(lo + k);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<CutParams> enumerate_params(const UCInstance& inst, Family family, Reading reading) {
  std::vector<CutParams> out;
  const int T = inst.T;
  switch (family) {
    case Family::F2:
      for (int t = 1; t <= T; ++t) {
        out.push_back({family, t, 0, {}});
        if (reading == Reading::Amended && inst.L == 1 && t >= 2 && t < T) out.push_back({family, t, 0, {t}});
      }
      break;
    case Family::F5:
      for (int t = 1; t <= T; ++t) {
        out.push_back({family, t, 0, {}});
        out.push_back({family, t, 0, {std::min(t + 2, T)}});
      }
      break;
    case Family::F6U:
    case Family::F6D:
      for (int t = 1; t <= T - 1; ++t) out.push_back({family, t, 0, {}});
      break;
    case Family::F7:
    case Family::F8:
    case Family::F9:
    case Family::F10:
      for (int t = 1; t <= T; ++t) {
        const auto range = m_range(inst, family, t, reading);
        if (!range) continue;
        for (int m = range->first; m <= range->second; ++m) {
          if (family == Family::F10 && reading == Reading::Literal) {
            out.push_back({family, t, m, {}});
            continue;
          }
          const auto [lo, hi] = family == Family::F7   ? std::pair{t - m + 1, t - 1}
                                : family == Family::F8 || family == Family::F10
                                    ? std::pair{t + inst.L + 1, t + m}
                                                       : std::pair{t - m + inst.L, t - 1};
          for (auto& s : subsets(lo, hi)) out.push_back({family, t, m, std::move(s)});
        }
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string normalized_key(const LinearInequality& row) {
  // Bring to "a.z <= b" or "a.z = b", scale to coprime integers.
  Rational sign = row.sense == Sense::Ge ? Rational(-1) : Rational(1);
  std::vector<std::pair<int, Rational>> terms;
  for (const auto& [var, c] : row.coeffs) terms.emplace_back(var, c * sign);
  Rational rhs = row.rhs * sign;

  Integer lcm_den = 1;
  for (const auto& [_, c] : terms) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), rhs.get_den_mpz_t());
  Integer g = 0;
  std::vector<Integer> ints;
  for (const auto& [_, c] : terms) {
    Integer v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  Integer r = rhs.get_num() * (lcm_den / rhs.get_den());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_mpz_t());
  if (g == 0) g = 1;
  if (row.sense == Sense::Eq) {
    // Equalities are sign-free: make the first nonzero entry positive.
    const Integer& lead = ints.empty() ? r : ints.front();
    if (lead < 0) g = -g;
  }
  std::ostringstream os;
  os << (row.sense == Sense::Eq ? "=" : "<");
  for (std::size_t k = 0; k < terms.size(); ++k) os << " " << terms[k].first << ":" << Integer(ints[k] / g);
  os << " | " << Integer(r / g);
  return os.str();
}

FamilyListing enumerate_family(const UCInstance& inst, Family family, Reading reading) {
  require_regime(inst, family);
  FamilyListing listing;
  std::map<std::string, std::size_t> seen;
  for (const auto& params : enumerate_params(inst, family, reading)) {
    LinearInequality row;
    try {
      row = generate(inst, params, reading);
    } catch (const HorizonError&) {
      listing.skipped.push_back(params);
      continue;
    }
    auto key = normalized_key(row);
    auto [it, inserted] = seen.try_emplace(std::move(key), listing.members.size());
    if (inserted) {
      listing.members.push_back({params, {}, std::move(row)});
    } else {
      auto& kept = listing.members[it->second];
      kept.duplicates.push_back(params);
      kept.row.tag += "|" + to_string(params);
    }
  }
  return listing;
}

std::string_view to_string(HullKind kind) {
  switch (kind) {
    case HullKind::K1: return "q-k1";
    case HullKind::K2: return "q-k2";
    case HullKind::Up: return "q-up";
    case HullKind::Down: return "q-down";
  }
  return "?";
}

HullKind parse_hull_kind(std::string_view text) {
  if (text == "q-k1" || text == "Q_K1") return HullKind::K1;
  if (text == "q-k2" || text == "Q_K2") return HullKind::K2;
  if (text == "q-up" || text == "Q_UP") return HullKind::Up;
  if (text == "q-down" || text == "Q_DOWN") return HullKind::Down;
  throw InputError("unknown hull '" + std::string(text) + "' (expected q-k1, q-k2, q-up, q-down)");
}

Variant variant_of(HullKind kind) {
  switch (kind) {
    case HullKind::Up: return Variant::Up;
    case HullKind::Down: return Variant::Down;
    default: return Variant::Full;
  }
}

std::vector<Family> hull_families(HullKind kind) {
  switch (kind) {
    case HullKind::K1: return {Family::F2};
    case HullKind::K2: return {Family::F5, Family::F6U, Family::F6D};
    case HullKind::Up: return {Family::F7, Family::F9};
    case HullKind::Down: return {Family::F8, Family::F10};
  }
  return {};
}

InequalitySystem assemble_hull(const UCInstance& inst, HullKind kind, const HullOptions& options) {
  validate(inst);
  if (kind == HullKind::K1 && classify(inst) != Regime::K1) {
    throw CutParamError("q-k1 requires V = Cmax - Cmin");
  }
  if (kind == HullKind::K2 && classify(inst) != Regime::K2) {
    throw CutParamError("q-k2 requires Cmax = Cmin + 2V and Vbar = Cmin");
  }
  InequalitySystem sys;
  sys.space = VariableSpace(inst.T);
  sys.name = "Q_" + std::string(kind == HullKind::K1   ? "K1"
                                : kind == HullKind::K2 ? "K2"
                                : kind == HullKind::Up ? "UP"
                                                       : "DOWN");
  std::vector<LinearInequality> rows;
  append_min_up_down_rows(inst, sys.space, rows);
  append_lower_generation_rows(inst, sys.space, rows);
  append_bound_rows(sys.space, rows);
  for (Family f : hull_families(kind)) {
    if (std::find(options.omit.begin(), options.omit.end(), f) != options.omit.end()) continue;
    for (auto& member : enumerate_family(inst, f, options.reading).members) {
      rows.push_back(std::move(member.row));
    }
  }

  std::map<std::string, std::size_t> seen;
  for (auto& row : rows) {
    auto [it, inserted] = seen.try_emplace(normalized_key(row), sys.rows.size());
    if (inserted) {
      sys.rows.push_back(std::move(row));
    } else {
      sys.rows[it->second].tag += "|" + row.tag;
    }
  }
  return sys;
}

}  // namespace ucpoly
