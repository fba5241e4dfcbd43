#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "infgon/errors.hpp"
#include "infgon/intmath.hpp"

namespace infgon {

// One linear constraint a*n + b*m <= c over two integer parameters.
// Mixed constraints (a and b both nonzero) always have |a| = sn and
// |b| = sm, the steps of the two families being compared; pure
// constraints may carry any coefficient.
struct Atom2 {
  long long a = 0, b = 0;
  long long c = 0;
};

// Intersection of {a*n <= c} constraints: an integer interval.
struct IntInterval {
  bool feasible = false;
  long long lo = 0;
  std::optional<long long> hi;  // nullopt = unbounded above

  bool contains(long long n) const {
    return feasible && n >= lo && (!hi || n <= *hi);
  }
};

// Exact solution set of a pure one-parameter system.  Every atom must
// have b == 0, and the system must bound n from below.
inline IntInterval solve_1param(const std::vector<Atom2>& atoms) {
  std::optional<I128> lo, hi;
  for (const Atom2& at : atoms) {
    if (at.b != 0) throw Error("solve_1param: atom with m coefficient");
    if (at.a == 0) {
      if (at.c < 0) return {};
      continue;
    }
    I128 q = at.a > 0 ? floor_div<I128>(at.c, at.a) : ceil_div<I128>(at.c, at.a);
    if (at.a > 0)
      hi = hi ? std::min(*hi, q) : q;
    else
      lo = lo ? std::max(*lo, q) : q;
  }
  if (!lo) throw Error("solve_1param: parameter unbounded below");
  if (hi && *hi < *lo) return {};
  IntInterval out;
  out.feasible = true;
  out.lo = static_cast<long long>(*lo);
  if (hi) out.hi = static_cast<long long>(*hi);
  return out;
}

namespace detail {

// Steps are capped at the model boundary, so every alignment scan below
// terminates within this many iterations.
inline constexpr long long kScanGuard = 2'000'010;

// Linear piece alpha + beta*u with beta in {-1, 0, +1}, in the scaled
// coordinates u = sn*n, v = sm*m.
struct Piece {
  I128 alpha = 0;
  int beta = 0;
  I128 at(I128 u) const { return alpha + static_cast<I128>(beta) * u; }
};

struct ScaledSystem {
  long long sn = 1, sm = 1;
  std::vector<Piece> lower;  // v >= piece(u)
  std::vector<Piece> upper;  // v <= piece(u)

  I128 v_lo(I128 u) const {
    I128 best = lower.front().at(u);
    for (size_t i = 1; i < lower.size(); ++i)
      best = std::max(best, lower[i].at(u));
    return best;
  }
  std::optional<I128> v_hi(I128 u) const {
    if (upper.empty()) return std::nullopt;
    I128 best = upper.front().at(u);
    for (size_t i = 1; i < upper.size(); ++i)
      best = std::min(best, upper[i].at(u));
    return best;
  }

  // Is there a multiple of sm in [v_lo(u), v_hi(u)]?
  bool admits(I128 u) const {
    I128 lo = ceil_div<I128>(v_lo(u), sm);
    auto hi = v_hi(u);
    return !hi || lo <= floor_div<I128>(*hi, sm);
  }

  long long min_m(I128 u) const {
    return static_cast<long long>(ceil_div<I128>(v_lo(u), sm));
  }
};

// Minimal n in [zlo, zhi] (interior of a zone: the active pieces do not
// change) admitting a multiple of sm, or nullopt.  `low`/`high` are the
// active pieces; high absent means unbounded above (always admissible).
inline std::optional<I128> zone_min(const ScaledSystem& sys, I128 zlo,
                                    std::optional<I128> zhi, Piece low,
                                    std::optional<Piece> high) {
  const I128 sn = sys.sn, sm = sys.sm;
  auto in_zone = [&](I128 n) { return n >= zlo && (!zhi || n <= *zhi); };
  if (!high) return in_zone(zlo) ? std::optional<I128>(zlo) : std::nullopt;
  const int lb = low.beta, hb = high->beta;
  const I128 la = low.alpha, ha = high->alpha;
  auto check = [&](I128 n) { return sys.admits(sn * n); };

  if (lb == 0 && hb == 0) {
    if (ceil_div<I128>(la, sm) <= floor_div<I128>(ha, sm)) return zlo;
    return std::nullopt;
  }
  if (lb <= 0 && hb >= 0) {
    // The admissible band only widens with u; closed-form threshold or a
    // short alignment scan when both ends move.
    if (lb == 0) {
      I128 u_min = sm * ceil_div<I128>(la, sm) - ha;  // need ha + u >= ceil
      I128 n = std::max(zlo, ceil_div<I128>(u_min, sn));
      if (!zhi || n <= *zhi) return n;
      return std::nullopt;
    }
    if (hb == 0) {
      I128 u_min = la - sm * floor_div<I128>(ha, sm);  // need la - u <= floor
      I128 n = std::max(zlo, ceil_div<I128>(u_min, sn));
      if (!zhi || n <= *zhi) return n;
      return std::nullopt;
    }
    // lb == -1, hb == +1: width grows by 2u; alignment settles within one
    // step-sized band.
    I128 n_w0 = ceil_div<I128>(la - ha, 2 * sn);
    I128 n_easy = ceil_div<I128>(sm - 1 + la - ha, 2 * sn);
    I128 from = std::max(zlo, n_w0);
    I128 to = std::max(from, n_easy);
    if (zhi) to = std::min(to, *zhi);
    for (I128 n = from; n <= to; ++n)
      if (check(n)) return n;
    return std::nullopt;
  }
  if (lb >= 0 && hb <= 0) {
    // The band only narrows with u: a true prefix plus a short flicker
    // band near width zero.
    if (check(zlo)) return zlo;
    if (lb == 1 && hb == -1) {
      I128 n = zlo + 1;
      int guard = 0;
      while ((!zhi || n <= *zhi) && high->at(sn * n) >= low.at(sn * n)) {
        if (check(n)) return n;
        ++n;
        if (++guard > kScanGuard) throw Error("zone scan guard tripped");
      }
    }
    return std::nullopt;
  }
  // Parallel slide (lb == hb == +/-1): constant width, admissibility is
  // periodic in n with period sm/gcd(sn, sm).
  if (high->alpha - low.alpha < 0) return std::nullopt;
  I128 period = sm / gcd_positive<long long>(sn, sm);
  I128 to = zlo + period - 1;
  if (zhi) to = std::min(to, *zhi);
  for (I128 n = zlo; n <= to; ++n)
    if (check(n)) return n;
  return std::nullopt;
}

}  // namespace detail

// Exact lexicographically minimal (n, m) satisfying all atoms, where
// mixed atoms have coefficient magnitudes (sn, sm).  The system must
// bound both parameters from below.
inline std::optional<std::pair<long long, long long>> solve_2param(
    const std::vector<Atom2>& atoms, long long sn, long long sm) {
  std::optional<I128> n_lo, n_hi, m_lo, m_hi;
  std::optional<I128> kA, kB, kC, kD;
  auto tighten_min = [](std::optional<I128>& x, I128 v) {
    x = x ? std::min(*x, v) : v;
  };
  auto tighten_max = [](std::optional<I128>& x, I128 v) {
    x = x ? std::max(*x, v) : v;
  };
  for (const Atom2& at : atoms) {
    if (at.a == 0 && at.b == 0) {
      if (at.c < 0) return std::nullopt;
    } else if (at.b == 0) {
      if (at.a > 0)
        tighten_min(n_hi, floor_div<I128>(at.c, at.a));
      else
        tighten_max(n_lo, ceil_div<I128>(at.c, at.a));
    } else if (at.a == 0) {
      if (at.b > 0)
        tighten_min(m_hi, floor_div<I128>(at.c, at.b));
      else
        tighten_max(m_lo, ceil_div<I128>(at.c, at.b));
    } else {
      if ((at.a != sn && at.a != -sn) || (at.b != sm && at.b != -sm))
        throw Error("solve_2param: mixed atom with unexpected coefficients");
      if (at.a > 0 && at.b < 0)
        tighten_min(kA, at.c);  // u - v <= c
      else if (at.a < 0 && at.b > 0)
        tighten_min(kB, at.c);  // v - u <= c
      else if (at.a > 0 && at.b > 0)
        tighten_min(kC, at.c);  // u + v <= c
      else
        tighten_min(kD, at.c);  // -u - v <= c
    }
  }
  if (!n_lo || !m_lo)
    throw Error("solve_2param: parameters must be bounded below");
  if (n_hi && *n_hi < *n_lo) return std::nullopt;
  if (m_hi && *m_hi < *m_lo) return std::nullopt;

  if (!kA && !kB && !kC && !kD) {
    return std::make_pair(static_cast<long long>(*n_lo),
                          static_cast<long long>(*m_lo));
  }

  detail::ScaledSystem sys;
  sys.sn = sn;
  sys.sm = sm;
  sys.lower.push_back({*m_lo * sm, 0});
  if (kA) sys.lower.push_back({-*kA, +1});   // v >= u - kA
  if (kD) sys.lower.push_back({-*kD, -1});   // v >= -kD - u
  if (m_hi) sys.upper.push_back({*m_hi * sm, 0});
  if (kB) sys.upper.push_back({*kB, +1});    // v <= kB + u
  if (kC) sys.upper.push_back({*kC, -1});    // v <= kC - u

  // Candidate n values: the interval ends plus both integers bracketing
  // every crossing of two pieces; between consecutive candidates the
  // active pieces are constant.
  std::vector<I128> cands;
  auto add_cand = [&](I128 n) {
    if (n < *n_lo || (n_hi && n > *n_hi)) return;
    cands.push_back(n);
  };
  add_cand(*n_lo);
  if (n_hi) add_cand(*n_hi);
  auto add_crossings = [&](const std::vector<detail::Piece>& ps) {
    for (size_t i = 0; i < ps.size(); ++i)
      for (size_t j = i + 1; j < ps.size(); ++j) {
        int db = ps[i].beta - ps[j].beta;
        if (db == 0) continue;
        // alpha_i + beta_i*u = alpha_j + beta_j*u at u* = da/db
        I128 da = ps[j].alpha - ps[i].alpha;
        I128 n0 = floor_div<I128>(da, static_cast<I128>(db) * sn);
        add_cand(n0);
        add_cand(n0 + 1);
      }
  };
  add_crossings(sys.lower);
  add_crossings(sys.upper);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  auto finish = [&](I128 n) -> std::optional<std::pair<long long, long long>> {
    long long m = sys.min_m(static_cast<I128>(sn) * n);
    return std::make_pair(static_cast<long long>(n), m);
  };

  for (size_t i = 0; i < cands.size(); ++i) {
    if (sys.admits(static_cast<I128>(sn) * cands[i])) return finish(cands[i]);
    I128 zlo = cands[i] + 1;
    std::optional<I128> zhi;
    if (i + 1 < cands.size())
      zhi = cands[i + 1] - 1;
    else if (n_hi)
      zhi = *n_hi;
    if (zhi && *zhi < zlo) continue;
    // Classify the active pieces on this zone's interior.
    I128 u = static_cast<I128>(sn) * zlo;
    detail::Piece low = sys.lower.front();
    for (const auto& p : sys.lower)
      if (p.at(u) > low.at(u)) low = p;
    std::optional<detail::Piece> high;
    for (const auto& p : sys.upper)
      if (!high || p.at(u) < high->at(u)) high = p;
    if (auto n = detail::zone_min(sys, zlo, zhi, low, high)) return finish(*n);
  }
  return std::nullopt;
}

// Feasibility without witness extraction.
inline bool feasible_2param(const std::vector<Atom2>& atoms, long long sn,
                            long long sm) {
  return solve_2param(atoms, sn, sm).has_value();
}

// Lexicographic minimum prioritising m: solve with the roles swapped.
inline std::optional<std::pair<long long, long long>> solve_2param_m_first(
    const std::vector<Atom2>& atoms, long long sn, long long sm) {
  std::vector<Atom2> swapped;
  swapped.reserve(atoms.size());
  for (const Atom2& at : atoms) swapped.push_back({at.b, at.a, at.c});
  auto r = solve_2param(swapped, sm, sn);
  if (!r) return std::nullopt;
  return std::make_pair(r->second, r->first);
}

}  // namespace infgon
