#pragma once

#include <optional>
#include <string>
#include <vector>

#include "infgon/certificate.hpp"
#include "infgon/crossing.hpp"
#include "infgon/diagonal.hpp"
#include "infgon/feasibility.hpp"

namespace infgon {

inline constexpr long long kDefaultPtolemyBound = 64;

namespace detail {

// Walks every required connector of every crossing member pair.  Explicit
// pairs and anchored family connectors are decided exactly; genuinely
// two-parameter coverage falls back to a bounded verification unless a
// whole-region substitution into a covering family is found.
class PtolemyChecker {
 public:
  PtolemyChecker(const ZModel& z, const DiagonalSet& s, long long bound)
      : z_(z), s_(s), bound_(bound) {}

  Certificate run() {
    const auto& ex = s_.explicit_members;
    for (size_t i = 0; i < ex.size() && !failure_; ++i)
      for (size_t j = i + 1; j < ex.size() && !failure_; ++j)
        if (crosses(z_, ex[i], ex[j])) check_concrete_pair(ex[i], ex[j]);
    for (const auto& e : ex) {
      for (const auto& g : s_.families) {
        if (failure_) break;
        for (const IntInterval& region : diagonal_family_regions(z_, e, g)) {
          for (const Vertex& anchor : {e.a, e.b})
            for (const VertexTerm* t : {&g.left, &g.right})
              if (!failure_) connector_1(anchor, *t, region);
        }
      }
    }
    for (size_t i = 0; i < s_.families.size() && !failure_; ++i) {
      for (size_t j = i; j < s_.families.size() && !failure_; ++j) {
        const auto& f = s_.families[i];
        const auto& g = s_.families[j];
        long long sn = family_step(f), sm = family_step(g);
        for (const auto& branch : family_pair_branches(z_, f, g, i == j)) {
          if (!feasible_2param(branch, sn, sm)) continue;
          for (const VertexTerm* tf : {&f.left, &f.right})
            for (const VertexTerm* tg : {&g.left, &g.right})
              if (!failure_) connector_2(*tf, *tg, branch, sn, sm);
        }
      }
    }
    if (failure_) return *failure_;
    if (bounded_)
      return Certificate::up_to("ptolemy", bound_,
                                "two-parameter coverage checked up to bound");
    return Certificate::pass("ptolemy");
  }

 private:
  void check_concrete_pair(const Diagonal& x, const Diagonal& y) {
    for (const Vertex& a : {x.a, x.b})
      for (const Vertex& b : {y.a, y.b})
        if (!require_concrete(a, b)) return;
  }

  // True when the connector is satisfied (or is not a diagonal at all).
  bool require_concrete(const Vertex& a, const Vertex& b) {
    auto d = try_diagonal(z_, a, b);
    if (!d) return true;
    if (set_contains(z_, s_, *d)) return true;
    failure_ = Certificate::fail("ptolemy", WitnessDiagonal{*d},
                                 "connecting diagonal missing from the set");
    return false;
  }

  // Coverage of {anchor, term(m)} for every m in the region.
  void connector_1(const Vertex& anchor, const VertexTerm& term,
                   const IntInterval& region) {
    if (!region.feasible) return;
    if (!term.is_tail()) {
      require_concrete(anchor, Vertex{term.arc, term.base});
      return;
    }
    if (region.hi && *region.hi - region.lo <= bound_) {
      for (long long m = region.lo; m <= *region.hi; ++m)
        if (!require_concrete(anchor, term.at(z_, m))) return;
      return;
    }
    if (covered_by_substitution(anchor, term, region.lo, region.hi))
      return;  // exact: every instantiation is a member of a covering family
    long long cap = region.lo + bound_;
    if (region.hi && *region.hi < cap) cap = *region.hi;
    for (long long m = region.lo; m <= cap; ++m)
      if (!require_concrete(anchor, term.at(z_, m))) return;
    bounded_ = true;
  }

  // Whole-region coverage by one family (Fixed anchor + matching tail).
  // A successful match also certifies that no instantiation degenerates,
  // since families only contain valid diagonals.
  bool covered_by_substitution(const Vertex& anchor, const VertexTerm& term,
                               long long m_lo,
                               std::optional<long long> m_hi) const {
    for (const auto& h : s_.families) {
      for (auto [ha, ht] : {std::pair{h.left, h.right}, {h.right, h.left}}) {
        if (ha.is_tail() || Vertex{ha.arc, ha.base} != anchor) continue;
        if (!ht.is_tail() || ht.arc != term.arc) continue;
        long long ct = term.coef(), ch = ht.coef();
        if (ct % ch != 0) continue;
        long long delta = term.base - ht.base;
        if ((ct * m_lo + delta) % ch != 0) continue;
        long long slope = ct / ch;
        auto k_at = [&](long long m) { return (ct * m + delta) / ch; };
        if (slope > 0) {
          if (k_at(m_lo) >= h.min_n) return true;
        } else if (m_hi && k_at(*m_hi) >= h.min_n) {
          return true;
        }
      }
    }
    return false;
  }

  // Coverage of {tf(n), tg(m)} over a feasible two-parameter region.
  void connector_2(const VertexTerm& tf, const VertexTerm& tg,
                   const std::vector<Atom2>& region, long long sn,
                   long long sm) {
    if (!tf.is_tail() && !tg.is_tail()) {
      require_concrete(Vertex{tf.arc, tf.base}, Vertex{tg.arc, tg.base});
      return;
    }
    if (!tf.is_tail()) {
      auto mw = solve_2param_m_first(region, sn, sm);
      if (!mw) return;
      if (covered_by_substitution(Vertex{tf.arc, tf.base}, tg, mw->second,
                                  std::nullopt))
        return;
      bounded_enumeration(tf, tg, region, sn, sm);
      return;
    }
    if (!tg.is_tail()) {
      auto nw = solve_2param(region, sn, sm);
      if (!nw) return;
      if (covered_by_substitution(Vertex{tg.arc, tg.base}, tf, nw->first,
                                  std::nullopt))
        return;
      bounded_enumeration(tf, tg, region, sn, sm);
      return;
    }
    if (sn == sm && line_covered(tf, tg, region, sn)) return;
    bounded_enumeration(tf, tg, region, sn, sm);
  }

  // Equal-step pairs whose region lies on a single line m = n + delta can
  // be reduced to one parameter and matched against covering families.
  bool line_covered(const VertexTerm& tf, const VertexTerm& tg,
                    const std::vector<Atom2>& region, long long s) {
    auto w = solve_2param(region, s, s);
    if (!w) return true;  // empty region: nothing to cover
    long long delta = w->second - w->first;
    auto off_line = [&](long long lo_excess) {
      std::vector<Atom2> r = region;
      // m - n >= delta + 1  <->  s*n - s*m <= -s*(delta+1)  (lo_excess=+1)
      // m - n <= delta - 1  <->  s*m - s*n <= s*(delta-1)   (lo_excess=-1)
      if (lo_excess > 0)
        r.push_back({s, -s, -s * (delta + 1)});
      else
        r.push_back({-s, s, s * (delta - 1)});
      return feasible_2param(r, s, s);
    };
    if (off_line(+1) || off_line(-1)) return false;
    // Region is {(n, n + delta)}; restrict the atoms to the line.
    std::vector<Atom2> on_line;
    for (const Atom2& at : region)
      on_line.push_back({at.a + at.b, 0, at.c - at.b * delta});
    IntInterval nr = solve_1param(on_line);
    if (!nr.feasible) return true;
    long long cf = tf.coef(), cg = tg.coef();
    long long base_g = tg.base + cg * delta;  // value of tg at m = n + delta
    for (const auto& h : s_.families) {
      for (auto [h1, h2] : {std::pair{h.left, h.right}, {h.right, h.left}}) {
        if (!h1.is_tail() || !h2.is_tail()) continue;
        if (h1.arc != tf.arc || h2.arc != tg.arc) continue;
        long long c1 = h1.coef(), c2 = h2.coef();
        // One parameter k with h1(k) = tf(n) and h2(k) = tg(n + delta)
        // for every n in range: affine equality plus integrality.
        if (cf % c1 != 0) continue;
        long long slope = cf / c1;
        if (cg != c2 * slope) continue;
        if ((cf * nr.lo + tf.base - h1.base) % c1 != 0) continue;
        long long k0 = (cf * nr.lo + tf.base - h1.base) / c1;
        if (h2.base + c2 * k0 != base_g + cg * nr.lo) continue;
        if (slope > 0) {
          if (k0 >= h.min_n) return true;
        } else if (nr.hi) {
          long long k_hi = (cf * *nr.hi + tf.base - h1.base) / c1;
          if (k_hi >= h.min_n) return true;
        }
      }
    }
    return false;
  }

  void bounded_enumeration(const VertexTerm& tf, const VertexTerm& tg,
                           const std::vector<Atom2>& region, long long sn,
                           long long sm) {
    auto w = solve_2param(region, sn, sm);
    if (!w) return;
    long long n0 = w->first;
    bool clipped = false;
    for (long long n = n0; n <= n0 + bound_; ++n) {
      std::optional<long long> m_lo, m_hi;
      bool dead = false;
      for (const Atom2& at : region) {
        I128 rest = static_cast<I128>(at.c) - static_cast<I128>(at.a) * n;
        if (at.b == 0) {
          if (rest < 0) dead = true;
        } else if (at.b > 0) {
          long long q = static_cast<long long>(floor_div<I128>(rest, at.b));
          if (!m_hi || *m_hi > q) m_hi = q;
        } else {
          long long q = static_cast<long long>(ceil_div<I128>(rest, at.b));
          if (!m_lo || *m_lo < q) m_lo = q;
        }
      }
      if (dead || !m_lo) continue;
      if (m_hi && *m_hi < *m_lo) continue;
      long long cap = *m_lo + bound_;
      if (m_hi && *m_hi < cap)
        cap = *m_hi;
      else if (!m_hi || *m_hi > cap)
        clipped = true;
      for (long long m = *m_lo; m <= cap; ++m) {
        auto d = try_diagonal(z_, tf.at(z_, n), tg.at(z_, m));
        if (!d) continue;
        if (!set_contains(z_, s_, *d)) {
          failure_ = Certificate::fail("ptolemy", WitnessDiagonal{*d},
                                       "connecting diagonal missing from the set");
          return;
        }
      }
    }
    // Was there region beyond the n box?
    std::vector<Atom2> beyond = region;
    beyond.push_back({-1, 0, -(n0 + bound_ + 1)});
    if (clipped || feasible_2param(beyond, sn, sm)) bounded_ = true;
  }

  const ZModel& z_;
  const DiagonalSet& s_;
  long long bound_;
  bool bounded_ = false;
  std::optional<Certificate> failure_;
};

}  // namespace detail

// Whenever two members cross, every connecting endpoint pair that is a
// diagonal must again be a member.
inline Certificate check_ptolemy(const ZModel& z, const DiagonalSet& s,
                                 long long bound = kDefaultPtolemyBound) {
  if (bound < 1) throw InvalidInputError("ptolemy bound must be >= 1");
  return detail::PtolemyChecker(z, s, bound).run();
}

}  // namespace infgon
