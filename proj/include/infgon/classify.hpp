#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "infgon/certificate.hpp"
#include "infgon/conditions.hpp"
#include "infgon/crossing.hpp"
#include "infgon/hom.hpp"
#include "infgon/ncwindow.hpp"
#include "infgon/ptolemy.hpp"
#include "infgon/suprema.hpp"

namespace infgon {

inline constexpr long long kPrecoverIterationCap = 10'000;

// First-half-of-a-torsion-pair test: PC1, PC2 and the Ptolemy condition.
inline Certificate is_torsion_first_half(const ZModel& z, const DiagonalSet& s,
                                         long long bound = kDefaultPtolemyBound) {
  return Certificate::all_of(
      "torsion",
      {check_pc1(z, s), check_pc2(z, s), check_ptolemy(z, s, bound)});
}

// Cluster tilting test: pairwise noncrossing and the per-limit-point
// convergence features are decided exactly; maximality is certified on
// the window (its sub-certificate carries the bound).
inline Certificate is_cluster_tilting(const ZModel& z, const DiagonalSet& s,
                                      Pos w = 32) {
  if (w < 2) throw InvalidInputError("is_cluster_tilting requires W >= 2");
  std::vector<Certificate> subs;

  if (auto cross = find_crossing_members(z, s))
    subs.push_back(Certificate::fail("noncrossing",
                                     WitnessPair{cross->x, cross->y},
                                     "members cross"));
  else
    subs.push_back(Certificate::pass("noncrossing"));

  FeatureReport features = detect_features(z, s);
  Certificate feat = Certificate::pass("features");
  for (int a = 0; a < z.limit_count(); ++a) {
    if (!features.fountain_or_leapfrog(a)) {
      feat = Certificate::fail(
          "features",
          WitnessLimitPair{LimitDatum{BoundaryPoint{LimitPoint{a}}, Side::Below},
                           LimitDatum{BoundaryPoint{LimitPoint{a}}, Side::Above}},
          "limit point " + to_string(LimitPoint{a}) +
              " has neither a fountain nor a leapfrog");
      break;
    }
  }
  subs.push_back(std::move(feat));

  Certificate maximality = Certificate::up_to("maximality", w);
  for (const Diagonal& d : window_diagonals(z, w)) {
    if (set_contains(z, s, d)) continue;
    if (!diagonal_crosses_set(z, s, d)) {
      maximality = Certificate::fail("maximality", WitnessDiagonal{d},
                                     "window diagonal crosses no member");
      break;
    }
  }
  subs.push_back(std::move(maximality));

  Certificate top;
  top.name = "cluster-tilting";
  for (const Certificate& c : subs) {
    if (!c.holds()) {
      top.verdict = Verdict::Fails;
      top.witness = c.witness;
      top.note = c.name + (c.note.empty() ? "" : ": " + c.note);
      break;
    }
  }
  if (top.holds()) {
    top.verdict = Verdict::Holds;
    top.note = "maximality up to W=" + std::to_string(w);
  }
  top.trace = std::move(subs);
  return top;
}

// The iterative precover construction.  Requires PC1 and PC2 (checked);
// the returned diagonals are members through which every morphism from a
// member object to the target factors.
inline std::vector<Diagonal> precover(const ZModel& z, const DiagonalSet& s,
                                      const Diagonal& y,
                                      long long iteration_cap = kPrecoverIterationCap) {
  Certificate pc1 = check_pc1(z, s), pc2 = check_pc2(z, s);
  if (!pc1.holds() || !pc2.holds())
    throw PreconditionError(
        "precover requires PC1 and PC2; violated with witness " +
        to_string((pc1.holds() ? pc2 : pc1).witness));

  const Vertex y0 = y.a, y1 = y.b;
  const Vertex y1pp = ZModel::succ(ZModel::succ(y1));
  Vertex s0 = ZModel::succ(y0), s1 = ZModel::succ(y0);
  std::vector<Diagonal> out;
  for (long long step = 0;; ++step) {
    if (step >= iteration_cap)
      throw NonTerminationError(
          "precover construction exceeded its iteration cap; last pair " +
          to_string(Diagonal{s0, s1}));
    if (s0 == y1pp || s1 == y1) break;
    Vertex t0 = ZModel::pred(s0), t1 = ZModel::succ(s1);
    auto w0 = sup_w(z, s, y0, y1, t0, t1, WKind::W0);
    if (!w0) break;
    if (!w0->is_vertex())
      throw PreconditionError(
          "W0 supremum is a limit point; the set cannot satisfy PC1/PC2");
    s0 = w0->vertex();
    auto w1 = sup_w(z, s, y0, y1, t0, t1, WKind::W1, s0);
    if (!w1)
      throw Error("precover: W1 empty while W0 nonempty");
    if (!w1->is_vertex())
      throw PreconditionError(
          "W1 supremum is a limit point; the set cannot satisfy PC1/PC2");
    s1 = w1->vertex();
    out.push_back(make_diagonal(z, s0, s1));
  }
  return out;
}

namespace detail {

// Partner endpoints of `anchor` among members, instantiating family tails
// only within |pos| <= radius.
inline std::vector<Vertex> member_partners(const ZModel& z, const DiagonalSet& s,
                                           const Vertex& anchor, Pos radius) {
  std::vector<Vertex> out;
  for (const auto& d : s.explicit_members) {
    if (d.a == anchor) out.push_back(d.b);
    if (d.b == anchor) out.push_back(d.a);
  }
  for (const auto& f : s.families) {
    for (auto [ta, tw] : {std::pair{f.left, f.right}, {f.right, f.left}}) {
      TermMatch m = match_term(ta, anchor);
      if (m.none()) continue;
      if (m.exact) {
        if (*m.exact >= f.min_n) out.push_back(tw.at(z, *m.exact));
        continue;
      }
      PosPiece window{-radius, radius};
      auto r = tail_range_in_piece(tw, f.min_n, window);
      if (r.empty || !r.hi) continue;
      for (long long n = r.lo; n <= *r.hi; ++n) out.push_back(tw.at(z, n));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// The apex of the triangle of the triangulation lying on the (a, b) side
// of the member diagonal {a, b}: the vertex c in (a, b) with {a, c} and
// {c, b} both members or polygon edges.
inline std::optional<Vertex> triangle_apex(const ZModel& z, const DiagonalSet& s,
                                           const Vertex& a, const Vertex& b,
                                           Pos radius) {
  auto is_edge_or_member = [&](const Vertex& u, const Vertex& v) {
    if (u.arc == v.arc && (u.pos - v.pos == 1 || v.pos - u.pos == 1)) return true;
    auto d = try_diagonal(z, u, v);
    return d && set_contains(z, s, *d);
  };
  std::vector<Vertex> candidates = member_partners(z, s, a, radius);
  candidates.push_back(ZModel::succ(a));
  for (const Vertex& c : candidates) {
    if (!z.in_open_interval(BoundaryPoint{c}, BoundaryPoint{a}, BoundaryPoint{b}))
      continue;
    if (is_edge_or_member(a, c) && is_edge_or_member(c, b)) return c;
  }
  return std::nullopt;
}

}  // namespace detail

// Removes one diagonal from the set's presentation (splitting a family
// when the diagonal is an interior member).
inline DiagonalSet remove_member(const ZModel& z, const DiagonalSet& s,
                                 const Diagonal& d) {
  DiagonalSet out;
  for (const auto& e : s.explicit_members)
    if (e != d) out.explicit_members.push_back(e);
  for (const auto& f : s.families) {
    auto n = family_match(z, f, d);
    if (!n) {
      out.families.push_back(f);
      continue;
    }
    if (*n - f.min_n > 1'000'000)
      throw Error("family split too large in remove_member");
    for (long long k = f.min_n; k < *n; ++k)
      out.explicit_members.push_back(family_member(z, f, k));
    DiagonalFamily rest = f;
    rest.min_n = *n + 1;
    if (!family_invalid_at(z, rest)) out.families.push_back(rest);
  }
  return out;
}

// Mutation of a cluster tilting set at d: replaces d by the opposite
// diagonal of the quadrilateral formed by its two adjacent triangles.
inline std::pair<DiagonalSet, Diagonal> flip(const ZModel& z,
                                             const DiagonalSet& t,
                                             const Diagonal& d, Pos w = 32) {
  Certificate ct = is_cluster_tilting(z, t, w);
  if (!ct.holds())
    throw PreconditionError("flip requires a cluster tilting set; " + ct.note);
  if (!set_contains(z, t, d))
    throw InvalidInputError("flip: " + to_string(d) + " is not a member");
  Pos radius = std::max({w, d.a.pos < 0 ? -d.a.pos : d.a.pos,
                         d.b.pos < 0 ? -d.b.pos : d.b.pos}) + w;
  auto apex_ab = detail::triangle_apex(z, t, d.a, d.b, radius);
  auto apex_ba = detail::triangle_apex(z, t, d.b, d.a, radius);
  if (!apex_ab || !apex_ba)
    throw Error("flip: adjacent triangles not found within search radius");
  Diagonal replacement = make_diagonal(z, *apex_ab, *apex_ba);
  DiagonalSet out = remove_member(z, t, d);
  out.explicit_members.push_back(replacement);
  return {out, replacement};
}

// No loops or 2-cycles in the quiver of a cluster tilting set, verified
// over window member pairs.
inline Certificate quiver_check(const ZModel& z, const DiagonalSet& t, Pos w = 32) {
  Certificate ct = is_cluster_tilting(z, t, w);
  if (!ct.holds())
    throw PreconditionError("quiver_check requires a cluster tilting set; " +
                            ct.note);
  std::set<Diagonal> window = truncate_window(z, t, w);
  std::vector<Diagonal> members(window.begin(), window.end());
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = i + 1; j < members.size(); ++j) {
      if (hom_dim(z, members[i], members[j]) == 1 &&
          hom_dim(z, members[j], members[i]) == 1)
        return Certificate::fail("quiver", WitnessPair{members[i], members[j]},
                                 "2-cycle between distinct members");
    }
  }
  return Certificate::pass("quiver", "no loops or 2-cycles on window W=" +
                                         std::to_string(w));
}

}  // namespace infgon
