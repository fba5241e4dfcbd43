#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "infgon/diagonal.hpp"
#include "infgon/feasibility.hpp"

namespace infgon {

// The step shared by a family's tail terms; tails of one family must
// agree so that cross-family comparisons have a single coefficient
// magnitude per parameter.
inline long long family_step(const DiagonalFamily& f) {
  if (f.left.is_tail() && f.right.is_tail()) return f.left.step;
  return f.left.is_tail() ? f.left.step : f.right.step;
}

namespace detail {

// An endpoint position linear in one parameter: slot 0 = constant,
// 1 = the n parameter (atom field a), 2 = the m parameter (field b).
struct ParamPos {
  int station = 0;
  long long coef = 0;
  long long base = 0;
  int slot = 0;
};

inline ParamPos term_pos(const ZModel& z, const VertexTerm& t, int slot) {
  (void)z;
  return {2 * t.arc + 1, t.coef(), t.base, t.is_tail() ? slot : 0};
}

inline ParamPos vertex_pos(const Vertex& v) {
  return {2 * v.arc + 1, 0, v.pos, 0};
}

// Appends the strict cut-order comparison p < q to the conjunction;
// returns false if it is constant and violated.
inline bool append_less(std::vector<Atom2>& conj, const ParamPos& p,
                        const ParamPos& q) {
  if (p.station != q.station) return p.station < q.station;
  Atom2 at;
  if (p.slot == 1) at.a += p.coef;
  if (p.slot == 2) at.b += p.coef;
  if (q.slot == 1) at.a -= q.coef;
  if (q.slot == 2) at.b -= q.coef;
  at.c = q.base - p.base - 1;
  if (at.a == 0 && at.b == 0) return at.c >= 0;
  conj.push_back(at);
  return true;
}

// Conjunctions whose union is "the four endpoints are met in cyclic
// order in one of the two interleaving patterns".  Each pattern is
// covered by its four rotations, each a chain of three strict
// comparisons in the cut order.
inline std::vector<std::vector<Atom2>> interleaving_branches(
    const ParamPos& x0, const ParamPos& x1, const ParamPos& y0,
    const ParamPos& y1, const std::vector<Atom2>& base_atoms) {
  std::vector<std::vector<Atom2>> out;
  for (const auto& cycle :
       {std::array{x0, y0, x1, y1}, std::array{x0, y1, x1, y0}}) {
    for (int rot = 0; rot < 4; ++rot) {
      std::vector<Atom2> conj = base_atoms;
      bool alive = true;
      for (int i = 0; i + 1 < 4 && alive; ++i)
        alive = append_less(conj, cycle[(rot + i) % 4], cycle[(rot + i + 1) % 4]);
      if (alive) out.push_back(std::move(conj));
    }
  }
  return out;
}

}  // namespace detail

// Constraint branches describing all (n, m) for which member n of f
// crosses member m of g.  For self comparison (g == f) the parameters
// are additionally required to differ.
inline std::vector<std::vector<Atom2>> family_pair_branches(
    const ZModel& z, const DiagonalFamily& f, const DiagonalFamily& g,
    bool same_family) {
  long long sn = family_step(f), sm = family_step(g);
  std::vector<Atom2> base;
  base.push_back({-1, 0, -f.min_n});
  base.push_back({0, -1, -g.min_n});
  auto x0 = detail::term_pos(z, f.left, 1);
  auto x1 = detail::term_pos(z, f.right, 1);
  auto y0 = detail::term_pos(z, g.left, 2);
  auto y1 = detail::term_pos(z, g.right, 2);
  std::vector<std::vector<Atom2>> out;
  if (same_family) {
    for (Atom2 split : {Atom2{sn, -sm, -sn}, Atom2{-sn, sm, -sm}}) {
      auto with = base;
      with.push_back(split);
      for (auto& br : detail::interleaving_branches(x0, x1, y0, y1, with))
        out.push_back(std::move(br));
    }
  } else {
    out = detail::interleaving_branches(x0, x1, y0, y1, base);
  }
  return out;
}

// Least witness (n, m), lexicographically, of a crossing between two
// families, or nullopt when no instantiation pair crosses.
inline std::optional<std::pair<long long, long long>> family_pair_witness(
    const ZModel& z, const DiagonalFamily& f, const DiagonalFamily& g,
    bool same_family) {
  long long sn = family_step(f), sm = family_step(g);
  std::optional<std::pair<long long, long long>> best;
  for (const auto& br : family_pair_branches(z, f, g, same_family)) {
    auto w = solve_2param(br, sn, sm);
    if (w && (!best || *w < *best)) best = w;
  }
  return best;
}

// Parameter intervals over which members of f cross the fixed diagonal d.
inline std::vector<IntInterval> diagonal_family_regions(const ZModel& z,
                                                        const Diagonal& d,
                                                        const DiagonalFamily& f) {
  std::vector<Atom2> base;
  base.push_back({-1, 0, -f.min_n});
  auto x0 = detail::term_pos(z, f.left, 1);
  auto x1 = detail::term_pos(z, f.right, 1);
  auto y0 = detail::vertex_pos(d.a);
  auto y1 = detail::vertex_pos(d.b);
  std::vector<IntInterval> out;
  for (const auto& br : detail::interleaving_branches(x0, x1, y0, y1, base)) {
    IntInterval iv = solve_1param(br);
    if (iv.feasible) out.push_back(iv);
  }
  return out;
}

inline std::optional<long long> diagonal_family_witness(const ZModel& z,
                                                        const Diagonal& d,
                                                        const DiagonalFamily& f) {
  std::optional<long long> best;
  for (const auto& iv : diagonal_family_regions(z, d, f))
    if (!best || iv.lo < *best) best = iv.lo;
  return best;
}

// A member of s crossing d, if any; family members are searched exactly.
inline std::optional<Diagonal> set_crosser_of(const ZModel& z,
                                              const DiagonalSet& s,
                                              const Diagonal& d) {
  for (const auto& e : s.explicit_members)
    if (crosses(z, e, d)) return e;
  for (const auto& f : s.families)
    if (auto n = diagonal_family_witness(z, d, f))
      return family_member(z, f, *n);
  return std::nullopt;
}

inline bool diagonal_crosses_set(const ZModel& z, const DiagonalSet& s,
                                 const Diagonal& d) {
  return set_crosser_of(z, s, d).has_value();
}

// First crossing pair of members, scanning explicit x explicit,
// explicit x family, and family x family including self pairs.
struct MemberCrossing {
  Diagonal x, y;
};

inline std::optional<MemberCrossing> find_crossing_members(
    const ZModel& z, const DiagonalSet& s) {
  const auto& ex = s.explicit_members;
  for (size_t i = 0; i < ex.size(); ++i)
    for (size_t j = i + 1; j < ex.size(); ++j)
      if (crosses(z, ex[i], ex[j])) return MemberCrossing{ex[i], ex[j]};
  for (const auto& e : ex)
    for (const auto& f : s.families)
      if (auto n = diagonal_family_witness(z, e, f))
        return MemberCrossing{e, family_member(z, f, *n)};
  for (size_t i = 0; i < s.families.size(); ++i)
    for (size_t j = i; j < s.families.size(); ++j) {
      const auto& f = s.families[i];
      const auto& g = s.families[j];
      if (auto w = family_pair_witness(z, f, g, i == j))
        return MemberCrossing{family_member(z, f, w->first),
                              family_member(z, g, w->second)};
    }
  return std::nullopt;
}

}  // namespace infgon
