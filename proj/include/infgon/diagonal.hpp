#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "infgon/cyclic.hpp"
#include "infgon/errors.hpp"
#include "infgon/intmath.hpp"

namespace infgon {

// An unordered pair of non-neighbouring vertices, stored in cut order so
// that equality ignores endpoint order.
struct Diagonal {
  Vertex a, b;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

inline std::string to_string(const Diagonal& d) {
  return "{" + to_string(d.a) + "," + to_string(d.b) + "}";
}

inline Diagonal make_diagonal(const ZModel& z, Vertex x, Vertex y) {
  if (x == y || z.neighbours_or_equal(x, y))
    throw NotADiagonalError("endpoints " + to_string(x) + "," + to_string(y) +
                            " are equal or neighbouring");
  if (z.key(BoundaryPoint{y}) < z.key(BoundaryPoint{x})) std::swap(x, y);
  return Diagonal{x, y};
}

inline std::optional<Diagonal> try_diagonal(const ZModel& z, Vertex x, Vertex y) {
  if (x == y || z.neighbours_or_equal(x, y)) return std::nullopt;
  if (z.key(BoundaryPoint{y}) < z.key(BoundaryPoint{x})) std::swap(x, y);
  return Diagonal{x, y};
}

// Two diagonals cross iff their endpoints interleave along the circle;
// a shared endpoint never crosses.
inline bool crosses(const ZModel& z, const Diagonal& x, const Diagonal& y) {
  if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) return false;
  bool a_in = z.in_open_interval(BoundaryPoint{y.a}, BoundaryPoint{x.a},
                                 BoundaryPoint{x.b});
  bool b_in = z.in_open_interval(BoundaryPoint{y.b}, BoundaryPoint{x.a},
                                 BoundaryPoint{x.b});
  return a_in != b_in;
}

enum class TermKind { Fixed, TailUp, TailDown };

// One endpoint of a parameterised diagonal family: a fixed vertex, or an
// arithmetic tail base + step*n walking up (towards the arc's upper limit
// point) or down.
struct VertexTerm {
  TermKind kind = TermKind::Fixed;
  int arc = 0;
  Pos base = 0;   // the vertex position for Fixed, the offset for tails
  Pos step = 1;

  static VertexTerm fixed(Vertex v) { return {TermKind::Fixed, v.arc, v.pos, 0}; }
  static VertexTerm tail_up(int arc, Pos base, Pos step = 1) {
    return {TermKind::TailUp, arc, base, step};
  }
  static VertexTerm tail_down(int arc, Pos base, Pos step = 1) {
    return {TermKind::TailDown, arc, base, step};
  }

  bool is_tail() const { return kind != TermKind::Fixed; }

  // Coefficient of the parameter in the endpoint position.
  Pos coef() const {
    switch (kind) {
      case TermKind::Fixed: return 0;
      case TermKind::TailUp: return step;
      case TermKind::TailDown: return -step;
    }
    return 0;
  }

  Vertex at(const ZModel& z, long long n) const {
    return z.vertex(arc, base + coef() * n);
  }

  friend auto operator<=>(const VertexTerm&, const VertexTerm&) = default;
};

inline std::string to_string(const VertexTerm& t) {
  switch (t.kind) {
    case TermKind::Fixed:
      return std::to_string(t.arc) + ":" + std::to_string(t.base);
    case TermKind::TailUp:
      return std::to_string(t.arc) + ":" + std::to_string(t.base) + "+" +
             (t.step == 1 ? "" : std::to_string(t.step)) + "n";
    case TermKind::TailDown:
      return std::to_string(t.arc) + ":" + std::to_string(t.base) + "-" +
             (t.step == 1 ? "" : std::to_string(t.step)) + "n";
  }
  return {};
}

// A one-parameter arithmetic family of diagonals {left(n), right(n)},
// n >= min_n.  At least one endpoint is a tail, and every instantiation
// is a valid diagonal (checked at construction).
struct DiagonalFamily {
  VertexTerm left, right;
  long long min_n = 0;

  friend auto operator<=>(const DiagonalFamily&, const DiagonalFamily&) = default;
};

inline std::string to_string(const DiagonalFamily& f) {
  std::string s = "{" + to_string(f.left) + "," + to_string(f.right) + "}";
  if (f.min_n != 0) s += "[n>=" + std::to_string(f.min_n) + "]";
  return s;
}

// Validates the family invariants and returns the parameter of an invalid
// instantiation if one exists.
inline std::optional<long long> family_invalid_at(const ZModel& z,
                                                  const DiagonalFamily& f) {
  (void)z;
  if (f.left.arc != f.right.arc) return std::nullopt;
  // Same arc: the instantiation is invalid when the positions differ by
  // at most 1.  delta(n) = c*n + d.
  long long c = f.left.coef() - f.right.coef();
  long long d = f.left.base - f.right.base;
  if (c == 0) {
    if (d >= -1 && d <= 1) return f.min_n;
    return std::nullopt;
  }
  for (long long target = -1; target <= 1; ++target) {
    long long num = target - d;
    if (num % c != 0) continue;
    long long n = num / c;
    if (n >= f.min_n) return n;
  }
  return std::nullopt;
}

inline DiagonalFamily make_family(const ZModel& z, VertexTerm left,
                                  VertexTerm right, long long min_n = 0) {
  for (const VertexTerm* t : {&left, &right}) {
    if (t->arc < 0 || t->arc >= z.limit_count())
      throw InvalidInputError("term arc index out of range");
    if (t->is_tail() && (t->step < 1 || t->step > kMaxStep))
      throw InvalidInputError("tail step must be in [1, " +
                              std::to_string(kMaxStep) + "]");
    if (t->base > kMaxPos || t->base < -kMaxPos)
      throw InvalidInputError("term base exceeds the supported range");
  }
  if (!left.is_tail() && !right.is_tail())
    throw InvalidInputError("a family needs at least one tail endpoint");
  if (left.is_tail() && right.is_tail() && left.step != right.step)
    throw InvalidInputError("the two tails of a family must share one step");
  if (min_n < 0) throw InvalidInputError("min_n must be >= 0");
  DiagonalFamily f{left, right, min_n};
  if (auto bad = family_invalid_at(z, f))
    throw NotADiagonalError("family " + to_string(f) +
                            " degenerates at n=" + std::to_string(*bad));
  return f;
}

inline Diagonal family_member(const ZModel& z, const DiagonalFamily& f,
                              long long n) {
  if (n < f.min_n)
    throw OutOfRangeError("family parameter " + std::to_string(n) +
                          " below min_n=" + std::to_string(f.min_n));
  return make_diagonal(z, f.left.at(z, n), f.right.at(z, n));
}

// Parameters at which a term takes the value v: none, one, or all n.
struct TermMatch {
  bool any = false;
  std::optional<long long> exact;
  bool none() const { return !any && !exact; }
};

inline TermMatch match_term(const VertexTerm& t, const Vertex& v) {
  if (t.kind == TermKind::Fixed)
    return {t.arc == v.arc && t.base == v.pos, std::nullopt};
  if (t.arc != v.arc) return {};
  long long c = t.coef();
  long long num = v.pos - t.base;
  if (num % c != 0) return {};
  return {false, num / c};
}

inline std::optional<long long> family_match(const ZModel& z,
                                             const DiagonalFamily& f,
                                             const Diagonal& d) {
  (void)z;
  for (auto [u, v] : {std::pair{d.a, d.b}, std::pair{d.b, d.a}}) {
    TermMatch ml = match_term(f.left, u);
    TermMatch mr = match_term(f.right, v);
    if (ml.none() || mr.none()) continue;
    std::optional<long long> n;
    if (ml.exact && mr.exact) {
      if (*ml.exact != *mr.exact) continue;
      n = *ml.exact;
    } else if (ml.exact) {
      n = *ml.exact;
    } else if (mr.exact) {
      n = *mr.exact;
    } else {
      n = f.min_n;  // both fixed cannot happen for valid families
    }
    if (*n >= f.min_n) return n;
  }
  return std::nullopt;
}

// A finite union of explicit diagonals and arithmetic families: the
// engine's presentation of a possibly infinite set of diagonals.
struct DiagonalSet {
  std::vector<Diagonal> explicit_members;
  std::vector<DiagonalFamily> families;

  bool empty() const { return explicit_members.empty() && families.empty(); }
};

inline bool set_contains(const ZModel& z, const DiagonalSet& s,
                         const Diagonal& d) {
  for (const auto& e : s.explicit_members)
    if (e == d) return true;
  for (const auto& f : s.families)
    if (family_match(z, f, d)) return true;
  return false;
}

// Parameter range over which |term position| <= w, intersected with
// n >= min_n.  Empty range encoded as lo > hi.
struct ParamRange {
  long long lo = 0, hi = -1;
  bool empty() const { return lo > hi; }
};

inline ParamRange family_window_range(const DiagonalFamily& f, Pos w) {
  long long lo = f.min_n;
  long long hi = std::numeric_limits<long long>::max();
  for (const VertexTerm* t : {&f.left, &f.right}) {
    if (!t->is_tail()) {
      if (t->base > w || t->base < -w) return {0, -1};
      continue;
    }
    // -w <= base + c*n <= w
    long long c = t->coef();
    if (c > 0) {
      lo = std::max(lo, ceil_div<long long>(-w - t->base, c));
      hi = std::min(hi, floor_div<long long>(w - t->base, c));
    } else {
      lo = std::max(lo, ceil_div<long long>(w - t->base, c));
      hi = std::min(hi, floor_div<long long>(-w - t->base, c));
    }
  }
  return {lo, hi};
}

// All members whose endpoint positions have absolute value <= w, in
// canonical order.
inline std::set<Diagonal> truncate_window(const ZModel& z, const DiagonalSet& s,
                                          Pos w) {
  std::set<Diagonal> out;
  for (const auto& d : s.explicit_members) {
    if (d.a.pos >= -w && d.a.pos <= w && d.b.pos >= -w && d.b.pos <= w)
      out.insert(d);
  }
  for (const auto& f : s.families) {
    ParamRange r = family_window_range(f, w);
    for (long long n = r.lo; n <= r.hi; ++n) out.insert(family_member(z, f, n));
  }
  return out;
}

// All diagonals of the model with endpoint positions within the window.
inline std::vector<Diagonal> window_diagonals(const ZModel& z, Pos w) {
  std::vector<Vertex> verts;
  for (int arc = 0; arc < z.limit_count(); ++arc)
    for (Pos p = -w; p <= w; ++p) verts.push_back(z.vertex(arc, p));
  std::vector<Diagonal> out;
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (auto d = try_diagonal(z, verts[i], verts[j])) out.push_back(*d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace infgon
