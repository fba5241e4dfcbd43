#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "infgon/errors.hpp"

namespace infgon {

using Pos = std::int64_t;

// Positions are plain 64-bit integers, capped well below the overflow
// range so that every derived quantity (steps, window offsets, solver
// intermediates) fits comfortably in 128-bit arithmetic.
inline constexpr Pos kMaxPos = Pos{1} << 40;
inline constexpr Pos kMaxStep = 1'000'000;

// A vertex of the infinity-gon: arc index and position within the arc,
// increasing anticlockwise.  Arc indices are reduced mod N at the points
// where vertices enter the system (model accessors, parsers).
struct Vertex {
  int arc = 0;
  Pos pos = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// A proper limit point of the vertex set.  Limit point i sits immediately
// clockwise of arc i; arc i runs from limit point i to limit point i+1.
struct LimitPoint {
  int index = 0;
  friend auto operator<=>(const LimitPoint&, const LimitPoint&) = default;
};

// A point of the closure of the vertex set: vertex or limit point.
struct BoundaryPoint {
  std::variant<Vertex, LimitPoint> value;

  BoundaryPoint() : value(Vertex{}) {}
  BoundaryPoint(Vertex v) : value(v) {}
  BoundaryPoint(LimitPoint l) : value(l) {}

  bool is_vertex() const { return std::holds_alternative<Vertex>(value); }
  bool is_limit() const { return std::holds_alternative<LimitPoint>(value); }
  const Vertex& vertex() const { return std::get<Vertex>(value); }
  const LimitPoint& limit() const { return std::get<LimitPoint>(value); }

  friend auto operator<=>(const BoundaryPoint&, const BoundaryPoint&) = default;
};

// Linear sort key after cutting the circle at limit point 0:
// L0, arc-0 vertices by pos, L1, arc-1 vertices, ..., wrapping to L0.
// Limit point i gets station 2i, a vertex in arc i gets station 2i+1;
// lexicographic (station, pos) is the cut order.
struct CutKey {
  int station = 0;
  Pos pos = 0;
  friend auto operator<=>(const CutKey&, const CutKey&) = default;
};

inline std::string to_string(const Vertex& v) {
  return std::to_string(v.arc) + ":" + std::to_string(v.pos);
}

inline std::string to_string(const LimitPoint& l) {
  return "L" + std::to_string(l.index);
}

inline std::string to_string(const BoundaryPoint& p) {
  return p.is_vertex() ? to_string(p.vertex()) : to_string(p.limit());
}

// The canonical presentation of an admissible vertex set: N >= 1 limit
// points, one bi-infinite arc of vertices between consecutive ones.
class ZModel {
 public:
  explicit ZModel(int limit_count) : n_(limit_count) {
    if (limit_count < 1)
      throw InvalidInputError("ZModel requires at least one limit point");
  }

  int limit_count() const { return n_; }

  Vertex vertex(long long arc, Pos pos) const {
    long long a = arc % n_;
    if (a < 0) a += n_;
    if (pos > kMaxPos || pos < -kMaxPos)
      throw InvalidInputError("vertex position exceeds the supported range");
    return Vertex{static_cast<int>(a), pos};
  }

  LimitPoint limit(long long index) const {
    long long a = index % n_;
    if (a < 0) a += n_;
    return LimitPoint{static_cast<int>(a)};
  }

  CutKey key(const BoundaryPoint& p) const {
    if (p.is_limit()) return CutKey{2 * p.limit().index, 0};
    const Vertex& v = p.vertex();
    return CutKey{2 * v.arc + 1, v.pos};
  }

  static Vertex succ(const Vertex& v) { return Vertex{v.arc, v.pos + 1}; }
  static Vertex pred(const Vertex& v) { return Vertex{v.arc, v.pos - 1}; }

  // The limit of v, v+, v++, ...; the closed interval from v to it
  // contains no other limit point.
  LimitPoint limit_up(const Vertex& v) const { return limit(v.arc + 1); }
  // The limit of v, v-, v--, ...
  LimitPoint limit_down(const Vertex& v) const { return limit(v.arc); }

  bool neighbours_or_equal(const Vertex& a, const Vertex& b) const {
    if (a.arc != b.arc) return false;
    Pos d = a.pos - b.pos;
    return d >= -1 && d <= 1;
  }

  // True iff traversing anticlockwise from points[0] the points are met in
  // list order.  Invariant under rotation of the list.
  bool cyclic_ordered(std::span<const BoundaryPoint> points) const {
    if (points.size() < 3)
      throw InvalidInputError("cyclic_ordered needs at least 3 points");
    std::vector<CutKey> keys;
    keys.reserve(points.size());
    for (const auto& p : points) keys.push_back(key(p));
    std::set<CutKey> distinct(keys.begin(), keys.end());
    if (distinct.size() != keys.size())
      throw InvalidInputError("cyclic_ordered requires pairwise distinct points");
    // In the cut order the listing must wrap the circle exactly once.
    int descents = 0;
    for (size_t i = 0; i < keys.size(); ++i) {
      const CutKey& a = keys[i];
      const CutKey& b = keys[(i + 1) % keys.size()];
      if (b < a) ++descents;
    }
    return descents == 1;
  }

  bool cyclic_ordered(std::initializer_list<BoundaryPoint> points) const {
    std::vector<BoundaryPoint> v(points);
    return cyclic_ordered(std::span<const BoundaryPoint>(v));
  }

  // Strict cyclic order of three distinct points; no validation.
  bool cyclic3(const BoundaryPoint& a, const BoundaryPoint& b,
               const BoundaryPoint& c) const {
    CutKey ka = key(a), kb = key(b), kc = key(c);
    int descents = (kb < ka) + (kc < kb) + (ka < kc);
    return descents == 1;
  }

  // Membership in the anticlockwise arc from a to b.  Closure of each end
  // is controlled by the flags; [a,b] has both true.
  bool in_interval(const BoundaryPoint& x, const BoundaryPoint& a,
                   const BoundaryPoint& b, bool closed_left = true,
                   bool closed_right = true) const {
    if (a == b) throw InvalidInputError("degenerate interval [a,a]");
    if (x == a) return closed_left;
    if (x == b) return closed_right;
    return cyclic3(a, x, b);
  }

  bool in_open_interval(const BoundaryPoint& x, const BoundaryPoint& a,
                        const BoundaryPoint& b) const {
    return in_interval(x, a, b, false, false);
  }

  // Linear order on the circle cut at `base` (base itself is minimal).
  bool leq_from(const BoundaryPoint& base, const BoundaryPoint& p,
                const BoundaryPoint& q) const {
    if (p == q) return true;
    if (p == base) return true;
    if (q == base) return false;
    return cyclic3(base, p, q);
  }

 private:
  int n_;
};

}  // namespace infgon
