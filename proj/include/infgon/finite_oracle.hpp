#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "infgon/crossing.hpp"
#include "infgon/diagonal.hpp"
#include "infgon/ncwindow.hpp"
#include "infgon/ptolemy.hpp"

namespace infgon {

// Brute-force ground truth on a finite P-gon with vertices 0..P-1.
class Polygon {
 public:
  explicit Polygon(int p) : p_(p) {
    if (p < 4) throw InvalidInputError("polygon needs at least 4 vertices");
    for (int i = 0; i < p_; ++i)
      for (int j = i + 2; j < p_; ++j) {
        if (i == 0 && j == p_ - 1) continue;  // wrap edge
        diagonals_.push_back({i, j});
      }
    int d = static_cast<int>(diagonals_.size());
    if (d <= 64) {
      cross_mask_.assign(d, 0);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j && crosses(diagonals_[i], diagonals_[j]))
            cross_mask_[i] |= std::uint64_t{1} << j;
    }
    for (int i = 0; i < d; ++i)
      index_[diagonals_[i]] = i;
  }

  int vertex_count() const { return p_; }
  const std::vector<std::pair<int, int>>& diagonals() const { return diagonals_; }
  int diagonal_count() const { return static_cast<int>(diagonals_.size()); }

  bool crosses(std::pair<int, int> x, std::pair<int, int> y) const {
    auto [a, b] = x;
    auto [c, d] = y;
    if (a == c || a == d || b == c || b == d) return false;
    auto between = [&](int v, int lo, int hi) {
      // strictly inside the anticlockwise arc lo -> hi
      int span = (hi - lo + p_) % p_;
      int off = (v - lo + p_) % p_;
      return off > 0 && off < span;
    };
    return between(c, a, b) != between(d, a, b);
  }

  std::optional<int> diagonal_index(std::pair<int, int> d) const {
    if (d.first > d.second) std::swap(d.first, d.second);
    auto it = index_.find(d);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::uint64_t nc(std::uint64_t x) const {
    require_masks();
    std::uint64_t out = 0;
    for (int j = 0; j < diagonal_count(); ++j)
      if ((cross_mask_[j] & x) == 0) out |= std::uint64_t{1} << j;
    return out;
  }

  bool noncrossing(std::uint64_t x) const {
    require_masks();
    for (int i = 0; i < diagonal_count(); ++i)
      if ((x >> i) & 1)
        if (cross_mask_[i] & x) return false;
    return true;
  }

  bool maximal_noncrossing(std::uint64_t x) const {
    if (!noncrossing(x)) return false;
    for (int j = 0; j < diagonal_count(); ++j)
      if (!((x >> j) & 1) && (cross_mask_[j] & x) == 0) return false;
    return true;
  }

  bool ptolemy(std::uint64_t x) const {
    require_masks();
    for (int i = 0; i < diagonal_count(); ++i) {
      if (!((x >> i) & 1)) continue;
      for (int j = i + 1; j < diagonal_count(); ++j) {
        if (!((x >> j) & 1)) continue;
        if (!((cross_mask_[i] >> j) & 1)) continue;
        auto [a, b] = diagonals_[i];
        auto [c, d] = diagonals_[j];
        for (auto conn : {std::pair{a, c}, {a, d}, {b, c}, {b, d}}) {
          auto idx = diagonal_index(conn);
          if (idx && !((x >> *idx) & 1)) return false;
        }
      }
    }
    return true;
  }

 private:
  void require_masks() const {
    if (cross_mask_.empty())
      throw Error("bitmask operations need a polygon with <= 64 diagonals");
  }

  int p_;
  std::vector<std::pair<int, int>> diagonals_;
  std::vector<std::uint64_t> cross_mask_;
  std::map<std::pair<int, int>, int> index_;
};

struct FiniteReport {
  int polygon = 0;
  bool exhaustive = false;
  std::uint64_t subsets_checked = 0;
  std::uint64_t triangulations = 0;
  std::uint64_t ptolemy_diagrams = 0;
  std::uint64_t nc2_equivalence_failures = 0;
  std::optional<std::uint64_t> first_failure_mask;
};

// Enumerates diagonal subsets (exhaustively by default for small P,
// otherwise by seeded uniform sampling), counting triangulations and
// Ptolemy diagrams and verifying Ptolemy <=> nc^2-fixed on each subset.
inline FiniteReport finite_report(int p, bool exhaustive = true,
                                  std::uint64_t samples = 0,
                                  std::uint64_t seed = 1) {
  Polygon poly(p);
  int d = poly.diagonal_count();
  if (d > 62)
    throw InvalidInputError("finite_report supports at most 62 diagonals");
  if (exhaustive && d > 24)
    throw InvalidInputError("exhaustive enumeration limited to small polygons");
  FiniteReport r;
  r.polygon = p;
  r.exhaustive = exhaustive;
  auto visit = [&](std::uint64_t x) {
    ++r.subsets_checked;
    if (poly.maximal_noncrossing(x)) ++r.triangulations;
    bool pt = poly.ptolemy(x);
    if (pt) ++r.ptolemy_diagrams;
    bool fixed = poly.nc(poly.nc(x)) == x;
    if (pt != fixed) {
      ++r.nc2_equivalence_failures;
      if (!r.first_failure_mask) r.first_failure_mask = x;
    }
  };
  if (exhaustive) {
    std::uint64_t total = std::uint64_t{1} << d;
    for (std::uint64_t x = 0; x < total; ++x) visit(x);
  } else {
    std::mt19937_64 rng(seed);
    std::uint64_t mask = (d >= 64) ? ~std::uint64_t{0}
                                   : ((std::uint64_t{1} << d) - 1);
    for (std::uint64_t i = 0; i < samples; ++i) visit(rng() & mask);
  }
  return r;
}

struct CrossValidationReport {
  int polygon = 0;
  std::uint64_t pairs_compared = 0;
  std::vector<std::string> disagreements;
  bool ok() const { return disagreements.empty(); }
};

// Embeds the window truncation of a presented set into a finite polygon
// and compares the symbolic engine's windowed predicates against brute
// force.  `corrupt` flips the engine's crossing verdict for one pair, for
// fault-injection tests.
inline CrossValidationReport cross_validate(
    const ZModel& z, const DiagonalSet& s, Pos w,
    std::optional<std::pair<Diagonal, Diagonal>> corrupt = std::nullopt) {
  const int per_arc = static_cast<int>(2 * w + 1);
  const int p = z.limit_count() * per_arc;
  Polygon poly(p);
  CrossValidationReport report;
  report.polygon = p;
  auto to_index = [&](const Vertex& v) {
    return v.arc * per_arc + static_cast<int>(v.pos + w);
  };
  auto embed = [&](const Diagonal& d) {
    auto pr = std::pair{to_index(d.a), to_index(d.b)};
    if (pr.first > pr.second) std::swap(pr.first, pr.second);
    return pr;
  };

  // The comparison universe: window diagonals of Z that are also polygon
  // diagonals (the wrap pairs are polygon edges).
  std::vector<Diagonal> universe;
  for (const Diagonal& d : window_diagonals(z, w))
    if (poly.diagonal_index(embed(d))) universe.push_back(d);

  auto engine_crosses = [&](const Diagonal& x, const Diagonal& y) {
    bool value = crosses(z, x, y);
    if (corrupt && ((corrupt->first == x && corrupt->second == y) ||
                    (corrupt->first == y && corrupt->second == x)))
      value = !value;
    return value;
  };

  for (size_t i = 0; i < universe.size(); ++i) {
    for (size_t j = i + 1; j < universe.size(); ++j) {
      ++report.pairs_compared;
      bool eng = engine_crosses(universe[i], universe[j]);
      bool orc = poly.crosses(embed(universe[i]), embed(universe[j]));
      if (eng != orc)
        report.disagreements.push_back(
            "crossing mismatch: " + to_string(universe[i]) + " vs " +
            to_string(universe[j]) + " engine=" + std::to_string(eng) +
            " oracle=" + std::to_string(orc));
    }
  }

  // Windowed nc against the oracle's nc of the embedded truncation.
  std::set<Diagonal> truncated = truncate_window(z, s, w);
  std::vector<std::pair<int, int>> embedded;
  for (const Diagonal& d : truncated)
    if (poly.diagonal_index(embed(d))) embedded.push_back(embed(d));
  auto oracle_nc_contains = [&](const Diagonal& d) {
    for (const auto& m : embedded)
      if (poly.crosses(embed(d), m)) return false;
    return true;
  };
  // The engine tests crossings against the full presented set, the oracle
  // only against the truncation, so diagonals on the window boundary can
  // legitimately differ (their crossers may all sit outside the window).
  // The nc comparison therefore stays in the window interior.
  std::set<Diagonal> engine_nc = nc_window(z, s, w);
  for (const Diagonal& d : universe) {
    if (d.a.pos <= -w || d.a.pos >= w || d.b.pos <= -w || d.b.pos >= w)
      continue;
    bool eng = engine_nc.count(d) > 0;
    bool orc = oracle_nc_contains(d);
    if (eng != orc)
      report.disagreements.push_back(
          "nc mismatch: " + to_string(d) + " engine=" + std::to_string(eng) +
          " oracle=" + std::to_string(orc));
  }

  // Ptolemy of the explicit truncation, both ways.
  DiagonalSet trunc_set;
  trunc_set.explicit_members.assign(truncated.begin(), truncated.end());
  bool eng_pt = check_ptolemy(z, trunc_set).holds();
  bool orc_pt = [&] {
    for (size_t i = 0; i < embedded.size(); ++i)
      for (size_t j = i + 1; j < embedded.size(); ++j) {
        if (!poly.crosses(embedded[i], embedded[j])) continue;
        auto [a, b] = embedded[i];
        auto [c, d] = embedded[j];
        for (auto conn : {std::pair{a, c}, {a, d}, {b, c}, {b, d}}) {
          if (!poly.diagonal_index(conn)) continue;
          auto norm = conn.first > conn.second
                          ? std::pair{conn.second, conn.first}
                          : conn;
          bool present = false;
          for (const auto& m : embedded)
            if (m == norm) {
              present = true;
              break;
            }
          if (!present) return false;
        }
      }
    return true;
  }();
  if (eng_pt != orc_pt)
    report.disagreements.push_back(
        "ptolemy mismatch on truncation: engine=" + std::to_string(eng_pt) +
        " oracle=" + std::to_string(orc_pt));
  return report;
}

}  // namespace infgon
