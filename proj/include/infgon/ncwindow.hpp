#pragma once

#include <set>

#include "infgon/certificate.hpp"
#include "infgon/crossing.hpp"
#include "infgon/diagonal.hpp"

namespace infgon {

// All window diagonals crossing no member of s.  Members of s outside
// the window still count as crossers (family crossings are decided
// exactly), only the returned universe is windowed.
inline std::set<Diagonal> nc_window(const ZModel& z, const DiagonalSet& s,
                                    Pos w) {
  if (w < 2) throw InvalidInputError("nc_window requires W >= 2");
  std::set<Diagonal> out;
  for (const Diagonal& d : window_diagonals(z, w))
    if (!diagonal_crosses_set(z, s, d)) out.insert(d);
  return out;
}

// The same operator against a finite explicit crossing set.
inline std::set<Diagonal> nc_window_finite(const ZModel& z,
                                           const std::set<Diagonal>& members,
                                           Pos w) {
  if (w < 2) throw InvalidInputError("nc_window requires W >= 2");
  std::set<Diagonal> out;
  for (const Diagonal& d : window_diagonals(z, w)) {
    bool hit = false;
    for (const Diagonal& m : members)
      if (crosses(z, d, m)) {
        hit = true;
        break;
      }
    if (!hit) out.insert(d);
  }
  return out;
}

// Windowed verification that nc(nc(s)) agrees with s.  nc(s) is computed
// on the full window; the double-complement comparison is restricted to
// the half-size inner window so that boundary diagonals whose crossers
// lie outside the window cannot produce spurious mismatches.
inline Certificate nc2_window_check(const ZModel& z, const DiagonalSet& s,
                                    Pos w) {
  if (w < 2) throw InvalidInputError("nc2_window_check requires W >= 2");
  std::set<Diagonal> ncw = nc_window(z, s, w);
  Pos inner = std::max<Pos>(2, w / 2);
  for (const Diagonal& d : window_diagonals(z, inner)) {
    bool in_nc2 = true;
    for (const Diagonal& m : ncw)
      if (crosses(z, d, m)) {
        in_nc2 = false;
        break;
      }
    bool in_s = set_contains(z, s, d);
    if (in_nc2 && !in_s)
      return Certificate::fail("nc2-fixed", WitnessDiagonal{d},
                               "in nc^2 on the window but not in the set");
    if (in_s && !in_nc2)
      return Certificate::fail("nc2-fixed", WitnessDiagonal{d},
                               "member crossed by a window noncrosser");
  }
  return Certificate::up_to("nc2-fixed", w);
}

}  // namespace infgon
