#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "infgon/diagonal.hpp"

namespace infgon {

enum class Side { Below, Above, Both };

inline std::string to_string(Side s) {
  switch (s) {
    case Side::Below: return "below";
    case Side::Above: return "above";
    case Side::Both: return "both";
  }
  return {};
}

// How one endpoint sequence of a family converges: to which boundary
// point, and from which side.  A vertex target counts as both sides.
struct LimitDatum {
  BoundaryPoint target;
  Side side = Side::Both;
  friend bool operator==(const LimitDatum&, const LimitDatum&) = default;
};

inline std::string to_string(const LimitDatum& d) {
  return to_string(d.target) + " " + to_string(d.side);
}

struct WitnessDiagonal {
  Diagonal d;
};
struct WitnessPair {
  Diagonal x, y;
};
struct WitnessLimitPair {
  LimitDatum a, b;
};

using Witness =
    std::variant<std::monostate, WitnessDiagonal, WitnessPair, WitnessLimitPair>;

inline std::string to_string(const Witness& w) {
  if (std::holds_alternative<WitnessDiagonal>(w))
    return to_string(std::get<WitnessDiagonal>(w).d);
  if (std::holds_alternative<WitnessPair>(w)) {
    const auto& p = std::get<WitnessPair>(w);
    return to_string(p.x) + " vs " + to_string(p.y);
  }
  if (std::holds_alternative<WitnessLimitPair>(w)) {
    const auto& p = std::get<WitnessLimitPair>(w);
    return "(" + to_string(p.a) + ", " + to_string(p.b) + ")";
  }
  return {};
}

enum class Verdict { Holds, Fails, HoldsUpToBound };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Fails: return "Fails";
    case Verdict::HoldsUpToBound: return "HoldsUpToBound";
  }
  return {};
}

// Tri-state verdict of one classification decision.  A failing
// certificate always carries a concrete witness.
struct Certificate {
  std::string name;
  Verdict verdict = Verdict::Holds;
  Witness witness;
  long long bound = 0;
  std::string note;
  std::vector<Certificate> trace;

  bool holds() const { return verdict != Verdict::Fails; }
  bool exact() const { return verdict == Verdict::Holds; }

  static Certificate pass(std::string name, std::string note = {}) {
    Certificate c;
    c.name = std::move(name);
    c.note = std::move(note);
    return c;
  }
  static Certificate fail(std::string name, Witness w, std::string note = {}) {
    Certificate c;
    c.name = std::move(name);
    c.verdict = Verdict::Fails;
    c.witness = std::move(w);
    c.note = std::move(note);
    return c;
  }
  static Certificate up_to(std::string name, long long bound,
                           std::string note = {}) {
    Certificate c;
    c.name = std::move(name);
    c.verdict = Verdict::HoldsUpToBound;
    c.bound = bound;
    c.note = std::move(note);
    return c;
  }

  // Conjunction: Fails dominates, then HoldsUpToBound, then Holds.
  static Certificate all_of(std::string name, std::vector<Certificate> subs) {
    Certificate c;
    c.name = std::move(name);
    for (const Certificate& s : subs) {
      if (s.verdict == Verdict::Fails && c.verdict != Verdict::Fails) {
        c.verdict = Verdict::Fails;
        c.witness = s.witness;
        c.note = s.name + (s.note.empty() ? "" : ": " + s.note);
      } else if (s.verdict == Verdict::HoldsUpToBound &&
                 c.verdict == Verdict::Holds) {
        c.verdict = Verdict::HoldsUpToBound;
        c.bound = s.bound;
      }
    }
    c.trace = std::move(subs);
    return c;
  }
};

inline std::string render(const Certificate& c, int indent = 0) {
  std::string out(indent * 2, ' ');
  out += c.name + ": " + to_string(c.verdict);
  if (c.verdict == Verdict::HoldsUpToBound)
    out += " (bound " + std::to_string(c.bound) + ")";
  std::string w = to_string(c.witness);
  if (!w.empty()) out += " witness " + w;
  if (!c.note.empty()) out += " [" + c.note + "]";
  out += "\n";
  for (const Certificate& s : c.trace) out += render(s, indent + 1);
  return out;
}

}  // namespace infgon
