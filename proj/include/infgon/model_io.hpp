#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "infgon/diagonal.hpp"
#include "infgon/errors.hpp"

namespace infgon {

struct Model {
  ZModel z;
  DiagonalSet set;
};

namespace detail {

using Json = nlohmann::ordered_json;

inline void reject_unknown_keys(const Json& obj, std::vector<std::string> known,
                                const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const auto& k : known)
      if (it.key() == k) ok = true;
    if (!ok)
      throw IoError(where + ": unknown key \"" + it.key() + "\"");
  }
}

inline long long require_int(const Json& obj, const std::string& key,
                             const std::string& where) {
  if (!obj.contains(key))
    throw IoError(where + ": missing key \"" + key + "\"");
  if (!obj[key].is_number_integer())
    throw IoError(where + "." + key + ": expected an integer");
  return obj[key].get<long long>();
}

inline Vertex parse_vertex(const ZModel& z, const Json& obj,
                           const std::string& where) {
  if (!obj.is_object()) throw IoError(where + ": expected a vertex object");
  reject_unknown_keys(obj, {"arc", "pos"}, where);
  long long arc = require_int(obj, "arc", where);
  long long pos = require_int(obj, "pos", where);
  if (arc < 0 || arc >= z.limit_count())
    throw IoError(where + ".arc: must be in [0, " +
                  std::to_string(z.limit_count()) + ")");
  if (pos > kMaxPos || pos < -kMaxPos)
    throw IoError(where + ".pos: outside the supported range");
  return z.vertex(arc, pos);
}

inline VertexTerm parse_term(const ZModel& z, const Json& obj, Pos step,
                             const std::string& where) {
  if (!obj.is_object()) throw IoError(where + ": expected a term object");
  if (!obj.contains("kind") || !obj["kind"].is_string())
    throw IoError(where + ".kind: expected a string");
  std::string kind = obj["kind"].get<std::string>();
  if (kind == "fixed") {
    reject_unknown_keys(obj, {"kind", "arc", "pos"}, where);
    long long arc = require_int(obj, "arc", where);
    long long pos = require_int(obj, "pos", where);
    if (arc < 0 || arc >= z.limit_count())
      throw IoError(where + ".arc: must be in [0, " +
                    std::to_string(z.limit_count()) + ")");
    if (pos > kMaxPos || pos < -kMaxPos)
      throw IoError(where + ".pos: outside the supported range");
    return VertexTerm::fixed(z.vertex(arc, pos));
  }
  if (kind != "tail_up" && kind != "tail_down")
    throw IoError(where + ".kind: expected fixed, tail_up or tail_down");
  reject_unknown_keys(obj, {"kind", "arc", "base"}, where);
  long long arc = require_int(obj, "arc", where);
  long long base = require_int(obj, "base", where);
  if (arc < 0 || arc >= z.limit_count())
    throw IoError(where + ".arc: must be in [0, " +
                  std::to_string(z.limit_count()) + ")");
  if (base > kMaxPos || base < -kMaxPos)
    throw IoError(where + ".base: outside the supported range");
  return kind == "tail_up"
             ? VertexTerm::tail_up(static_cast<int>(arc), base, step)
             : VertexTerm::tail_down(static_cast<int>(arc), base, step);
}

}  // namespace detail

inline Model parse_model(const std::string& text) {
  detail::Json doc;
  try {
    doc = detail::Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw IoError("model: expected a JSON object");
  detail::reject_unknown_keys(doc, {"zmodel", "explicit", "families"}, "model");
  if (!doc.contains("zmodel") || !doc["zmodel"].is_object())
    throw IoError("model.zmodel: expected an object");
  detail::reject_unknown_keys(doc["zmodel"], {"limit_points"}, "model.zmodel");
  long long n = detail::require_int(doc["zmodel"], "limit_points", "model.zmodel");
  if (n < 1) throw IoError("model.zmodel.limit_points: must be >= 1");
  if (n > 1024) throw IoError("model.zmodel.limit_points: too many limit points");
  Model m{ZModel(static_cast<int>(n)), {}};

  if (doc.contains("explicit")) {
    if (!doc["explicit"].is_array())
      throw IoError("model.explicit: expected an array");
    int i = 0;
    for (const auto& entry : doc["explicit"]) {
      std::string where = "model.explicit[" + std::to_string(i++) + "]";
      if (!entry.is_array() || entry.size() != 2)
        throw IoError(where + ": expected a pair of vertices");
      Vertex a = detail::parse_vertex(m.z, entry[0], where + "[0]");
      Vertex b = detail::parse_vertex(m.z, entry[1], where + "[1]");
      try {
        m.set.explicit_members.push_back(make_diagonal(m.z, a, b));
      } catch (const NotADiagonalError& e) {
        throw IoError(where + ": " + e.what());
      }
    }
  }
  if (doc.contains("families")) {
    if (!doc["families"].is_array())
      throw IoError("model.families: expected an array");
    int i = 0;
    for (const auto& entry : doc["families"]) {
      std::string where = "model.families[" + std::to_string(i++) + "]";
      if (!entry.is_object()) throw IoError(where + ": expected an object");
      detail::reject_unknown_keys(entry, {"left", "right", "min_n", "step"},
                                  where);
      long long step = 1;
      if (entry.contains("step")) {
        step = detail::require_int(entry, "step", where);
        if (step < 1 || step > kMaxStep)
          throw IoError(where + ".step: must be in [1, " +
                        std::to_string(kMaxStep) + "]");
      }
      long long min_n = 0;
      if (entry.contains("min_n")) {
        min_n = detail::require_int(entry, "min_n", where);
        if (min_n < 0) throw IoError(where + ".min_n: must be >= 0");
      }
      if (!entry.contains("left") || !entry.contains("right"))
        throw IoError(where + ": needs left and right terms");
      VertexTerm left = detail::parse_term(m.z, entry["left"], step, where + ".left");
      VertexTerm right =
          detail::parse_term(m.z, entry["right"], step, where + ".right");
      try {
        m.set.families.push_back(make_family(m.z, left, right, min_n));
      } catch (const Error& e) {
        throw IoError(where + ": " + e.what());
      }
    }
  }
  return m;
}

inline detail::Json term_to_json(const VertexTerm& t) {
  detail::Json j;
  switch (t.kind) {
    case TermKind::Fixed:
      j["kind"] = "fixed";
      j["arc"] = t.arc;
      j["pos"] = t.base;
      break;
    case TermKind::TailUp:
      j["kind"] = "tail_up";
      j["arc"] = t.arc;
      j["base"] = t.base;
      break;
    case TermKind::TailDown:
      j["kind"] = "tail_down";
      j["arc"] = t.arc;
      j["base"] = t.base;
      break;
  }
  return j;
}

inline long long family_step_for_io(const DiagonalFamily& f) {
  return f.left.is_tail() ? f.left.step : f.right.step;
}

inline std::string serialize_model(const Model& m) {
  detail::Json doc;
  doc["zmodel"] = {{"limit_points", m.z.limit_count()}};
  doc["explicit"] = detail::Json::array();
  for (const auto& d : m.set.explicit_members)
    doc["explicit"].push_back({{{"arc", d.a.arc}, {"pos", d.a.pos}},
                               {{"arc", d.b.arc}, {"pos", d.b.pos}}});
  doc["families"] = detail::Json::array();
  for (const auto& f : m.set.families) {
    detail::Json jf;
    jf["left"] = term_to_json(f.left);
    jf["right"] = term_to_json(f.right);
    jf["min_n"] = f.min_n;
    long long step = family_step_for_io(f);
    if (step != 1) jf["step"] = step;
    doc["families"].push_back(jf);
  }
  return doc.dump(2) + "\n";
}

}  // namespace infgon
