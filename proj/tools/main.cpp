#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "infgon/infgon.hpp"

using namespace infgon;
using Json = nlohmann::ordered_json;

namespace {

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Holds: return 0;
    case Verdict::Fails: return 1;
    case Verdict::HoldsUpToBound: return 2;
  }
  return 3;
}

Verdict worst(Verdict a, Verdict b) {
  auto rank = [](Verdict v) {
    return v == Verdict::Fails ? 2 : (v == Verdict::HoldsUpToBound ? 1 : 0);
  };
  return rank(a) >= rank(b) ? a : b;
}

Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

long long parse_ll(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidInputError("cannot parse " + what + ": \"" + s + "\"");
  }
}

Vertex parse_vertex_arg(const ZModel& z, const std::string& s) {
  size_t colon = s.find(':');
  if (colon == std::string::npos)
    throw InvalidInputError("vertex must be written arc:pos, got \"" + s + "\"");
  long long arc = parse_ll(s.substr(0, colon), "arc");
  long long pos = parse_ll(s.substr(colon + 1), "pos");
  if (arc < 0 || arc >= z.limit_count())
    throw InvalidInputError("arc index out of range in \"" + s + "\"");
  return z.vertex(arc, pos);
}

Diagonal parse_diagonal_arg(const ZModel& z, const std::string& s) {
  size_t comma = s.find(',');
  if (comma == std::string::npos)
    throw InvalidInputError(
        "diagonal must be written arc:pos,arc:pos, got \"" + s + "\"");
  Vertex a = parse_vertex_arg(z, s.substr(0, comma));
  Vertex b = parse_vertex_arg(z, s.substr(comma + 1));
  return make_diagonal(z, a, b);
}

void collect_witnesses(const Certificate& c, Json& arr) {
  std::string w = to_string(c.witness);
  if (!w.empty()) arr.push_back(c.name + ": " + w);
  for (const Certificate& sub : c.trace) collect_witnesses(sub, arr);
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string verdict_line(const Certificate& c) {
  std::string s = c.name + ": " + to_string(c.verdict);
  if (c.verdict == Verdict::Holds && !c.note.empty())
    s += " (" + c.note + ")";
  if (c.verdict == Verdict::HoldsUpToBound)
    s += " (bound " + std::to_string(c.bound) + ")";
  if (c.verdict == Verdict::Fails) {
    std::string w = to_string(c.witness);
    if (!w.empty()) s += " witness " + w;
  }
  return s;
}

int run_check(const std::string& model_path, Pos window, long long bound,
              bool json_mode) {
  Model m = load_model(model_path);
  Timer timer;
  Certificate torsion = is_torsion_first_half(m.z, m.set, bound);
  Certificate tilting = is_cluster_tilting(m.z, m.set, window);
  Verdict v = worst(torsion.verdict, tilting.verdict);
  if (json_mode) {
    Json report;
    report["command"] = "check";
    report["verdict"] = to_string(v);
    report["witnesses"] = Json::array();
    collect_witnesses(torsion, report["witnesses"]);
    collect_witnesses(tilting, report["witnesses"]);
    report["bounds"] = {{"window", window}, {"bound", bound}};
    report["timings"] = {{"check_ms", timer.ms()}};
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << verdict_line(torsion) << "; " << verdict_line(tilting) << "\n";
    std::cout << render(torsion) << render(tilting);
  }
  return exit_code(v);
}

int run_precover(const std::string& model_path, const std::string& target,
                 bool json_mode) {
  Model m = load_model(model_path);
  Diagonal y = parse_diagonal_arg(m.z, target);
  Timer timer;
  std::vector<Diagonal> out = precover(m.z, m.set, y);
  if (json_mode) {
    Json report;
    report["command"] = "precover";
    report["verdict"] = "Holds";
    report["witnesses"] = Json::array();
    for (const Diagonal& d : out) report["witnesses"].push_back(to_string(d));
    report["bounds"] = Json::object();
    report["timings"] = {{"precover_ms", timer.ms()}};
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "precover of " << to_string(y) << ": " << out.size()
              << " diagonal(s)\n";
    for (const Diagonal& d : out) std::cout << "  " << to_string(d) << "\n";
  }
  return 0;
}

int run_nc(const std::string& model_path, Pos window, bool json_mode) {
  Model m = load_model(model_path);
  Timer timer;
  std::set<Diagonal> out = nc_window(m.z, m.set, window);
  if (json_mode) {
    Json report;
    report["command"] = "nc";
    report["verdict"] = "HoldsUpToBound";
    report["witnesses"] = Json::array();
    for (const Diagonal& d : out) report["witnesses"].push_back(to_string(d));
    report["bounds"] = {{"window", window}};
    report["timings"] = {{"nc_ms", timer.ms()}};
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "nc window W=" << window << ": " << out.size()
              << " diagonal(s)\n";
    for (const Diagonal& d : out) std::cout << "  " << to_string(d) << "\n";
  }
  return 0;
}

int run_flip(const std::string& model_path, const std::string& diag,
             Pos window, const std::string& out_path, bool json_mode) {
  Model m = load_model(model_path);
  Diagonal d = parse_diagonal_arg(m.z, diag);
  auto [flipped, replacement] = flip(m.z, m.set, d, window);
  Model result{m.z, flipped};
  std::string text = serialize_model(result);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw IoError("cannot write " + out_path);
    out << text;
  }
  if (json_mode) {
    Json report;
    report["command"] = "flip";
    report["verdict"] = "Holds";
    report["witnesses"] = {to_string(d) + " -> " + to_string(replacement)};
    report["bounds"] = {{"window", window}};
    report["timings"] = Json::object();
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "flipped " << to_string(d) << " -> " << to_string(replacement)
              << "\n";
    if (out_path.empty()) std::cout << text;
  }
  return 0;
}

int run_render(const std::string& model_path, const std::string& out_path,
               Pos window) {
  Model m = load_model(model_path);
  RenderSpec spec;
  spec.window = window;
  std::string svg = render_svg(m.z, m.set, spec);
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot write " + out_path);
  out << svg;
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int run_oracle(int polygon, bool exhaustive_flag, long long samples,
               long long seed, bool json_mode) {
  Timer timer;
  bool exhaustive = samples == 0;
  if (exhaustive_flag && samples > 0)
    throw InvalidInputError("--exhaustive and --samples are exclusive");
  FiniteReport r = finite_report(polygon, exhaustive,
                                 static_cast<std::uint64_t>(samples),
                                 static_cast<std::uint64_t>(seed));
  bool ok = r.nc2_equivalence_failures == 0;
  if (json_mode) {
    Json report;
    report["command"] = "oracle";
    report["verdict"] = ok ? "Holds" : "Fails";
    report["witnesses"] = Json::array();
    if (r.first_failure_mask)
      report["witnesses"].push_back("subset mask " +
                                    std::to_string(*r.first_failure_mask));
    report["bounds"] = {{"polygon", r.polygon},
                        {"subsets", r.subsets_checked},
                        {"triangulations", r.triangulations},
                        {"ptolemy_diagrams", r.ptolemy_diagrams}};
    report["timings"] = {{"oracle_ms", timer.ms()}};
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "polygon=" << r.polygon << " subsets=" << r.subsets_checked
              << (r.exhaustive ? " (exhaustive)" : " (sampled)")
              << " triangulations=" << r.triangulations
              << " ptolemy_diagrams=" << r.ptolemy_diagrams
              << " ptolemy<=>nc2-fixed="
              << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "infgon: exact combinatorics of infinity-gon triangulations, torsion "
      "pairs and cluster tilting"};
  app.require_subcommand(1);

  std::string model_path, target, diag, out_path;
  Pos window = 32;
  long long bound = kDefaultPtolemyBound;
  bool json_mode = false;

  CLI::App* check = app.add_subcommand(
      "check", "torsion and cluster-tilting certificates for a model file");
  check->add_option("model", model_path, "model JSON file")->required();
  check->add_option("--window", window, "maximality window");
  check->add_option("--bound", bound, "ptolemy two-parameter bound");
  check->add_flag("--json", json_mode, "machine-readable report");

  CLI::App* prec = app.add_subcommand("precover", "construct a precover");
  prec->add_option("model", model_path, "model JSON file")->required();
  prec->add_option("--target", target, "target diagonal arc:pos,arc:pos")
      ->required();
  prec->add_flag("--json", json_mode, "machine-readable report");

  CLI::App* nc = app.add_subcommand("nc", "window view of the noncrossing set");
  nc->add_option("model", model_path, "model JSON file")->required();
  nc->add_option("--window", window, "window half-width");
  nc->add_flag("--json", json_mode, "machine-readable report");

  CLI::App* fl = app.add_subcommand("flip", "mutate a cluster tilting set");
  fl->add_option("model", model_path, "model JSON file")->required();
  fl->add_option("--diagonal", diag, "member diagonal arc:pos,arc:pos")
      ->required();
  fl->add_option("--window", window, "verification window");
  fl->add_option("-o,--output", out_path, "write the mutated model here");
  fl->add_flag("--json", json_mode, "machine-readable report");

  CLI::App* rend = app.add_subcommand("render", "SVG disk picture");
  rend->add_option("model", model_path, "model JSON file")->required();
  rend->add_option("-o,--output", out_path, "output SVG path")->required();
  Pos render_window = 8;
  rend->add_option("--window", render_window, "window half-width");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "finite polygon brute-force verification");
  int polygon = 6;
  long long samples = 0, seed = 1;
  bool exhaustive_flag = false;
  oracle->add_option("--polygon", polygon, "polygon vertex count")->required();
  oracle->add_flag("--exhaustive", exhaustive_flag, "enumerate all subsets");
  oracle->add_option("--samples", samples, "number of sampled subsets");
  oracle->add_option("--seed", seed, "sampling seed");
  oracle->add_flag("--json", json_mode, "machine-readable report");

  try {
    app.parse(argc, argv);
    if (check->parsed()) return run_check(model_path, window, bound, json_mode);
    if (prec->parsed()) return run_precover(model_path, target, json_mode);
    if (nc->parsed()) return run_nc(model_path, window, json_mode);
    if (fl->parsed())
      return run_flip(model_path, diag, window, out_path, json_mode);
    if (rend->parsed()) return run_render(model_path, out_path, render_window);
    if (oracle->parsed())
      return run_oracle(polygon, exhaustive_flag, samples, seed, json_mode);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
