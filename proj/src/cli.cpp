#include "knotred/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "knotred/canonical.hpp"
#include "knotred/diagram_io.hpp"
#include "knotred/reductions.hpp"
#include "knotred/render.hpp"
#include "knotred/rmoves.hpp"

namespace knotred::cli {

namespace {

struct Exit {
  int code;
  std::string message;
};

struct Config {
  unsigned long long seed = 0;
  int sat_limit = kDefaultSatLimit;
  int ham_limit = kDefaultHamLimit;
  size_t max_states = 2000000;
  size_t budget = 64;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kNoInput, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Exit{kCantCreate, "cannot write " + path};
}

Json provenance_json(const std::string& input_text, unsigned long long seed) {
  return Json{{"input_sha256", sha256_hex(input_text)}, {"tool_version", kToolVersion}, {"seed", seed}};
}

Json parse_json(const std::string& text, const std::string& path) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Exit{kDataError, path + ": " + e.what()};
  }
}

// Accepts a diagram file or an instance file (picking diagrams[index]).
Diagram load_diagram(const std::string& path, int index, std::string* text_out = nullptr) {
  const std::string text = read_file(path);
  if (text_out) *text_out = text;
  const Json j = parse_json(text, path);
  if (j.contains("problem")) {
    const Instance inst = instance_from_json(j);
    if (index < 0 || index >= static_cast<int>(inst.diagrams.size()))
      throw Exit{kUsage, "instance has no diagram " + std::to_string(index)};
    return inst.diagrams[index];
  }
  return diagram_from_json(j);
}

Instance load_instance(const std::string& path) { return instance_from_json(parse_json(read_file(path), path)); }

std::string dump(const Json& j) { return j.dump(1) + "\n"; }

Json report_json(const VerificationReport& r, const Assignment& a) {
  Json clauses = Json::array();
  for (size_t c = 0; c < r.clause_trivial.size(); ++c)
    clauses.push_back(Json{{"index", c}, {"trivial", static_cast<bool>(r.clause_trivial[c])},
                           {"image", word_to_string(r.clause_images[c])}});
  return Json{{"assignment", assignment_to_string(a)},
              {"deleted_generators", r.deleted_generators},
              {"clauses", clauses},
              {"sublink_linking", r.sublink_linking},
              {"verdict", r.verdict},
              {"formula_value", r.formula_value}};
}

int formula_vars(const Instance& inst) {
  if (!inst.formula) throw Exit{kUsage, "instance carries no formula"};
  return inst.formula->n_vars;
}

int cmd_compile(const std::string& kind, const std::string& in, const std::string& out_path,
                const std::vector<int>& forced, const Config& cfg, std::ostream& out) {
  const std::string text = read_file(in);
  Instance inst;
  if (kind == "ham-reidemeister") {
    Graph g = parse_graph(text);
    if (!forced.empty()) {
      if (forced.size() != 2) throw Exit{kUsage, "--force-edge takes two vertices"};
      g = replace_forced_edge(g, {forced[0] - 1, forced[1] - 1});
    }
    inst = build_reidemeister_pair(g);
  } else {
    const CnfFormula f = parse_dimacs(text);
    if (kind == "sat-unlink-sublink")
      inst = build_unlink_sublink(f);
    else if (kind == "sat-unlinking")
      inst = build_unlinking_number(f);
    else if (kind == "sat-splitting")
      inst = build_splitting_number(f);
    else if (kind == "sat-alternating")
      inst = build_alternating_sublink(f);
    else
      throw Exit{kUsage, "unknown reduction " + kind};
  }
  inst.provenance.seed = cfg.seed;
  emit(dump(instance_to_json(inst)), out_path, out);
  return kAffirmative;
}

int cmd_verify(const std::string& path, const std::string& bits, bool all, const Config& cfg, std::ostream& out) {
  const Instance inst = load_instance(path);
  const int n = formula_vars(inst);
  Json j{{"problem", problem_name(inst.problem)}, {"provenance", Json{{"input_sha256", inst.provenance.input_sha256},
                                                                     {"tool_version", kToolVersion},
                                                                     {"seed", cfg.seed}}}};
  if (!bits.empty()) {
    const Assignment a = parse_assignment(bits);
    if (static_cast<int>(a.size()) != n)
      throw Exit{kUsage, "assignment has " + std::to_string(a.size()) + " bits, formula has " + std::to_string(n)};
    const VerificationReport r = verify_assignment(inst, a);
    j["report"] = report_json(r, a);
    out << dump(j);
    return r.verdict ? kAffirmative : kNegative;
  }
  if (!all) throw Exit{kUsage, "verify needs --assignment BITS or --all"};
  if (n > cfg.sat_limit) {
    out << dump(j);
    return kInconclusive;
  }
  Json verdicts = Json::array();
  bool any = false;
  bool agree = true;
  for (unsigned long long idx = 0; idx < (1ULL << n); ++idx) {
    const Assignment a = assignment_from_index(idx, n);
    const VerificationReport r = verify_assignment(inst, a);
    any = any || r.verdict;
    agree = agree && r.verdict == r.formula_value;
    verdicts.push_back(Json{{"assignment", assignment_to_string(a)}, {"verdict", r.verdict}, {"formula_value", r.formula_value}});
  }
  j["assignments"] = verdicts;
  j["satisfiable"] = any;
  j["agrees_with_formula"] = agree;
  out << dump(j);
  return any ? kAffirmative : kNegative;
}

int cmd_search(const std::string& path, std::optional<int> k, const std::string& kinds, const std::string& out_path,
               const Config& cfg, std::ostream& out) {
  const Instance inst = load_instance(path);
  if (inst.diagrams.size() != 2) throw Exit{kUsage, "search needs an instance with two diagrams"};
  SearchOptions opt;
  if (kinds == "all")
    opt.kinds = MoveKinds::all();
  else if (kinds != "r2minus")
    throw Exit{kUsage, "--kinds must be r2minus or all"};
  opt.max_states = cfg.max_states;
  opt.placement_budget = cfg.budget;
  const int budget = k.value_or(inst.parameter);
  Json j{{"k", budget}, {"kinds", kinds}, {"trivially_negative", inst.trivially_negative},
         {"provenance", Json{{"input_sha256", inst.provenance.input_sha256}, {"tool_version", kToolVersion}, {"seed", cfg.seed}}}};
  try {
    const auto seq = bounded_search(inst.diagrams[0], inst.diagrams[1], budget, opt);
    j["found"] = seq.has_value();
    if (seq) j["sequence"] = sequence_to_json(*seq);
    emit(dump(j), out_path, out);
    return seq ? kAffirmative : kNegative;
  } catch (const SearchLimitError& e) {
    j["found"] = nullptr;
    j["reason"] = e.what();
    emit(dump(j), out_path, out);
    return kInconclusive;
  }
}

int cmd_oracle(const std::string& kind, const std::string& in, const Config& cfg, std::ostream& out) {
  const std::string text = read_file(in);
  Json j{{"provenance", provenance_json(text, cfg.seed)}};
  if (kind == "sat") {
    const CnfFormula f = parse_dimacs(text);
    if (f.n_vars > cfg.sat_limit) {
      j["satisfiable"] = nullptr;
      out << dump(j);
      return kInconclusive;
    }
    Json sols = Json::array();
    for (const Assignment& a : brute_force_sat(f, cfg.sat_limit)) sols.push_back(assignment_to_string(a));
    j["satisfiable"] = !sols.empty();
    j["satisfying"] = sols;
    out << dump(j);
    return sols.empty() ? kNegative : kAffirmative;
  }
  if (kind == "hampath") {
    const Graph g = parse_graph(text);
    if (g.n_vertices > cfg.ham_limit) {
      j["hamiltonian_path"] = nullptr;
      out << dump(j);
      return kInconclusive;
    }
    const auto path = brute_force_ham_path(g, cfg.ham_limit);
    j["hamiltonian_path"] = path.has_value();
    if (path) {
      std::vector<int> one_based;
      for (int v : *path) one_based.push_back(v + 1);
      j["path"] = one_based;
    }
    out << dump(j);
    return path ? kAffirmative : kNegative;
  }
  throw Exit{kUsage, "oracle must be sat or hampath"};
}

int cmd_invariants(const std::string& path, int index, const Config& cfg, std::ostream& out) {
  std::string text;
  const Diagram d = load_diagram(path, index, &text);
  const ValidationReport v = validate_diagram(d);
  Json j{{"provenance", provenance_json(text, cfg.seed)}};
  j["valid"] = v.ok;
  if (!v.ok) {
    j["failure"] = v.failure;
    out << dump(j);
    return kNegative;
  }
  const DiagramCounts c = writhe_and_counts(d);
  const AlternatingReport alt = is_alternating_diagram(d);
  Json comps = Json::array();
  for (int i = 0; i < d.component_count(); ++i)
    comps.push_back(Json{{"id", i}, {"role", d.components[i].role}, {"label", d.components[i].label},
                         {"self_crossings", c.self_crossings[i]}, {"undercrossings", c.undercrossings[i]},
                         {"overcrossings", c.overcrossings[i]}, {"alternating", static_cast<bool>(alt.per_component[i])}});
  j["crossings"] = c.crossing_count;
  j["components"] = c.component_count;
  j["writhe"] = c.writhe;
  j["euler"] = Json{{"vertices", v.vertices}, {"edges", v.edges}, {"faces", v.faces}, {"pieces", v.pieces}};
  j["alternating"] = alt.overall;
  j["linking_matrix"] = linking_matrix(d);
  j["split_pieces"] = split_components(d);
  j["per_component"] = comps;
  j["canonical_sha256"] = canonical_hash(d);
  out << dump(j);
  return kAffirmative;
}

int cmd_render(const std::string& path, int index, const std::string& layout, const std::string& out_path,
               const Config& cfg, std::ostream& out) {
  std::string text;
  const Diagram d = load_diagram(path, index, &text);
  RenderLayout lay = RenderLayout::Auto;
  if (layout == "geometry")
    lay = RenderLayout::Geometry;
  else if (layout == "embedding")
    lay = RenderLayout::Embedding;
  else if (layout != "auto")
    throw Exit{kUsage, "--layout must be auto, geometry or embedding"};
  const std::string svg = render_svg(d, lay);
  const size_t body = svg.find('\n') + 1;
  std::ostringstream note;
  note << "<!-- " << kToolVersion << " input-sha256=" << sha256_hex(text) << " seed=" << cfg.seed << " -->\n";
  emit(svg.substr(0, body) + note.str() + svg.substr(body), out_path, out);
  return kAffirmative;
}

int cmd_export(const std::string& path, int index, const std::string& format, const std::string& out_path,
               std::ostream& out) {
  const Diagram d = load_diagram(path, index);
  if (format == "pd")
    emit(export_pd(d), out_path, out);
  else if (format == "gauss")
    emit(export_gauss(d), out_path, out);
  else if (format == "json")
    emit(export_json(d), out_path, out);
  else
    throw Exit{kUsage, "--format must be pd, gauss or json"};
  return kAffirmative;
}

int cmd_certify(const std::string& path, int index, int changes, const std::string& out_path, const Config& cfg,
                std::ostream& out) {
  std::string text;
  const Diagram d = load_diagram(path, index, &text);
  Json j{{"provenance", provenance_json(text, cfg.seed)}, {"budget", cfg.budget}};
  if (changes >= 0) {
    const auto w = verify_diagrammatic_unlinking(d, changes, cfg.budget);
    j["changes"] = changes;
    j["found"] = w.has_value();
    if (w) j["crossings"] = *w;
    emit(dump(j), out_path, out);
    return w ? kAffirmative : kNegative;
  }
  const auto seq = certify_unlink(d, cfg.budget);
  j["found"] = seq.has_value();
  if (seq) j["sequence"] = sequence_to_json(*seq);
  emit(dump(j), out_path, out);
  // Not finding a sequence proves nothing.
  return seq ? kAffirmative : kInconclusive;
}

int cmd_replay(const std::string& diagram_path, int index, const std::string& seq_path, std::ostream& out) {
  const Diagram d = load_diagram(diagram_path, index);
  Json j = parse_json(read_file(seq_path), seq_path);
  if (j.contains("sequence")) j = j.at("sequence");
  const MoveSequence seq = sequence_from_json(j);
  try {
    const Diagram end = replay(d, seq);
    out << dump(Json{{"replayed", true}, {"moves", seq.moves.size()}, {"final_crossings", end.crossing_count()},
                     {"final_sha256", canonical_hash(end)}});
    return kAffirmative;
  } catch (const DiagramError& e) {
    out << dump(Json{{"replayed", false}, {"reason", e.what()}});
    return kNegative;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compile 3-SAT formulas and graphs into link diagram instances and check them", "knotred"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Config cfg;
  app.add_option("--seed", cfg.seed, "Seed recorded in outputs")->capture_default_str();
  app.add_option("--sat-limit", cfg.sat_limit, "Largest variable count for brute-force SAT")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--ham-limit", cfg.ham_limit, "Largest vertex count for brute-force Hamiltonian path")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::function<int()> action;
  std::string in, out_path, kind, bits, kinds = "r2minus", layout = "auto", format = "json", seq_path;
  int index = 0, changes = -1;
  bool all = false;
  std::optional<int> k;
  std::vector<int> forced;

  auto* compile = app.add_subcommand("compile", "Build an instance from a CNF formula or a graph");
  compile->add_option("reduction", kind, "sat-unlink-sublink | sat-unlinking | sat-splitting | sat-alternating | ham-reidemeister")
      ->required()
      ->check(CLI::IsMember({"sat-unlink-sublink", "sat-unlinking", "sat-splitting", "sat-alternating", "ham-reidemeister"}));
  compile->add_option("input", in, "DIMACS CNF or graph edge list")->required();
  compile->add_option("-o,--output", out_path, "Instance JSON (default stdout)");
  compile->add_option("--force-edge", forced, "Edge U V that every Hamiltonian cycle must use")->expected(2);
  compile->callback([&] { action = [&] { return cmd_compile(kind, in, out_path, forced, cfg, out); }; });

  auto* verify = app.add_subcommand("verify", "Check assignments against the instance's clause words");
  verify->add_option("instance", in)->required();
  auto* vbits = verify->add_option("--assignment", bits, "Bit string, variable 1 first");
  verify->add_flag("--all", all, "Every assignment")->excludes(vbits);
  verify->callback([&] { action = [&] { return cmd_verify(in, bits, all, cfg, out); }; });

  auto* search = app.add_subcommand("search", "Bounded Reidemeister search between the two diagrams");
  search->add_option("instance", in)->required();
  search->add_option("-k", k, "Move budget (default: instance parameter)")->check(CLI::NonNegativeNumber);
  search->add_option("--kinds", kinds, "r2minus | all")->check(CLI::IsMember({"r2minus", "all"}));
  search->add_option("--max-states", cfg.max_states)->check(CLI::PositiveNumber);
  search->add_option("--placement-budget", cfg.budget, "Increasing moves tried per state")->check(CLI::NonNegativeNumber);
  search->add_option("-o,--output", out_path);
  search->callback([&] { action = [&] { return cmd_search(in, k, kinds, out_path, cfg, out); }; });

  auto* oracle = app.add_subcommand("oracle", "Brute-force SAT or Hamiltonian path");
  oracle->add_option("kind", kind, "sat | hampath")->required()->check(CLI::IsMember({"sat", "hampath"}));
  oracle->add_option("input", in)->required();
  oracle->callback([&] { action = [&] { return cmd_oracle(kind, in, cfg, out); }; });

  auto* inv = app.add_subcommand("invariants", "Linking matrix, counts, alternation and split pieces");
  inv->add_option("diagram", in, "Diagram or instance JSON")->required();
  inv->add_option("--index", index, "Diagram index inside an instance")->check(CLI::NonNegativeNumber);
  inv->callback([&] { action = [&] { return cmd_invariants(in, index, cfg, out); }; });

  auto* render = app.add_subcommand("render", "Draw a diagram as SVG");
  render->add_option("diagram", in)->required();
  render->add_option("-o,--output", out_path);
  render->add_option("--index", index)->check(CLI::NonNegativeNumber);
  render->add_option("--layout", layout, "auto | geometry | embedding");
  render->callback([&] { action = [&] { return cmd_render(in, index, layout, out_path, cfg, out); }; });

  auto* exp = app.add_subcommand("export", "Write a diagram as JSON, PD or Gauss code");
  exp->add_option("diagram", in)->required();
  exp->add_option("--format", format, "json | pd | gauss");
  exp->add_option("--index", index)->check(CLI::NonNegativeNumber);
  exp->add_option("-o,--output", out_path);
  exp->callback([&] { action = [&] { return cmd_export(in, index, format, out_path, out); }; });

  auto* cert = app.add_subcommand("certify-unlink", "Search for a move sequence to a crossing-free diagram");
  cert->add_option("diagram", in)->required();
  cert->add_option("--budget", cfg.budget, "Increasing-move states explored")->capture_default_str();
  cert->add_option("--changes", changes, "Instead look for this many crossing changes that give an unlink");
  cert->add_option("--index", index)->check(CLI::NonNegativeNumber);
  cert->add_option("-o,--output", out_path);
  cert->callback([&] { action = [&] { return cmd_certify(in, index, changes, out_path, cfg, out); }; });

  auto* rep = app.add_subcommand("replay", "Replay a move sequence and check its hashes");
  rep->add_option("diagram", in)->required();
  rep->add_option("sequence", seq_path)->required();
  rep->add_option("--index", index)->check(CLI::NonNegativeNumber);
  rep->callback([&] { action = [&] { return cmd_replay(in, index, seq_path, out); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "knotred: " << e.what() << "\n";
    return kUsage;
  }
  try {
    return action();
  } catch (const Exit& e) {
    err << "knotred: " << e.message << "\n";
    return e.code;
  } catch (const FormatError& e) {
    err << "knotred: " << e.what() << "\n";
    return kDataError;
  } catch (const DiagramError& e) {
    err << "knotred: " << e.what() << "\n";
    return kDataError;
  } catch (const std::invalid_argument& e) {
    err << "knotred: " << e.what() << "\n";
    return kUsage;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace knotred::cli
