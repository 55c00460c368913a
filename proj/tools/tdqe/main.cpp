// tdqe: command line front end for the elimination pipeline.
//
// Exit codes: 0 ok, 2 parse error, 3 validation failure, 4 bad arguments or
// configuration, 10 internal error.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tdqe/benchgen.hpp"
#include "tdqe/error.hpp"
#include "tdqe/graph.hpp"
#include "tdqe/ordering.hpp"
#include "tdqe/pace_io.hpp"
#include "tdqe/parser.hpp"
#include "tdqe/pipeline.hpp"
#include "tdqe/stats.hpp"
#include "tdqe/tree_decomp.hpp"

namespace fs = std::filesystem;
using namespace tdqe;

namespace {

enum Exit { kOk = 0, kParse = 2, kValidation = 3, kConfig = 4, kInternal = 10 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  fs::path parent = fs::path(path).parent_path();
  if (!parent.empty()) fs::create_directories(parent);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

QuantFormula load_formula(const std::string& path) { return parse_formula(read_file(path)); }

bool looks_like_gr(const std::string& path, const std::string& text) {
  if (fs::path(path).extension() == ".gr") return true;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    return line.rfind("p tw", 0) == 0;
  }
  return false;
}

TdStrategy td_strategy_of(const std::string& s) {
  if (s == "min-fill") return TdStrategy::MinFill;
  if (s == "min-degree") return TdStrategy::MinDegree;
  throw ConfigError("unknown decomposition strategy '" + s + "'");
}

std::vector<std::string> names_of(const std::vector<Var>& vs, const VarTable& vars) {
  std::vector<std::string> out;
  for (Var v : vs) out.push_back(vars.name(v));
  return out;
}

// "x1,x3,x2" or "x1 x3 x2"; must be a permutation of the quantified block.
std::vector<Var> parse_order(const std::string& text, const QuantFormula& f) {
  std::vector<Var> order;
  std::string tok;
  std::istringstream in(text);
  while (in >> tok) {
    std::istringstream parts(tok);
    std::string name;
    while (std::getline(parts, name, ',')) {
      if (name.empty()) continue;
      auto v = f.vars().find(name);
      if (!v || !f.is_quantified(*v)) throw ConfigError("'" + name + "' is not a quantified variable");
      order.push_back(*v);
    }
  }
  auto a = order;
  auto b = f.quantified();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw ConfigError("--order must list every quantified variable exactly once");
  return order;
}

// Options shared by order, fme, project and compare.
struct RunArgs {
  std::string strategy = "td";
  std::string order;
  std::string td_file;
  std::string td_strategy = "min-fill";
  std::uint64_t seed = 0;
  bool raw_count = false;
  std::size_t cap = 10'000'000;

  void attach(CLI::App* app, bool with_strategy = true) {
    if (with_strategy) app->add_option("--strategy", strategy, "td, td-walk, td-dp, greedy, natural, brown, random[:N]");
    app->add_option("--order", order, "explicit elimination order, comma separated");
    app->add_option("--td", td_file, "decomposition of the primal graph (.td, vertices numbered as by 'graph')");
    app->add_option("--td-strategy", td_strategy, "min-fill or min-degree");
    app->add_option("--seed", seed, "seed for random orders and heuristic tie-breaks");
    app->add_flag("--raw-count", raw_count, "count atoms without deduplication");
    app->add_option("--cap", cap, "abort when a step would produce more atoms than this (0: no cap)");
  }

  PipelineOptions options(const QuantFormula& f, const std::string& strat) const {
    PipelineOptions o;
    o.seed = seed;
    o.policy = raw_count ? CountPolicy::Raw : CountPolicy::Canonical;
    if (cap > 0) o.atom_cap = cap;
    o.td_strategy = td_strategy_of(td_strategy);
    if (!order.empty()) {
      o.strategy = Strategy::Given;
      o.order = parse_order(order, f);
      return o;
    }
    parse_strategy(strat, o);
    if (!td_file.empty()) {
      if (o.strategy != Strategy::TD && o.strategy != Strategy::TDDynamic) o.strategy = Strategy::TD;
      o.td = read_td(read_file(td_file), build_primal(f).vertices());
    }
    return o;
  }
};

void write_stats(const std::string& path, const StatsRecord& s) {
  if (!path.empty()) write_output(path, to_json(s).dump(2) + "\n");
}

int cmd_gen(GenConfig cfg, const std::string& out) {
  validate(cfg);
  KTree kt = gen_ktree(cfg);
  QuantFormula f = gen_formula(kt, cfg);
  std::string text = format_formula(f);
  if (out.empty()) {
    std::cout << text;
    return kOk;
  }
  fs::path base(out);
  if (base.extension() == ".qf") base.replace_extension();
  write_output(base.string() + ".qf", text);
  nlohmann::json side = to_json(cfg);
  GenReport rep = gen_properties_check(f, kt, cfg);
  side["ktree_edges"] = kt.graph.num_edges();
  side["attachment_width"] = width(ktree_decomposition(kt));
  side["checks_ok"] = rep.ok();
  write_output(base.string() + ".json", side.dump(2) + "\n");
  return kOk;
}

int cmd_graph(const std::string& input, const std::string& out) {
  QuantFormula f = load_formula(input);
  Graph g = build_primal(f);
  std::string text = "c vertices";
  for (Var v : g.vertices()) text += " " + f.vars().name(v);
  text += "\n" + write_gr(g);
  write_output(out, text);
  return kOk;
}

int cmd_td(const std::string& input, const std::string& strategy, const std::string& import,
           const std::string& out, std::uint64_t seed) {
  std::string text = read_file(input);
  Graph g = looks_like_gr(input, text) ? read_gr(text) : build_primal(parse_formula(text));
  std::vector<Var> vertices = g.vertices();
  TreeDecomp t;
  if (!import.empty()) {
    t = read_td(read_file(import), vertices);
    if (auto v = validate_td(g, t)) throw InvalidDecomposition(to_string(v->condition) + ": " + v->detail);
  } else {
    t = decompose(g, td_strategy_of(strategy), seed);
  }
  write_output(out, write_td(t, vertices));
  NiceTreeDecomp nice = nicify(t);
  std::cerr << "width " << width(t) << " height " << height(t) << " nice_nodes " << nice.nodes.size()
            << " nice_height " << height(nice) << "\n";
  return kOk;
}

int cmd_order(const std::string& input, const RunArgs& args) {
  QuantFormula f = load_formula(input);
  PipelineOptions o = args.options(f, args.strategy);
  ElimOrder order = planned_order(f, o);
  nlohmann::json j{{"strategy", strategy_name(o)},
                   {"provenance", to_string(order.provenance)},
                   {"order", names_of(order.vars, f.vars())}};
  if (o.strategy == Strategy::Random) j["seed"] = o.seed;
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_fme(const std::string& input, const RunArgs& args, const std::string& stats) {
  QuantFormula f = load_formula(input);
  PipelineOptions o = args.options(f, args.strategy);
  auto start = std::chrono::steady_clock::now();
  FmeOutcome r = run_fme(f, o);
  r.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.stats.instance = fs::path(input).stem().string();
  std::cout << format_atoms(r.set.atoms(), f.vars(), r.set.is_false());
  write_stats(stats, r.stats);
  return kOk;
}

int cmd_project(const std::string& input, const RunArgs& args, const std::string& stats) {
  QuantFormula f = load_formula(input);
  PipelineOptions o = args.options(f, args.strategy);
  auto start = std::chrono::steady_clock::now();
  CadOutcome r = run_cad(f, o);
  r.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.stats.instance = fs::path(input).stem().string();
  std::cout << format_polys(r.set.polys(), f.vars());
  write_stats(stats, r.stats);
  return kOk;
}

std::vector<std::string> instances_of(const std::string& input) {
  if (!fs::is_directory(input)) return {input};
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(input)) {
    if (e.is_regular_file() && e.path().extension() == ".qf") out.push_back(e.path().string());
  }
  std::sort(out.begin(), out.end());
  if (out.empty()) throw ConfigError("no .qf files in " + input);
  return out;
}

int cmd_compare(const std::string& input, const std::vector<std::string>& strategies, const std::string& mode,
                const RunArgs& args, const std::string& json_out) {
  if (mode != "auto" && mode != "fme" && mode != "cad") throw ConfigError("--mode must be auto, fme or cad");
  nlohmann::json rows = nlohmann::json::array();
  std::cout << std::left << std::setw(24) << "instance" << std::setw(12) << "strategy" << std::right
            << std::setw(12) << "final" << std::setw(12) << "peak" << std::setw(12) << "ms" << "  verdict\n";
  for (const std::string& path : instances_of(input)) {
    QuantFormula f = load_formula(path);
    bool cad = mode == "cad" || (mode == "auto" && f.mode() != FormulaMode::Linear);
    for (const std::string& s : strategies) {
      PipelineOptions o = args.options(f, s);
      if (cad && o.strategy == Strategy::Greedy) {
        std::cerr << "skipping " << path << " with greedy: polynomial instance\n";
        continue;
      }
      auto start = std::chrono::steady_clock::now();
      StatsRecord rec = cad ? run_cad(f, o).stats : run_fme(f, o).stats;
      rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      rec.instance = fs::path(path).stem().string();
      std::cout << std::left << std::setw(24) << rec.instance << std::setw(12) << rec.strategy << std::right
                << std::setw(12) << rec.final_count << std::setw(12) << rec.peak << std::setw(12) << std::fixed
                << std::setprecision(1) << rec.elapsed_ms << "  " << rec.verdict << "\n";
      rows.push_back(to_json(rec));
    }
  }
  if (!json_out.empty()) write_output(json_out, rows.dump(2) + "\n");
  return kOk;
}

int cmd_validate(const std::string& td_file, const std::string& gr_file) {
  Graph g = read_gr(read_file(gr_file));
  TreeDecomp t = read_td(read_file(td_file));
  if (auto v = validate_td(g, t)) {
    std::cout << "Violation: " << to_string(v->condition) << ": " << v->detail << "\n";
    return kValidation;
  }
  std::cout << "Ok (width " << width(t) << ")\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantifier elimination along tree decompositions"};
  app.require_subcommand(1);
  int code = kOk;

  GenConfig gen_cfg;
  std::string gen_out;
  double include_prob = gen_cfg.include_prob;
  std::size_t gen_atoms = 0, gen_elim = 0;
  auto* gen = app.add_subcommand("gen", "generate a bounded-treewidth instance");
  gen->add_option("--k", gen_cfg.k, "treewidth of the k-tree");
  gen->add_option("--vars", gen_cfg.n_vars, "number of variables");
  gen->add_option("--atoms", gen_atoms, "number of atoms (default: one per bag)");
  gen->add_option("--maxdeg", gen_cfg.max_deg, "maximum total degree of an atom");
  gen->add_option("--elim", gen_elim, "number of quantified variables (default: all)");
  gen->add_option("--include-prob", include_prob, "probability of each extra monomial");
  gen->add_option("--seed", gen_cfg.seed, "generator seed");
  gen->add_option("--out", gen_out, "output base path; writes <out>.qf and <out>.json");

  std::string input, out, td_strategy = "min-fill", td_import;
  std::uint64_t td_seed = 0;
  auto* graph = app.add_subcommand("graph", "print the primal graph in PACE .gr format");
  graph->add_option("formula", input)->required();
  graph->add_option("--out", out);

  auto* td = app.add_subcommand("td", "compute or import a tree decomposition");
  td->add_option("input", input, "formula or .gr file")->required();
  td->add_option("--strategy", td_strategy, "min-fill or min-degree");
  td->add_option("--import", td_import, "read and validate an external .td instead");
  td->add_option("--seed", td_seed, "random tie-breaking seed (0: lowest index)");
  td->add_option("--out", out);

  RunArgs run;
  std::string stats;
  auto* order = app.add_subcommand("order", "print an elimination order as JSON");
  order->add_option("formula", input)->required();
  run.attach(order);

  auto* fme = app.add_subcommand("fme", "eliminate the quantified block by Fourier-Motzkin");
  fme->add_option("formula", input)->required();
  fme->add_option("--stats", stats, "write statistics JSON here");
  run.attach(fme);

  auto* project = app.add_subcommand("project", "McCallum projection of the quantified block");
  project->add_option("formula", input)->required();
  project->add_option("--stats", stats, "write statistics JSON here");
  run.attach(project);

  std::vector<std::string> strategies{"td", "greedy"};
  std::string mode = "auto", json_out;
  auto* compare = app.add_subcommand("compare", "run several strategies over instances");
  compare->add_option("input", input, "formula or directory of .qf files")->required();
  compare->add_option("--strategies", strategies, "strategies to run")->delimiter(',');
  compare->add_option("--mode", mode, "auto, fme or cad");
  compare->add_option("--json", json_out, "write all records here");
  run.attach(compare, false);

  std::string v_td, v_gr;
  auto* validate_cmd = app.add_subcommand("validate", "check a .td against a .gr");
  validate_cmd->add_option("--td", v_td)->required();
  validate_cmd->add_option("--gr", v_gr)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (*gen) {
      gen_cfg.include_prob = include_prob;
      if (gen_atoms > 0) gen_cfg.n_atoms = gen_atoms;
      if (gen_elim > 0) gen_cfg.n_elim = gen_elim;
      code = cmd_gen(gen_cfg, gen_out);
    } else if (*graph) {
      code = cmd_graph(input, out);
    } else if (*td) {
      code = cmd_td(input, td_strategy, td_import, out, td_seed);
    } else if (*order) {
      code = cmd_order(input, run);
    } else if (*fme) {
      code = cmd_fme(input, run, stats);
    } else if (*project) {
      code = cmd_project(input, run, stats);
    } else if (*compare) {
      code = cmd_compare(input, strategies, mode, run, json_out);
    } else if (*validate_cmd) {
      code = cmd_validate(v_td, v_gr);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const MixedModeError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const DisconnectedGraph& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return code;
}
