// dist2: command-line surface for the 2-distance coloring toolkit.
//
// Subcommands: analyze, detect, discharge, color, verify, exact, generate,
// corpus.  Text output is human-first; pass --json for schema-stable JSON.
// Exit codes: 0 success, 1 parse/usage error, 2 invalid coloring,
// 3 irreducible instance or failed extension, 4 search budget exceeded.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dist2/analysis.hpp"
#include "dist2/coloring.hpp"
#include "dist2/configurations.hpp"
#include "dist2/discharge.hpp"
#include "dist2/generators.hpp"
#include "dist2/graph.hpp"
#include "dist2/io.hpp"
#include "dist2/reduce.hpp"

using nlohmann::json;
using namespace dist2;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidColoring = 2;
constexpr int kExitIrreducible = 3;
constexpr int kExitBudget = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path) {
  try {
    if (path == "-") return parse_edge_list(std::cin);
    return load_edge_list(path);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const GraphError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int effective_delta(const Graph& g, int delta_flag) {
  return delta_flag > 0 ? delta_flag : g.max_degree();
}

// --regime A|B, or inferred: A if mad < 8/3 and D >= 6, else B if mad < 14/5
// and D >= 10.
const Regime& resolve_regime(const std::string& flag, const Graph& g, int D) {
  if (flag == "A") return Regime::A();
  if (flag == "B") return Regime::B();
  if (!flag.empty()) throw UsageError("unknown regime '" + flag + "' (expected A or B)");
  if (g.vertex_count() == 0) throw UsageError("cannot infer a regime for an empty graph; pass --regime");
  Rational mad = mad_exact(g);
  for (const Regime* r : {&Regime::A(), &Regime::B()}) {
    if (mad < r->mad_bound && D >= r->delta_min) return *r;
  }
  throw UsageError("cannot infer a regime: mad = " + mad.str() + ", max degree " +
                   std::to_string(D) + " fits neither (mad < 8/3, D >= 6) nor (mad < 14/5, D >= 10); pass --regime");
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

void write_coloring_file(const std::string& path, const std::vector<int>& colors) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open output file: " + path);
  write_coloring(colors, out);
}

int distinct_used(const Coloring& c) {
  std::vector<char> seen(static_cast<size_t>(std::max(c.k, 1)), 0);
  int used = 0;
  for (int col : c.colors)
    if (col >= 0 && !seen[static_cast<size_t>(col)]) {
      seen[static_cast<size_t>(col)] = 1;
      ++used;
    }
  return used;
}

json coloring_json(const Coloring& c) {
  json j;
  j["k"] = c.k;
  j["colors_used"] = distinct_used(c);
  j["colors"] = c.colors;
  return j;
}

// ---------------------------------------------------------------- analyze --

int run_analyze(const std::string& input, bool as_json) {
  Graph g = load_graph(input);
  json j;
  std::ostringstream text;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  text << "n            " << g.vertex_count() << "\n";
  text << "m            " << g.edge_count() << "\n";
  if (g.vertex_count() == 0) {
    j["max_degree"] = nullptr;
    j["average_degree"] = nullptr;
    j["mad"] = nullptr;
    j["girth"] = nullptr;
    emit(j, as_json, text.str());
    return kExitOk;
  }
  Rational ad = average_degree(g);
  Rational mad = mad_exact(g);
  std::optional<int> gi = girth(g);
  j["max_degree"] = g.max_degree();
  j["average_degree"] = ad.str();
  j["mad"] = mad.str();
  if (gi) j["girth"] = *gi; else j["girth"] = nullptr;
  text << "max_degree   " << g.max_degree() << "\n";
  text << "avg_degree   " << ad.str() << "\n";
  text << "mad          " << mad.str() << "\n";
  text << "girth        " << (gi ? std::to_string(*gi) : std::string("none (forest)")) << "\n";
  emit(j, as_json, text.str());
  return kExitOk;
}

// ----------------------------------------------------------------- detect --

int run_detect(const std::string& input, const std::string& regime_flag, int delta_flag,
               bool as_json) {
  Graph g = load_graph(input);
  int D = effective_delta(g, delta_flag);
  const Regime& regime = resolve_regime(regime_flag, g, D);
  std::vector<Configuration> configs;
  try {
    configs = find_configurations(g, regime.label, D);
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
  json j;
  j["regime"] = regime_label_name(regime.label);
  j["delta"] = D;
  j["configurations"] = json::array();
  std::ostringstream text;
  text << "regime " << regime_label_name(regime.label) << ", delta " << D << ": "
       << configs.size() << " configuration(s)\n";
  for (const Configuration& c : configs) {
    json jc;
    jc["kind"] = config_kind_name(c.kind);
    jc["witness"] = c.witness;
    jc["deletable"] = c.deletable;
    j["configurations"].push_back(jc);
    text << "  " << config_kind_name(c.kind) << "  witness [";
    for (size_t i = 0; i < c.witness.size(); ++i) text << (i ? " " : "") << c.witness[i];
    text << "]  deletable [";
    for (size_t i = 0; i < c.deletable.size(); ++i) text << (i ? " " : "") << c.deletable[i];
    text << "]\n";
  }
  emit(j, as_json, text.str());
  return kExitOk;
}

// -------------------------------------------------------------- discharge --

int run_discharge(const std::string& input, const std::string& regime_flag, int delta_flag,
                  const std::string& transfers_out, bool as_json) {
  Graph g = load_graph(input);
  int D = effective_delta(g, delta_flag);
  const Regime& regime = resolve_regime(regime_flag, g, D);
  AuditReport rep = audit(g, regime, D);

  if (!transfers_out.empty()) {
    std::ofstream out(transfers_out);
    if (!out) throw UsageError("cannot open output file: " + transfers_out);
    out << "rule,from,to,amount\n";
    for (const Transfer& t : rep.state.transfers) {
      out << t.rule << "," << t.from << "," << t.to << "," << t.amount.str() << "\n";
    }
  }

  json j;
  j["regime"] = regime_label_name(rep.regime);
  j["declared_delta"] = rep.declared_delta;
  j["observed_delta"] = rep.observed_delta;
  j["mad"] = rep.mad.str();
  j["mad_within_bound"] = rep.mad_within_bound;
  j["sum_initial"] = rep.sum_initial.str();
  j["sum_final"] = rep.sum_final.str();
  j["sum_initial_negative"] = rep.sum_initial_negative;
  j["conservation_ok"] = rep.conservation_ok;
  j["transfers"] = rep.state.transfers.size();
  j["negative_vertices"] = json::array();
  for (const NegativeVertex& nv : rep.negative_vertices) {
    j["negative_vertices"].push_back({{"vertex", nv.vertex}, {"charge", nv.charge.str()}});
  }
  j["configurations"] = rep.configurations.size();
  j["contradiction_flags"] = rep.contradiction_flags;
  j["notes"] = rep.notes;

  std::ostringstream text;
  text << "regime            " << regime_label_name(rep.regime) << "\n";
  text << "delta             declared " << rep.declared_delta << ", observed "
       << rep.observed_delta << "\n";
  text << "mad               " << rep.mad.str() << (rep.mad_within_bound ? "  (< bound " : "  (NOT < bound ")
       << regime.mad_bound.str() << ")\n";
  text << "sum initial       " << rep.sum_initial.str()
       << (rep.sum_initial_negative ? "  (negative)" : "  (NOT negative)") << "\n";
  text << "sum final         " << rep.sum_final.str() << "\n";
  text << "conservation      " << (rep.conservation_ok ? "exact" : "BROKEN") << "\n";
  text << "transfers         " << rep.state.transfers.size() << "\n";
  text << "negative vertices " << rep.negative_vertices.size() << "\n";
  for (const NegativeVertex& nv : rep.negative_vertices) {
    text << "    v" << nv.vertex << "  " << nv.charge.str() << "\n";
  }
  text << "configurations    " << rep.configurations.size() << "\n";
  for (const std::string& s : rep.notes) text << "note: " << s << "\n";
  for (const std::string& s : rep.contradiction_flags) text << "CONTRADICTION: " << s << "\n";
  emit(j, as_json, text.str());
  return kExitOk;
}

// ------------------------------------------------------------------ color --

int run_color(const std::string& input, const std::string& regime_flag, int delta_flag,
              const std::string& out_path, bool as_json) {
  Graph g = load_graph(input);
  int D = effective_delta(g, delta_flag);
  const Regime& regime = resolve_regime(regime_flag, g, D);
  Coloring c;
  try {
    c = constructive_color(g, regime);
  } catch (const IrreducibleError& e) {
    std::cerr << "irreducible: " << e.what() << "\n";
    return kExitIrreducible;
  } catch (const ExtensionContradictionError& e) {
    std::cerr << "extension failed: " << e.what() << "\n";
    return kExitIrreducible;
  }
  std::vector<ColorViolation> bad = verify_coloring(g, c);
  if (!out_path.empty()) write_coloring_file(out_path, c.colors);
  json j = coloring_json(c);
  j["valid"] = bad.empty();
  std::ostringstream text;
  text << "colored " << g.vertex_count() << " vertices with " << distinct_used(c) << " of k="
       << c.k << " colors; verification " << (bad.empty() ? "ok" : "FAILED") << "\n";
  if (out_path.empty() && !as_json) {
    std::ostringstream body;
    write_coloring(c.colors, body);
    text << body.str();
  }
  emit(j, as_json, text.str());
  return bad.empty() ? kExitOk : kExitInvalidColoring;
}

// ----------------------------------------------------------------- verify --

int run_verify(const std::string& input, const std::string& coloring_path, int k_flag,
               bool as_json) {
  Graph g = load_graph(input);
  std::ifstream in(coloring_path);
  if (!in) throw UsageError("cannot open coloring file: " + coloring_path);
  std::vector<int> colors;
  try {
    colors = parse_coloring(in, g.vertex_count());
  } catch (const ParseError& e) {
    throw UsageError(coloring_path + ": " + e.what());
  }
  Coloring c;
  c.k = k_flag > 0 ? k_flag : g.max_degree() + 2;
  c.colors = colors;
  std::vector<ColorViolation> bad;
  try {
    bad = verify_coloring(g, c);
  } catch (const GraphError& e) {
    std::cerr << "invalid coloring: " << e.what() << "\n";
    return kExitInvalidColoring;
  }
  json j;
  j["k"] = c.k;
  j["valid"] = bad.empty();
  j["violations"] = json::array();
  std::ostringstream text;
  if (bad.empty()) {
    text << "valid 2-distance coloring (k = " << c.k << ")\n";
  } else {
    text << bad.size() << " violation(s):\n";
  }
  for (const ColorViolation& v : bad) {
    j["violations"].push_back({{"u", v.u}, {"v", v.v}, {"color", v.color}});
    text << "  vertices " << v.u << " and " << v.v << " share color " << v.color << "\n";
  }
  emit(j, as_json, text.str());
  return bad.empty() ? kExitOk : kExitInvalidColoring;
}

// ------------------------------------------------------------------ exact --

int run_exact(const std::string& input, long long budget, const std::string& out_path,
              bool as_json) {
  Graph g = load_graph(input);
  if (budget < 0) throw UsageError("--budget must be >= 0");
  ExactResult r = exact_chi2(g, budget);
  json j;
  j["exact"] = r.exact;
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound;
  j["nodes"] = r.nodes;
  if (r.exact) j["chi2"] = r.upper_bound;
  std::ostringstream text;
  if (r.exact) {
    text << "chi2 = " << r.upper_bound << " (exact, " << r.nodes << " nodes)\n";
  } else {
    text << "budget exceeded after " << r.nodes << " nodes: " << r.lower_bound
         << " <= chi2 <= " << r.upper_bound << "\n";
  }
  if (!out_path.empty() && r.exact) write_coloring_file(out_path, r.best.colors);
  emit(j, as_json, text.str());
  return r.exact ? kExitOk : kExitBudget;
}

// --------------------------------------------------------------- generate --

GeneratorSpec spec_from_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open spec file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
  GeneratorSpec spec;
  try {
    spec.kind = generator_kind_by_name(j.at("kind").get<std::string>());
    if (j.contains("delta")) spec.delta = j["delta"].get<int>();
    if (j.contains("n")) spec.n = j["n"].get<int>();
    if (j.contains("mad_cap")) spec.mad_cap = Rational::parse(j["mad_cap"].get<std::string>());
    if (j.contains("delta_target")) spec.delta_target = j["delta_target"].get<int>();
    if (j.contains("seed")) spec.seed = j["seed"].get<unsigned long long>();
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  return spec;
}

int run_generate(const std::string& kind_name, const std::string& spec_path, int delta,
                 int n, const std::string& mad_cap, int delta_target,
                 unsigned long long seed, const std::string& out_path, bool as_json) {
  GeneratorSpec spec;
  if (!spec_path.empty()) {
    spec = spec_from_json(spec_path);
  } else {
    if (kind_name.empty()) throw UsageError("generate: pass a kind or --spec file");
    try {
      spec.kind = generator_kind_by_name(kind_name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    spec.delta = delta;
    spec.n = n;
    if (!mad_cap.empty()) spec.mad_cap = Rational::parse(mad_cap);
    spec.delta_target = delta_target;
    spec.seed = seed;
  }
  Graph g;
  try {
    g = generate(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot open output file: " + out_path);
    write_edge_list(g, out);
  }
  json j;
  j["kind"] = generator_kind_name(spec.kind);
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["max_degree"] = g.max_degree();
  // summary on stderr so the stdout edge list stays pipeable
  std::cerr << generator_kind_name(spec.kind) << ": n=" << g.vertex_count()
            << " m=" << g.edge_count() << " max_degree=" << g.max_degree()
            << "\n";
  std::string text;
  if (out_path.empty() && !as_json) {
    std::ostringstream body;
    write_edge_list(g, body);
    text = body.str();
  }
  emit(j, as_json, text);
  return kExitOk;
}

// ----------------------------------------------------------------- corpus --

int run_corpus(const std::string& regime_flag, int count, int n_max, int delta_min,
               int delta_max, const std::string& mad_cap_flag, unsigned long long seed,
               bool as_json) {
  const Regime& regime = regime_flag == "B" ? Regime::B() : Regime::A();
  if (regime_flag != "A" && regime_flag != "B") {
    throw UsageError("corpus: --regime A|B is required");
  }
  Rational cap = mad_cap_flag.empty() ? regime.mad_bound : Rational::parse(mad_cap_flag);
  if (delta_min <= 0) delta_min = regime.delta_min;
  if (delta_max < delta_min) delta_max = delta_min;
  if (n_max <= delta_max) throw UsageError("corpus: need --n-max > delta range");

  int successes = 0, irreducible = 0, invalid = 0, max_colors = 0;
  std::vector<unsigned long long> failed_seeds;
  std::ostringstream text;
  for (int i = 0; i < count; ++i) {
    unsigned long long s = seed + static_cast<unsigned long long>(i);
    int span = delta_max - delta_min + 1;
    int dt = delta_min + static_cast<int>(s % static_cast<unsigned long long>(span));
    int n_lo = dt + 2;
    int n = n_lo + static_cast<int>((s / 7) % static_cast<unsigned long long>(
                                        std::max(1, n_max - n_lo + 1)));
    Graph g = random_sparse(n, cap, dt, s);
    std::string status;
    try {
      Coloring c = constructive_color(g, regime);
      if (verify_coloring(g, c).empty()) {
        ++successes;
        max_colors = std::max(max_colors, distinct_used(c));
        status = "ok, " + std::to_string(distinct_used(c)) + " colors";
      } else {
        ++invalid;
        failed_seeds.push_back(s);
        status = "INVALID COLORING";
      }
    } catch (const GraphError& e) {
      ++irreducible;
      failed_seeds.push_back(s);
      status = std::string("FAILED: ") + e.what();
    }
    text << "seed " << s << "  n=" << n << " delta=" << dt << "  " << status << "\n";
  }
  text << "instances " << count << ", successes " << successes << ", irreducible/failed "
       << irreducible << ", invalid " << invalid << ", max colors used " << max_colors
       << "\n";
  json j;
  j["regime"] = regime_label_name(regime.label);
  j["instances"] = count;
  j["successes"] = successes;
  j["irreducible"] = irreducible;
  j["invalid"] = invalid;
  j["max_colors_used"] = max_colors;
  j["failed_seeds"] = failed_seeds;
  emit(j, as_json, text.str());
  return failed_seeds.empty() ? kExitOk : kExitIrreducible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-distance coloring toolkit: sparsity analytics, reducible-configuration "
               "detection, mechanical discharging, constructive coloring.\n"
               "Edge-list files: one 'u v' per line, '#' comments, optional 'n <count>' "
               "header; vertex ids are dense 0..n-1 and are not compacted."};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON instead of text");

  std::string input, coloring_path, regime_flag, out_path, transfers_out, mad_cap, spec_path,
      kind_name;
  int delta_flag = 0, k_flag = 0, n_flag = 0, delta_target = 0;
  int count = 20, n_max = 40, delta_min = 0, delta_max = 0;
  long long budget = 10'000'000;
  unsigned long long seed = 1;

  CLI::App* analyze = app.add_subcommand("analyze", "graph analytics: n, m, degrees, mad, girth");
  analyze->add_option("input", input, "edge-list file")->required();

  CLI::App* detect = app.add_subcommand("detect", "list reducible configurations");
  detect->add_option("input", input, "edge-list file")->required();
  detect->add_option("--regime", regime_flag, "A or B (default: inferred)");
  detect->add_option("--delta", delta_flag, "declared maximum degree (default: observed)");

  CLI::App* discharge = app.add_subcommand("discharge", "run the charging rules and audit");
  discharge->add_option("input", input, "edge-list file")->required();
  discharge->add_option("--regime", regime_flag, "A or B (default: inferred)");
  discharge->add_option("--delta", delta_flag, "declared maximum degree (default: observed)");
  discharge->add_option("--transfers-out", transfers_out, "write transfer log CSV here");

  CLI::App* color = app.add_subcommand("color", "constructive 2-distance (delta+2)-coloring");
  color->add_option("input", input, "edge-list file")->required();
  color->add_option("--regime", regime_flag, "A or B (default: inferred)");
  color->add_option("--delta", delta_flag, "declared maximum degree (default: observed)");
  color->add_option("--out", out_path, "write 'v c' coloring file here");

  CLI::App* verify = app.add_subcommand("verify", "check a coloring file against a graph");
  verify->add_option("input", input, "edge-list file")->required();
  verify->add_option("coloring", coloring_path, "coloring file ('v c' lines)")->required();
  verify->add_option("--k", k_flag, "palette size (default: max degree + 2)");

  CLI::App* exact = app.add_subcommand("exact", "exact 2-distance chromatic number");
  exact->add_option("input", input, "edge-list file")->required();
  exact->add_option("--budget", budget, "search node budget (default 10^7)");
  exact->add_option("--out", out_path, "write an optimal coloring here");

  CLI::App* generate = app.add_subcommand("generate", "build a named instance");
  generate->add_option("kind", kind_name,
                       "moore_2_2 | moore_3_2 | moore_7_2 | wegner_girth3 | wegner_girth4 | random_sparse");
  generate->add_option("--spec", spec_path, "JSON spec file (alternative to flags)");
  generate->add_option("--delta", delta_flag, "wegner kinds: even delta >= 8");
  generate->add_option("--n", n_flag, "random_sparse: vertex count");
  generate->add_option("--mad-cap", mad_cap, "random_sparse: rational cap, e.g. 8/3");
  generate->add_option("--delta-target", delta_target, "random_sparse: forced max degree");
  generate->add_option("--seed", seed, "random_sparse: RNG seed");
  generate->add_option("--out", out_path, "write edge list here");

  CLI::App* corpus = app.add_subcommand("corpus", "generate+color+verify a batch, with summary");
  corpus->add_option("--regime", regime_flag, "A or B")->required();
  corpus->add_option("--count", count, "number of instances (default 20)");
  corpus->add_option("--n-max", n_max, "largest vertex count (default 40)");
  corpus->add_option("--delta-min", delta_min, "smallest forced max degree (default: regime minimum)");
  corpus->add_option("--delta-max", delta_max, "largest forced max degree");
  corpus->add_option("--mad-cap", mad_cap, "rational cap (default: regime bound)");
  corpus->add_option("--seed", seed, "base RNG seed");

  // accept global flags (--json) after the subcommand name too
  for (CLI::App* sub : {analyze, detect, discharge, color, verify, exact, generate, corpus})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // prints help or the error; normalize every failure to the usage code
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(analyze)) return run_analyze(input, as_json);
    if (app.got_subcommand(detect)) return run_detect(input, regime_flag, delta_flag, as_json);
    if (app.got_subcommand(discharge))
      return run_discharge(input, regime_flag, delta_flag, transfers_out, as_json);
    if (app.got_subcommand(color))
      return run_color(input, regime_flag, delta_flag, out_path, as_json);
    if (app.got_subcommand(verify)) return run_verify(input, coloring_path, k_flag, as_json);
    if (app.got_subcommand(exact)) return run_exact(input, budget, out_path, as_json);
    if (app.got_subcommand(generate))
      return run_generate(kind_name, spec_path, delta_flag, n_flag, mad_cap, delta_target,
                          seed, out_path, as_json);
    if (app.got_subcommand(corpus))
      return run_corpus(regime_flag, count, n_max, delta_min, delta_max, mad_cap, seed,
                        as_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << "error: no subcommand\n";
  return kExitUsage;
}
