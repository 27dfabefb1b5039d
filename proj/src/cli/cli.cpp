// Copyright 2026 The penrose-quantale Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "penrose/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "penrose/analysis.hpp"
#include "penrose/error.hpp"
#include "penrose/rep_io.hpp"
#include "penrose/representation.hpp"
#include "penrose/seqspace.hpp"
#include "penrose/theory.hpp"
#include "penrose/tiling.hpp"

namespace penrose::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kMaxEnumerateLevel = 30;
constexpr std::size_t kMaxCountLevel = 90;
constexpr std::size_t kMaxTheoryLevel = 64;
constexpr std::size_t kMaxRepLevel = 16;
constexpr std::size_t kMaxOrder = 20;
constexpr std::uint64_t kDefaultSeed = 20260415;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_range(const char* what, std::size_t value, std::size_t lo, std::size_t hi) {
  if (value < lo || value > hi) {
    throw Usage(std::string(what) + " must be in " + std::to_string(lo) + ".." + std::to_string(hi) + ", got " +
                std::to_string(value));
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Usage("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Usage("cannot write " + out_path);
  file << text;
  if (!file.flush()) throw Usage("cannot write " + out_path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

RelRep load_rep(const std::string& path) { return read_rep_json(read_file(path)); }

Tile parse_tile(const std::string& s) { return s == "S" ? Tile::S : Tile::L; }

json witness_json(const RelRep& rep, const std::optional<StatePair>& w) {
  if (!w) return nullptr;
  return json::array({rep.label(w->first), rep.label(w->second)});
}

std::string pair_text(const RelRep& rep, const StatePair& p) {
  return "(" + rep.label(p.first) + ", " + rep.label(p.second) + ")";
}

// Options shared across verbs; each subcommand binds the ones it uses.
struct Options {
  std::size_t level = 0;
  std::size_t order = 0;
  std::vector<std::string> files;
  std::string out_path;
  std::string theory_path;
  bool pent = false;
  bool pens = false;
  bool as_json = false;
  std::uint64_t seed = kDefaultSeed;
  double tolerance = kDefaultTolerance;
  std::string root = "L";
  std::size_t multiplicity = 1;
  std::size_t blocks = 1;
  bool random = false;
  std::size_t max_blocks = 3;
  std::size_t max_multiplicity = 3;
  bool no_colors = false;
  bool no_arrows = false;
  std::optional<std::size_t> outline;
  double scale = 120.0;
  std::string fill_large = "#f2c14e";
  std::string fill_small = "#5b8e7d";
  std::string stroke = "#2b2b2b";
  double stroke_width = 1.0;
};

// ---------------------------------------------------------------- sequences

int sequences_enumerate(const Options& o, std::ostream& out) {
  check_range("--level", o.level, 0, kMaxEnumerateLevel);
  const auto seqs = enumerate_sequences(o.level);
  std::string text;
  if (o.as_json) {
    json j{{"length", o.level}, {"count", seqs.size()}, {"sequences", json::array()}};
    for (const auto& s : seqs) j["sequences"].push_back(s.str());
    text = dump(j);
  } else {
    // The empty sequence still counts as one element.
    for (const auto& s : seqs) text += (o.level == 0 ? std::string("()") : s.str()) + "\n";
  }
  emit(text, o.out_path, out);
  return kExitOk;
}

int sequences_count(const Options& o, std::ostream& out) {
  check_range("--level", o.level, 0, kMaxCountLevel);
  const auto n = count_sequences(o.level);
  emit(o.as_json ? dump(json{{"length", o.level}, {"count", n}}) : std::to_string(n) + "\n", o.out_path, out);
  return kExitOk;
}

// ---------------------------------------------------------------- theory

TheoryKind theory_kind(const Options& o) {
  if (o.pent && o.pens) throw Usage("--pent and --pens are exclusive");
  return o.pens ? TheoryKind::PenS : TheoryKind::PenT;
}

int theory_print(const Options& o, std::ostream& out) {
  check_range("--level", o.level, 0, kMaxTheoryLevel);
  const auto kind = theory_kind(o);
  const auto axioms = instantiate(kind, o.level);
  std::string text;
  if (o.as_json) {
    json j{{"theory", theory_name(kind)}, {"max_level", o.level}, {"count", axioms.size()}, {"axioms", json::array()}};
    for (const auto& a : axioms) {
      j["axioms"].push_back({{"name", a.name}, {"lhs", print_term(a.lhs)}, {"rhs", print_term(a.rhs)}});
    }
    text = dump(j);
  } else {
    text = print_theory(axioms);
  }
  emit(text, o.out_path, out);
  return kExitOk;
}

// ---------------------------------------------------------------- rep

void write_rep(const RelRep& rep, const Options& o, std::ostream& out) {
  if (o.out_path.empty()) {
    out << write_rep_json(rep);
    return;
  }
  emit(write_rep_json(rep), o.out_path, out);
  if (o.as_json) {
    out << dump(json{{"out", o.out_path}, {"states", rep.size()}, {"trunc_level", rep.trunc_level()}});
  } else {
    out << "wrote " << rep.size() << " states at level " << rep.trunc_level() << " to " << o.out_path << "\n";
  }
}

const std::string& single_file(const Options& o) {
  if (o.files.size() != 1) throw Usage("exactly one --file is required");
  return o.files.front();
}

int rep_cantor(const Options& o, std::ostream& out) {
  check_range("--level", o.level, 0, kMaxRepLevel);
  write_rep(cantor_rep(o.level), o, out);
  return kExitOk;
}

int rep_induced(const Options& o, std::ostream& out) {
  SigmaSpec spec;
  if (!o.files.empty()) {
    if (o.random) throw Usage("--file and --random are exclusive");
    spec = read_sigma_json(read_file(single_file(o)));
  } else if (o.random) {
    check_range("--level", o.level, 0, kMaxRepLevel);
    check_range("--max-blocks", o.max_blocks, 1, 8);
    check_range("--max-multiplicity", o.max_multiplicity, 1, 8);
    std::mt19937_64 rng(o.seed);
    spec = random_sigma(rng, o.level, o.max_blocks, o.max_multiplicity);
  } else {
    check_range("--level", o.level, 0, kMaxRepLevel);
    check_range("--multiplicity", o.multiplicity, 1, 26);
    check_range("--blocks", o.blocks, 1, 64);
    spec = replicated_sigma(o.level, o.multiplicity, o.blocks);
  }
  write_rep(induced_from_sigma(spec), o, out);
  return kExitOk;
}

int rep_sum(const Options& o, std::ostream& out) {
  if (o.files.empty()) throw Usage("at least one --file is required");
  std::vector<RelRep> reps;
  for (const auto& f : o.files) reps.push_back(load_rep(f));
  write_rep(sum(reps), o, out);
  return kExitOk;
}

int rep_check(const Options& o, std::ostream& out) {
  const RelRep rep = load_rep(single_file(o));
  std::vector<Sequent> axioms;
  std::string name;
  if (!o.theory_path.empty()) {
    if (o.pent || o.pens) throw Usage("--theory excludes --pent and --pens");
    axioms = parse_theory(read_file(o.theory_path));
    name = o.theory_path;
  } else {
    const std::size_t level = o.level == 0 ? rep.trunc_level() : o.level;
    if (level > rep.trunc_level()) {
      throw Usage("--level " + std::to_string(level) + " exceeds the file's truncation level " +
                  std::to_string(rep.trunc_level()));
    }
    const auto kind = theory_kind(o);
    axioms = instantiate(kind, level);
    name = std::string(theory_name(kind));
  }
  const auto report = check_theory(rep, axioms);
  const auto failures = report.failures();
  if (o.as_json) {
    json j{{"theory", name},        {"trunc_level", rep.trunc_level()}, {"axioms", axioms.size()},
           {"failures", failures},  {"pass", failures == 0},           {"results", json::array()}};
    for (const auto& r : report.results) {
      j["results"].push_back({{"name", r.name}, {"pass", r.verdict.pass}, {"witness", witness_json(rep, r.verdict.witness)}});
    }
    out << dump(j);
  } else {
    for (const auto& r : report.results) {
      if (!r.verdict.pass) out << "FAIL " << r.name << " witness " << pair_text(rep, *r.verdict.witness) << "\n";
    }
    if (failures == 0) {
      out << "all axioms PASS (" << axioms.size() << " checked)\n";
    } else {
      out << failures << " of " << axioms.size() << " axioms FAIL\n";
    }
  }
  return failures == 0 ? kExitOk : kExitFail;
}

json blocks_json(const RelRep& rep, const std::vector<std::vector<std::size_t>>& blocks) {
  json arr = json::array();
  for (const auto& b : blocks) {
    json labels = json::array();
    for (auto x : b) labels.push_back(rep.label(x));
    arr.push_back(std::move(labels));
  }
  return arr;
}

int rep_classify(const Options& o, std::ostream& out) {
  const RelRep rep = load_rep(single_file(o));
  const auto c = classify(rep);
  if (o.as_json) {
    out << dump(json{{"states", rep.size()},
                     {"trunc_level", rep.trunc_level()},
                     {"connected", c.connected},
                     {"components", c.components.size()},
                     {"deterministic", c.deterministic},
                     {"algebraically_irreducible", c.algebraically_irreducible},
                     {"seq_injective_per_component", c.seq_injective_per_component},
                     {"nondeterministic_pair", witness_json(rep, c.nondeterministic_pair)},
                     {"seq_collision", witness_json(rep, c.seq_collision)},
                     {"fallback_searches", c.fallback_searches}});
    return kExitOk;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "states: " << rep.size() << "\n";
  out << "components: " << c.components.size() << "\n";
  out << "connected: " << yn(c.connected) << "\n";
  out << "deterministic: " << yn(c.deterministic) << "\n";
  out << "algebraically irreducible: " << yn(c.algebraically_irreducible) << "\n";
  out << "seq injective per component: " << yn(c.seq_injective_per_component) << "\n";
  if (c.nondeterministic_pair) out << "non-deterministic pair: " << pair_text(rep, *c.nondeterministic_pair) << "\n";
  if (c.seq_collision) out << "seq collision: " << pair_text(rep, *c.seq_collision) << "\n";
  return kExitOk;
}

int rep_decompose(const Options& o, std::ostream& out) {
  const RelRep rep = load_rep(single_file(o));
  const auto d = decompose(rep);
  if (o.as_json) {
    out << dump(json{{"components", d.blocks.size()}, {"blocks", blocks_json(rep, d.blocks)}});
    return kExitOk;
  }
  out << d.blocks.size() << " components\n";
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    out << "component " << i << " (" << d.blocks[i].size() << " states):";
    for (auto x : d.blocks[i]) out << " " << rep.label(x);
    out << "\n";
  }
  return kExitOk;
}

int rep_compare(const Options& o, std::ostream& out) {
  if (o.files.size() != 2) throw Usage("rep compare needs exactly two --file arguments");
  const RelRep a = load_rep(o.files[0]);
  const RelRep b = load_rep(o.files[1]);
  const auto r = are_equivalent(a, b);
  if (o.as_json) {
    json j{{"equivalent", r.equivalent}, {"bijection", nullptr}};
    if (r.equivalent) {
      j["bijection"] = json::object();
      for (std::size_t x = 0; x < r.bijection.size(); ++x) j["bijection"][a.label(x)] = b.label(r.bijection[x]);
    }
    out << dump(j);
  } else if (r.equivalent) {
    out << "equivalent\n";
    for (std::size_t x = 0; x < r.bijection.size(); ++x) out << a.label(x) << " -> " << b.label(r.bijection[x]) << "\n";
  } else {
    out << "not equivalent\n";
  }
  return r.equivalent ? kExitOk : kExitFail;
}

int rep_seq(const Options& o, std::ostream& out) {
  const RelRep rep = load_rep(single_file(o));
  const auto seqs = seq_map(rep);
  if (o.as_json) {
    json j = json::object();
    for (std::size_t x = 0; x < rep.size(); ++x) j[rep.label(x)] = seqs[x].str();
    out << dump(json{{"trunc_level", rep.trunc_level()}, {"seq", j}});
    return kExitOk;
  }
  for (std::size_t x = 0; x < rep.size(); ++x) out << rep.label(x) << " " << seqs[x].str() << "\n";
  return kExitOk;
}

int rep_modhom(const Options& o, std::ostream& out) {
  const RelRep rep = load_rep(single_file(o));
  const auto r = seq_module_hom_check(rep);
  std::string gen;
  if (r.failing_generator) gen = print_term(Term::gen(*r.failing_generator));
  if (o.as_json) {
    json j{{"pass", r.pass}, {"failing_state", nullptr}, {"failing_generator", nullptr}};
    if (r.failing_state) j["failing_state"] = rep.label(*r.failing_state);
    if (r.failing_generator) j["failing_generator"] = gen;
    out << dump(j);
  } else if (r.pass) {
    out << "seq module homomorphism PASS\n";
  } else {
    out << "seq module homomorphism FAIL at state " << rep.label(*r.failing_state) << " generator " << gen << "\n";
  }
  return r.pass ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------- tiling

TileTree build_tree(const Options& o) {
  check_range("--order", o.order, 0, kMaxOrder);
  return inflate(parse_tile(o.root), o.order);
}

int tiling_inflate(const Options& o, std::ostream& out) {
  const TileTree tree = build_tree(o);
  const bool with_seq = tree.root().type == Tile::L;
  std::string text;
  if (o.as_json) {
    json j{{"order", tree.order()},
           {"root", std::string(1, tile_char(tree.root().type))},
           {"nodes", tree.nodes().size()},
           {"leaves", json::array()}};
    for (auto leaf : tree.leaves()) {
      const auto& n = tree.node(leaf);
      json v = json::array();
      for (const auto& p : n.vertices) v.push_back({p.x, p.y});
      json entry{{"type", std::string(1, tile_char(n.type))}, {"address", leaf_address(tree, leaf).str()}};
      if (with_seq) entry["seq"] = leaf_to_seq(tree, leaf).str();
      entry["vertices"] = std::move(v);
      j["leaves"].push_back(std::move(entry));
    }
    text = dump(j);
  } else {
    std::ostringstream s;
    s << "order " << tree.order() << " root " << tile_char(tree.root().type) << ": " << tree.leaves().size()
      << " leaves, " << tree.nodes().size() << " nodes\n";
    for (auto leaf : tree.leaves()) {
      s << tile_char(tree.node(leaf).type) << " " << leaf_address(tree, leaf).str();
      if (with_seq) s << " " << leaf_to_seq(tree, leaf).str();
      s << "\n";
    }
    text = s.str();
  }
  emit(text, o.out_path, out);
  return kExitOk;
}

int tiling_svg(const Options& o, std::ostream& out) {
  const TileTree tree = build_tree(o);
  if (o.scale <= 0 || o.stroke_width < 0) throw Usage("--scale must be positive and --stroke-width non-negative");
  if (o.outline && *o.outline > tree.order()) throw Usage("--outline exceeds --order");
  SvgOptions svg;
  svg.scale = o.scale;
  svg.vertex_colors = !o.no_colors;
  svg.arrows = !o.no_arrows;
  svg.outline_level = o.outline;
  svg.fill_large = o.fill_large;
  svg.fill_small = o.fill_small;
  svg.stroke = o.stroke;
  svg.stroke_width = o.stroke_width;
  const std::string doc = render_svg(tree, svg);
  if (o.out_path.empty()) {
    out << doc;
    return kExitOk;
  }
  emit(doc, o.out_path, out);
  if (o.as_json) {
    out << dump(json{{"out", o.out_path}, {"polygons", tree.leaves().size()}});
  } else {
    out << "wrote " << tree.leaves().size() << " polygons to " << o.out_path << "\n";
  }
  return kExitOk;
}

int tiling_rep(const Options& o, std::ostream& out) {
  if (o.root != "L") throw Usage("tiling rep needs an L root");
  write_rep(geometric_rep(build_tree(o)), o, out);
  return kExitOk;
}

int tiling_match(const Options& o, std::ostream& out) {
  if (!(o.tolerance > 0)) throw Usage("--tolerance must be positive");
  const TileTree tree = build_tree(o);
  const auto r = matching_check(tree, o.tolerance);
  if (o.as_json) {
    out << dump(json{{"pass", r.pass},
                     {"vertices", r.vertices},
                     {"shared_edges", r.shared_edges},
                     {"violation", r.pass ? json(nullptr) : json(r.violation)}});
  } else if (r.pass) {
    out << "matching PASS (" << r.vertices << " vertices, " << r.shared_edges << " shared edges)\n";
  } else {
    out << "matching FAIL: " << r.violation << "\n";
  }
  return r.pass ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------- wiring

void add_level(CLI::App* app, Options& o, bool required) {
  auto* opt = app->add_option("-L,--level,--max-level", o.level, "Truncation level");
  if (required) opt->required();
}
void add_out(CLI::App* app, Options& o) { app->add_option("--out", o.out_path, "Output path (default stdout)"); }
void add_json(CLI::App* app, Options& o) { app->add_flag("--json", o.as_json, "JSON report"); }
void add_file(CLI::App* app, Options& o, const char* help) {
  app->add_option("--file", o.files, help)->required()->check(CLI::ExistingFile);
}
void add_theory(CLI::App* app, Options& o) {
  app->add_flag("--pent", o.pent, "Tiling theory (default)");
  app->add_flag("--pens", o.pens, "Sequence theory");
}
void add_tree(CLI::App* app, Options& o) {
  app->add_option("--order", o.order, "Inflation order")->required();
  app->add_option("--root", o.root, "Root tile type")->check(CLI::IsMember({"L", "S"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::function<int()> action;
  CLI::App app{"Finite models of the noncommutative theory of Penrose tilings", "penrose"};
  app.require_subcommand(1);

  auto verb = [&](CLI::App* parent, const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    auto* sub = parent->add_subcommand(name, help);
    sub->callback([&, fn] { action = [&, fn] { return fn(o, out); }; });
    add_json(sub, o);
    return sub;
  };

  auto* seqs = app.add_subcommand("sequences", "Truncated Penrose sequences")->require_subcommand(1);
  {
    auto* e = verb(seqs, "enumerate", "List K_L in lexicographic order", sequences_enumerate);
    add_level(e, o, true);
    add_out(e, o);
    auto* c = verb(seqs, "count", "Size of K_L", sequences_count);
    add_level(c, o, true);
    add_out(c, o);
  }

  auto* theory = app.add_subcommand("theory", "Axiom instances")->require_subcommand(1);
  {
    auto* p = verb(theory, "print", "Print the instances with generators below --level", theory_print);
    add_level(p, o, true);
    add_theory(p, o);
    add_out(p, o);
  }

  auto* rep = app.add_subcommand("rep", "Relational representations")->require_subcommand(1);
  {
    auto* c = verb(rep, "cantor", "Cantor representation on K_L", rep_cantor);
    add_level(c, o, true);
    add_out(c, o);

    auto* i = verb(rep, "induced", "Representation induced by a partitioned sigma map", rep_induced);
    i->add_option("--file", o.files, "Sigma spec JSON")->check(CLI::ExistingFile);
    add_level(i, o, false);
    i->add_option("--multiplicity", o.multiplicity, "Copies of each sequence per block");
    i->add_option("--blocks", o.blocks, "Number of blocks");
    i->add_flag("--random", o.random, "Random spec");
    i->add_option("--seed", o.seed, "Seed for --random");
    i->add_option("--max-blocks", o.max_blocks, "Upper bound on blocks for --random");
    i->add_option("--max-multiplicity", o.max_multiplicity, "Upper bound on fibre size for --random");
    add_out(i, o);

    auto* s = verb(rep, "sum", "Disjoint sum", rep_sum);
    add_file(s, o, "Representation JSON (repeatable)");
    add_out(s, o);

    auto* k = verb(rep, "check", "Check the theory at the file's truncation", rep_check);
    add_file(k, o, "Representation JSON");
    add_theory(k, o);
    add_level(k, o, false);
    k->add_option("--theory", o.theory_path, "Theory file instead of a built-in theory")->check(CLI::ExistingFile);

    add_file(verb(rep, "classify", "Connectivity and determinism", rep_classify), o, "Representation JSON");
    add_file(verb(rep, "decompose", "Connected components", rep_decompose), o, "Representation JSON");
    add_file(verb(rep, "compare", "Equivalence of two representations", rep_compare), o, "Representation JSON (twice)");
    add_file(verb(rep, "seq", "Sequence of every state", rep_seq), o, "Representation JSON");
    add_file(verb(rep, "modhom", "Module homomorphism check for seq", rep_modhom), o, "Representation JSON");
  }

  auto* tiling = app.add_subcommand("tiling", "Robinson triangle tilings")->require_subcommand(1);
  {
    auto* i = verb(tiling, "inflate", "List the leaves of an inflated tile", tiling_inflate);
    add_tree(i, o);
    add_out(i, o);

    auto* s = verb(tiling, "svg", "Render to SVG", tiling_svg);
    add_tree(s, o);
    add_out(s, o);
    s->add_flag("--no-colors", o.no_colors, "Omit vertex colour markers");
    s->add_flag("--no-arrows", o.no_arrows, "Omit edge arrows");
    s->add_option("--outline", o.outline, "Outline the tiles of this level");
    s->add_option("--scale", o.scale, "Pixels per unit length");
    s->add_option("--fill-large", o.fill_large, "Fill colour of L tiles");
    s->add_option("--fill-small", o.fill_small, "Fill colour of S tiles");
    s->add_option("--stroke", o.stroke, "Stroke colour");
    s->add_option("--stroke-width", o.stroke_width, "Stroke width");

    auto* r = verb(tiling, "rep", "Geometric representation on the leaves", tiling_rep);
    add_tree(r, o);
    add_out(r, o);

    auto* m = verb(tiling, "match", "Check the matching rules", tiling_match);
    add_tree(m, o);
    m->add_option("--tolerance", o.tolerance, "Vertex identification tolerance");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (!action) {
    err << app.help();
    return kExitUsage;
  }
  try {
    return action();
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace penrose::cli
