#include "wsub/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "line_reader.hpp"
#include "wsub/error.hpp"
#include "wsub/euler_subtree.hpp"
#include "wsub/generators.hpp"
#include "wsub/planar.hpp"
#include "wsub/subset_sum.hpp"
#include "wsub/tree.hpp"

namespace wsub {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::invalid_argument, "cannot open '" + path + "'");
  ss << file.rdbuf();
  return ss.str();
}

template <typename Range>
std::string join(const Range& items) {
  std::string s;
  for (const auto& x : items) {
    if (!s.empty()) s += ',';
    s += std::to_string(x);
  }
  return s;
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(ErrorKind::syntax, "bad vertex id '" + item + "' in list");
    ids.push_back(v);
  }
  if (ids.empty()) throw Error(ErrorKind::syntax, "empty vertex list");
  return ids;
}

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

Json flags_json(const ConditionReport& c) {
  return {{"k", c.params.k},           {"g", c.params.g},         {"n1", c.params.n1},
          {"n2", c.params.n2},         {"h", c.params.h},         {"range", c.range_ok},
          {"slack", c.slack_ok},       {"lower", c.lower_ok},     {"upper", c.upper_ok},
          {"cap", c.cap_ok},           {"overall", c.overall()}};
}

Json flags_json(const DensityReport& d) {
  return {{"n", d.n},          {"m", d.m},           {"k", d.k},           {"g", d.g},
          {"gamma", d.gamma_ok}, {"slack", d.slack_ok}, {"range", d.range_ok}, {"lower", d.lower_ok},
          {"upper", d.upper_ok}, {"overall", d.overall()}};
}

std::string flags_line(const char* tag, bool overall, const std::vector<std::string>& failed) {
  std::string s = tag;
  if (overall) return s + " ok";
  s += " failed=";
  for (std::size_t i = 0; i < failed.size(); ++i) s += (i ? "," : "") + failed[i];
  return s;
}

// What a subcommand produced; printed as text lines or one JSON object.
struct Report {
  explicit Report(std::string name, std::string input_digest = {})
      : subcommand(std::move(name)), digest(std::move(input_digest)) {}

  std::string subcommand;
  std::string digest;
  std::string outcome = "not-found";
  Json payload = Json::object();
  std::size_t steps = 0;
  double wall_ms = 0;
  std::vector<std::string> lines;
};

int exit_code(const std::string& outcome) {
  if (outcome == "found") return kExitFound;
  if (outcome == "error") return kExitError;
  return kExitNotFound;
}

int emit(const Report& r, bool json, std::ostream& out) {
  if (json) {
    Json j{{"subcommand", r.subcommand}, {"input_digest", r.digest}, {"outcome", r.outcome},
           {"payload", r.payload},       {"step_count", r.steps},    {"wall_time_ms", r.wall_ms}};
    out << j.dump() << '\n';
  } else {
    for (const auto& line : r.lines) out << line << '\n';
  }
  return exit_code(r.outcome);
}

struct SubtreeArgs {
  std::string file;
  Weight k = 0;
  Weight g = 1;
  std::size_t start = 0;
  bool check_only = false;
  bool oracle = false;
};

Report find_subtree_cmd(const SubtreeArgs& a, std::istream& in) {
  const std::string text = read_input(a.file, in);
  Report r{"find-subtree", fnv1a_hex(text)};
  const auto t0 = Clock::now();
  const WeightedTree tree = parse_tree(text);
  const ConditionReport cond = check_conditions(tree, a.k, a.g);
  r.payload["conditions"] = flags_json(cond);
  const std::string cond_line = flags_line("CONDITIONS", cond.overall(), cond.failed());

  if (a.check_only) {
    r.outcome = cond.overall() ? "found" : "not-found";
    r.lines.push_back(cond_line);
    r.wall_ms = elapsed_ms(t0);
    return r;
  }

  const auto search = find_subtree(tree, a.k, a.g, {.start = a.start});
  r.steps = search.steps;
  if (search.found()) {
    const auto& s = *search.subtree;
    WSUB_CHECK(verify_subtree(tree, s, a.k, a.g), "subtree failed validation");
    r.outcome = "found";
    r.payload["subtree"] = {{"weight", s.weight}, {"vertices", s.vertices},
                            {"window_start", s.start_stop}, {"window_end", s.end_stop}};
    r.lines.push_back("SUBTREE weight=" + std::to_string(s.weight) + " vertices=" + join(s.vertices));
  } else {
    r.lines.push_back("NOTFOUND");
  }
  r.lines.push_back(cond_line);

  if (a.oracle) {
    const auto weights = oracle_subtree_weights(tree);
    const bool achievable = window_achievable(weights, a.k - a.g + 1, a.k);
    WSUB_CHECK(achievable || !search.found(), "search found a weight the oracle says is unachievable");
    r.payload["oracle_achievable"] = achievable;
    r.lines.push_back(std::string("ORACLE achievable=") + (achievable ? "yes" : "no"));
  }
  r.wall_ms = elapsed_ms(t0);
  return r;
}

struct CycleArgs {
  std::string file;
  std::int64_t k = 0;
  std::int64_t g = 1;
  bool half = false;
  bool medium = false;
};

void put_cycle(Report& r, const PlaneGraph& graph, const CycleResult& c) {
  WSUB_CHECK(validate_cycle(graph, c), "cycle failed validation");
  r.outcome = "found";
  r.payload["cycle"] = {{"length", c.length()}, {"vertices", c.vertices}};
  r.lines.push_back("CYCLE length=" + std::to_string(c.length()) + " vertices=" + join(c.vertices));
}

Report find_cycle_cmd(const CycleArgs& a, std::istream& in) {
  const std::string text = read_input(a.file, in);
  Report r{"find-cycle", fnv1a_hex(text)};
  const auto t0 = Clock::now();
  const GraphFile file = parse_graph(text);
  if (!file.hamilton) throw Error(ErrorKind::not_hamiltonian, "graph file has no 'hamilton:' line");
  const HamiltonCycle ham(file.graph, *file.hamilton);

  if (a.half) {
    const auto res = find_half_cycle_3conn(file.graph, ham);
    r.steps = res.steps;
    r.payload["branch"] = std::string(to_string(res.branch));
    put_cycle(r, file.graph, res.cycle);
    r.lines.push_back("BRANCH " + std::string(to_string(res.branch)));
  } else {
    const auto res = a.medium ? find_cycle_medium(file.graph, ham) : find_cycle_near(file.graph, ham, a.k, a.g);
    r.steps = res.steps;
    r.payload["hypothesis"] = flags_json(res.hypothesis);
    if (res.found()) {
      put_cycle(r, file.graph, *res.cycle);
    } else {
      r.lines.push_back("NOTFOUND");
    }
    r.lines.push_back(flags_line("HYPOTHESIS", res.hypothesis.overall(), res.hypothesis.failed()));
  }
  r.wall_ms = elapsed_ms(t0);
  return r;
}

struct SubsetArgs {
  std::string file;
  std::string values;
  Weight k = 0;
  bool partition = false;
  bool via_partition = false;
  bool fallback = false;
};

Report subset_sum_cmd(const SubsetArgs& a, std::istream& in) {
  const std::string text = a.values.empty() ? read_input(a.file.empty() ? "-" : a.file, in) : a.values;
  Report r{"subset-sum", fnv1a_hex(text)};
  const auto t0 = Clock::now();
  const Multiset set = parse_multiset(text);
  const Weight target = a.partition ? set.total() / 2 : a.k;

  SubsetAnswer ans;
  std::string solver;
  if (a.partition) {
    ans = partition_dense(set);
    solver = "partition-dense";
  } else if (a.via_partition) {
    ans = subset_sum_via_partition(set, a.k);
    solver = "via-partition";
  } else {
    ans = subset_sum_dense(set, a.k);
    solver = "dense";
  }
  if (ans.decision == Decision::not_applicable && a.fallback) {
    ans = oracle_subset_sum(set, target);
    solver = "oracle";
  }
  r.steps = ans.steps;
  r.payload["solver"] = solver;
  r.payload["target"] = target;
  r.payload["decision"] = std::string(to_string(ans.decision));
  r.lines.push_back("DECISION " + std::string(to_string(ans.decision)) + " solver=" + solver);
  switch (ans.decision) {
    case Decision::yes: {
      const auto& w = *ans.witness;
      WSUB_CHECK(verify_witness(set, w, target), "witness failed validation");
      std::vector<Weight> picked;
      for (int i : w.indices) picked.push_back(set[i]);
      r.outcome = "found";
      r.payload["witness"] = {{"indices", w.indices}, {"values", picked}, {"sum", w.sum}};
      r.lines.push_back("WITNESS sum=" + std::to_string(w.sum) + " indices=" + join(w.indices) +
                        " values=" + join(picked));
      break;
    }
    case Decision::no: r.outcome = "not-found"; break;
    case Decision::not_applicable: r.outcome = "not-applicable"; break;
  }
  r.wall_ms = elapsed_ms(t0);
  return r;
}

Report oracle_cmd(const std::string& path, std::optional<Weight> k, Weight g, std::istream& in) {
  const std::string text = read_input(path, in);
  Report r{"oracle", fnv1a_hex(text)};
  const auto t0 = Clock::now();
  const auto weights = oracle_subtree_weights(parse_tree(text));
  r.payload["weights"] = weights;
  r.lines.push_back("WEIGHTS " + join(weights));
  r.outcome = "found";
  if (k) {
    const bool achievable = window_achievable(weights, *k - g + 1, *k);
    r.payload["achievable"] = achievable;
    r.outcome = achievable ? "found" : "not-found";
    r.lines.push_back(std::string("ACHIEVABLE ") + (achievable ? "yes" : "no"));
  }
  r.wall_ms = elapsed_ms(t0);
  return r;
}

struct GenArgs {
  std::string family;
  std::vector<std::int64_t> params;
  std::uint64_t seed = 1;
  int keep = 100;
};

std::int64_t param(const GenArgs& a, std::size_t i, const char* name) {
  if (i >= a.params.size()) {
    throw Error(ErrorKind::invalid_argument, a.family + " needs parameter <" + name + ">");
  }
  return a.params[i];
}

int to_int(std::int64_t v, const char* name) {
  if (v < -(1LL << 30) || v > (1LL << 30)) throw Error(ErrorKind::invalid_argument, std::string(name) + " is too large");
  return static_cast<int>(v);
}

std::string gen_cmd(const GenArgs& a) {
  if (auto family = parse_tight_family(a.family)) {
    const int p = to_int(param(a, 0, "p"), "p");
    const bool uses_q = *family == TightFamily::path_lower || *family == TightFamily::star_cap;
    const int q = uses_q ? to_int(param(a, 1, "q"), "q") : 1;
    const auto inst = generate_tight_instance(*family, p, q);
    std::string head = "# " + std::string(to_string(*family)) + " p=" + std::to_string(p);
    if (uses_q) head += " q=" + std::to_string(q);
    head += ": k=" + std::to_string(inst.k) + " g=" + std::to_string(inst.g) + "\n";
    return head + serialize_tree(inst.tree);
  }
  if (a.family == "random-tree") {
    const int n = to_int(param(a, 0, "n"), "n");
    const Weight w = param(a, 1, "max-weight");
    return serialize_tree(random_tree(n, w, a.seed));
  }
  auto graph_text = [](const PlaneInstance& inst) { return serialize_graph(inst.graph, inst.hamilton); };
  if (a.family == "malkevitch") return graph_text(malkevitch(to_int(param(a, 0, "p"), "p")));
  if (a.family == "square-cycle") return graph_text(square_of_cycle(to_int(param(a, 0, "n"), "n")));
  if (a.family == "octahedron") return graph_text(octahedron());
  if (a.family == "random-hamiltonian") {
    return graph_text(random_hamiltonian(to_int(param(a, 0, "n"), "n"), a.seed, a.keep));
  }
  throw Error(ErrorKind::invalid_argument, "unknown family '" + a.family + "'");
}

std::string dot_cmd(const std::string& path, const std::string& highlight, std::istream& in) {
  const std::string text = read_input(path, in);
  const std::vector<int> marked = highlight.empty() ? std::vector<int>{} : parse_id_list(highlight);
  std::ostringstream dot;
  const auto lines = detail::significant_lines(text);
  const bool is_tree = !lines.empty() && lines.front().text.find("tree") != std::string_view::npos;

  if (is_tree) {
    const WeightedTree tree = parse_tree(text);
    std::vector<char> on(tree.size(), 0);
    for (int v : marked) {
      if (v < 0 || v >= tree.size() || on[v]) {
        throw Error(ErrorKind::invalid_argument, "highlight id " + std::to_string(v) + " is out of range or repeated");
      }
      on[v] = 1;
    }
    dot << "graph tree {\n  node [shape=circle];\n";
    for (int v = 0; v < tree.size(); ++v) {
      dot << "  " << v << " [label=\"" << v << "\\nc=" << tree.weight(v) << "\""
          << (on[v] ? ", style=filled, fillcolor=tomato" : "") << "];\n";
    }
    for (int v = 0; v < tree.size(); ++v) {
      for (int u : tree.neighbors(v)) {
        if (v < u) dot << "  " << v << " -- " << u << (on[v] && on[u] ? " [color=red, penwidth=2]" : "") << ";\n";
      }
    }
    dot << "}\n";
    return dot.str();
  }

  const GraphFile file = parse_graph(text);
  const auto& g = file.graph;
  std::vector<std::vector<char>> cycle_edge(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) cycle_edge[v].assign(g.degree(v), 0);
  if (!marked.empty()) {
    if (!validate_cycle(g, CycleResult{marked})) {
      throw Error(ErrorKind::invalid_argument, "highlight is not a cycle of this graph");
    }
    for (std::size_t i = 0; i < marked.size(); ++i) {
      const int u = marked[i], v = marked[(i + 1) % marked.size()];
      cycle_edge[u][g.rotation_index(u, v)] = 1;
      cycle_edge[v][g.rotation_index(v, u)] = 1;
    }
  }
  dot << "graph plane {\n  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v) dot << "  " << v << ";\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int i = 0; i < g.degree(v); ++i) {
      const int u = g.neighbors(v)[i];
      if (v > u) continue;
      bool on_ham = false;
      if (file.hamilton) {
        const auto& h = *file.hamilton;
        for (std::size_t p = 0; p < h.size() && !on_ham; ++p) {
          const int a = h[p], b = h[(p + 1) % h.size()];
          on_ham = (a == v && b == u) || (a == u && b == v);
        }
      }
      dot << "  " << v << " -- " << u;
      if (cycle_edge[v][i]) {
        dot << " [color=red, penwidth=2]";
      } else if (on_ham) {
        dot << " [style=bold]";
      }
      dot << ";\n";
    }
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subtrees and cycles of prescribed weight or length"};
  app.name("wsub");
  app.require_subcommand(1);

  bool json = false;

  SubtreeArgs st;
  auto* fs = app.add_subcommand("find-subtree", "Find a subtree with weight in [k-g+1, k]");
  fs->add_option("file", st.file, "Tree file ('-' for stdin)")->required();
  fs->add_option("-k", st.k, "Target weight")->required();
  fs->add_option("-g", st.g, "Slack (window width)")->capture_default_str();
  fs->add_option("--start", st.start, "Start stop on the Euler-tour cycle")->capture_default_str();
  fs->add_flag("--check-only", st.check_only, "Only evaluate the existence conditions");
  fs->add_flag("--oracle", st.oracle, "Cross-check against the exact subtree-weight oracle");
  fs->add_flag("--json", json, "Print one JSON object");

  CycleArgs cy;
  auto* fc = app.add_subcommand("find-cycle", "Find a cycle of length in [k-g+1, k] in a plane hamiltonian graph");
  fc->add_option("file", cy.file, "Graph file with a hamilton line ('-' for stdin)")->required();
  auto* ck = fc->add_option("-k", cy.k, "Target length");
  fc->add_option("-g", cy.g, "Slack")->capture_default_str();
  auto* half = fc->add_flag("--half3conn", cy.half, "Length n/2-2 or n/2-1 in a 3-connected graph with min degree 4");
  auto* medium = fc->add_flag("--medium", cy.medium, "Length between n/3 and 2n/3 (needs m >= 2n)");
  half->excludes(ck)->excludes(medium);
  medium->excludes(ck);
  fc->add_flag("--json", json, "Print one JSON object");

  SubsetArgs ss;
  auto* fss = app.add_subcommand("subset-sum", "Dense SubsetSum / Partition solvers");
  fss->add_option("file", ss.file, "File with the values ('-' for stdin)");
  fss->add_option("--values", ss.values, "Comma-separated values, instead of a file");
  auto* sk = fss->add_option("-k", ss.k, "Target sum");
  auto* part = fss->add_flag("--partition", ss.partition, "Decide Partition (target = total / 2)");
  auto* via = fss->add_flag("--via-partition", ss.via_partition, "SubsetSum through the Partition reduction");
  fss->add_flag("--fallback-oracle", ss.fallback, "Run the DP oracle when the dense criterion does not apply");
  fss->add_flag("--json", json, "Print one JSON object");
  part->excludes(sk)->excludes(via);

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Print a generated instance");
  gen->add_option("family", ga.family,
                  "tight-star | tight-path-lower | tight-path-upper | tight-star-cap | random-tree | malkevitch | "
                  "square-cycle | octahedron | random-hamiltonian")
      ->required();
  gen->add_option("params", ga.params, "Family parameters");
  gen->add_option("--seed", ga.seed, "Seed for random families")->capture_default_str();
  gen->add_option("--keep", ga.keep, "random-hamiltonian: percent of chords kept")
      ->check(CLI::Range(0, 100))
      ->capture_default_str();

  std::string dot_file, dot_highlight;
  auto* dot = app.add_subcommand("dot", "Render a tree or graph file as Graphviz DOT");
  dot->add_option("file", dot_file, "Tree or graph file ('-' for stdin)")->required();
  dot->add_option("--highlight", dot_highlight, "Comma-separated subtree vertices or cycle");

  std::string oracle_file;
  std::optional<Weight> oracle_k;
  Weight oracle_g = 1;
  auto* orc = app.add_subcommand("oracle", "List every achievable subtree weight");
  orc->add_option("file", oracle_file, "Tree file ('-' for stdin)")->required();
  orc->add_option("-k", oracle_k, "Also report whether [k-g+1, k] is achievable");
  orc->add_option("-g", oracle_g, "Slack")->capture_default_str();
  orc->add_flag("--json", json, "Print one JSON object");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitFound : kExitError;
  }

  std::string which = app.get_subcommands().front()->get_name();
  try {
    if (*fs) return emit(find_subtree_cmd(st, in), json, out);
    if (*fc) {
      if (!cy.half && !cy.medium && ck->count() == 0) {
        throw Error(ErrorKind::invalid_argument, "find-cycle needs -k, --half3conn or --medium");
      }
      return emit(find_cycle_cmd(cy, in), json, out);
    }
    if (*fss) {
      if (!ss.partition && sk->count() == 0) throw Error(ErrorKind::invalid_argument, "subset-sum needs -k or --partition");
      if (!ss.file.empty() && !ss.values.empty()) {
        throw Error(ErrorKind::invalid_argument, "give either a file or --values, not both");
      }
      return emit(subset_sum_cmd(ss, in), json, out);
    }
    if (*orc) return emit(oracle_cmd(oracle_file, oracle_k, oracle_g, in), json, out);
    if (*gen) {
      out << gen_cmd(ga);
      return kExitFound;
    }
    if (*dot) {
      out << dot_cmd(dot_file, dot_highlight, in);
      return kExitFound;
    }
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    if (json) {
      Report r{which};
      r.outcome = "error";
      r.payload = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
      return emit(r, true, out);
    }
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace wsub
