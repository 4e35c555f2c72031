// Command-line front end: graph construction, symmetry analysis, isomorphism
// certificates, regular covers and quotients, the order-6p^2 census, and the
// randomized property suite.
//
// Exit codes: 0 success, 2 invalid input, 3 resource cap exceeded,
// 4 property failure (failed suite, violated census consistency check).

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "symcensus/analysis.hpp"
#include "symcensus/bigint.hpp"
#include "symcensus/canonical.hpp"
#include "symcensus/constructions.hpp"
#include "symcensus/coverings.hpp"
#include "symcensus/graph.hpp"
#include "symcensus/group.hpp"
#include "symcensus/perm_group.hpp"
#include "symcensus/propsuite.hpp"
#include "symcensus/symmetry.hpp"

using namespace symcensus;

namespace {

constexpr int kOk = 0;
constexpr int kInvalidInput = 2;
constexpr int kResourceCap = 3;
constexpr int kPropertyFailure = 4;

std::string hash_hex(const std::string& bytes) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << content_hash(bytes);
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  out << text;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(text, &used, 10);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": not an unsigned integer: '" + text + "'");
  }
  if (used != text.size())
    throw std::invalid_argument(what + ": trailing characters in '" + text + "'");
  return value;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  std::string family;
  std::string out;
  int n = 0;
  std::string tag;
  int p = 0;
  int epsilon = 0;
  bool has_epsilon = false;
  int a = 0;
  int r = 0;
};

int run_construct(const ConstructArgs& args) {
  Graph g;
  std::vector<std::string> labels;
  std::string note;
  if (args.family == "lex-c2k1") {
    if (args.n < 3) throw std::invalid_argument("construct lex-c2k1: need --n >= 3");
    g = twin_expanded_cycle(args.n);
    for (int i = 0; i < args.n; ++i)
      for (int j = 0; j < 2; ++j) labels.push_back(std::to_string(i) + "," + std::to_string(j));
  } else if (args.family == "cayley") {
    if (args.tag.size() != 1 || args.tag[0] < 'a' || args.tag[0] > 'e')
      throw std::invalid_argument("construct cayley: --tag must be one of a..e");
    if (args.p < 2) throw std::invalid_argument("construct cayley: need --p (a prime)");
    std::optional<int> eps;
    if (args.has_epsilon)
      eps = args.epsilon;
    else if (args.tag[0] == 'b' || args.tag[0] == 'd')
      eps = find_epsilon(args.tag[0], args.p);
    const FamilyGraph fam = family(args.tag[0], args.p, eps);
    g = fam.cay.graph;
    for (int v = 0; v < g.vertex_count(); ++v)
      labels.push_back(fam.cay.group.to_string(fam.cay.group.element_at(v)));
    if (!fam.cay.connected)
      note = " (warning: connection set generates a proper subgroup; graph is disconnected)";
  } else if (args.family == "rose-window") {
    if (args.n < 3) throw std::invalid_argument("construct rose-window: need --n >= 3");
    g = rose_window(args.n, args.a, args.r);
    for (int i = 0; i < args.n; ++i) labels.push_back("o" + std::to_string(i));
    for (int i = 0; i < args.n; ++i) labels.push_back("i" + std::to_string(i));
  } else {
    throw std::invalid_argument("construct: unknown --family '" + args.family +
                                "' (expected lex-c2k1, cayley, or rose-window)");
  }

  write_graph_file(g, args.out);
  std::ostringstream lab;
  for (int v = 0; v < g.vertex_count(); ++v) lab << v << ' ' << labels[v] << '\n';
  write_text_file(args.out + ".labels", lab.str());
  std::cout << "wrote " << args.out << ": " << g.vertex_count() << " vertices, " << g.edge_count()
            << " edges" << note << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// analyze

int run_analyze(const std::string& path, const std::string& graph_id, const AnalysisOptions& opt) {
  const Graph g = read_graph_file(path);
  const AnalysisReport rep = analyze(g, graph_id.empty() ? path : graph_id, nullptr, opt);
  std::cout << to_json_line(rep) << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// iso

int run_iso(const std::string& path_a, const std::string& path_b) {
  const Graph a = read_graph_file(path_a);
  const Graph b = read_graph_file(path_b);
  const auto witness = isomorphism(a, b);
  if (!witness) {
    std::cout << "no\n";
    return kOk;
  }
  std::cout << "yes\n";
  const auto img = witness->images();
  for (std::size_t i = 0; i < img.size(); ++i) std::cout << (i ? " " : "") << img[i];
  std::cout << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// cover

int run_cover(const std::string& base_path, const std::string& voltage_path,
              const std::string& out_path) {
  const Graph base = read_graph_file(base_path);
  const VoltageAssignment va = read_voltages_file(voltage_path, base);
  const DerivedGraph d = derived_graph(va);
  write_graph_file(d.cover, out_path);

  std::cout << "cover: " << d.cover.vertex_count() << " vertices, " << d.cover.edge_count()
            << " edges, connected: " << (d.cover.is_connected() ? "yes" : "no") << '\n';
  std::cout << "covering: " << (d.report.is_covering ? "yes" : "no") << ", fold "
            << d.report.fold_number << ", ct order " << to_decimal(d.ct.order()) << '\n';
  const ParityCheck pc = fold_parity_check(d.cover, base, d.report);
  switch (pc.outcome) {
    case ParityOutcome::Pass:
      std::cout << "parity: pass (bipartite cover of a non-bipartite base has even fold)\n";
      break;
    case ParityOutcome::VacuousPass:
      std::cout << "parity: vacuous ("
                << (pc.base_bipartite ? "base is bipartite" : "cover is not bipartite") << ")\n";
      break;
    case ParityOutcome::Fail:
      std::cout << "parity: FAIL (odd bipartite cover of a non-bipartite base)\n";
      return kPropertyFailure;
  }
  std::cout << "wrote " << out_path << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// quotient

std::vector<Permutation> read_generator_file(const std::string& path, int degree) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open generator file: " + path);
  std::vector<Permutation> gens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::vector<int> img;
    int x = 0;
    while (row >> x) img.push_back(x);
    if (!row.eof())
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": not an integer list");
    if ((int)img.size() != degree)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected " +
                                  std::to_string(degree) + " images, got " +
                                  std::to_string(img.size()));
    gens.emplace_back(img);
  }
  if (gens.empty()) throw std::invalid_argument(path + ": no generators");
  return gens;
}

int run_quotient(const std::string& graph_path, const std::string& gens_path,
                 const std::string& out_path) {
  const Graph g = read_graph_file(graph_path);
  const auto gens = read_generator_file(gens_path, g.vertex_count());
  const PermGroup N = PermGroup::from_generators(gens, g.vertex_count());
  const QuotientResult q = quotient_graph(g, N);
  const ProjectionReport pr = verify_covering(g, q.quotient, q.orbit_of);

  std::cout << "group: order " << to_decimal(N.order())
            << ", semiregular: " << (N.is_semiregular() ? "yes" : "no") << '\n';
  std::cout << "quotient: " << q.quotient.vertex_count() << " vertices, "
            << q.quotient.edge_count() << " edges\n";
  std::cout << "locally injective: " << (q.locally_injective ? "yes" : "no")
            << ", max edge multiplicity " << q.max_edge_multiplicity
            << ", loops suppressed: " << (q.has_loops ? "yes" : "no") << '\n';
  std::cout << "covering onto quotient: " << (pr.is_covering ? "yes" : "no");
  if (!pr.is_covering && !pr.failure.empty()) std::cout << " (" << pr.failure << ")";
  std::cout << '\n';
  if (!out_path.empty()) {
    write_graph_file(q.quotient, out_path);
    std::cout << "wrote " << out_path << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// census

struct CensusCache {
  std::string path;
  std::map<std::string, std::string> by_hash;  // hash -> report JSON line

  void load() {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) return;  // cache starts empty on first run
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto sep = line.find(' ');
      if (sep == std::string::npos) throw std::invalid_argument("census cache: malformed line");
      by_hash[line.substr(0, sep)] = line.substr(sep + 1);
    }
  }
  void append(const std::string& hash, const std::string& json) {
    by_hash[hash] = json;
    if (path.empty()) return;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::invalid_argument("cannot open census cache for writing: " + path);
    out << hash << ' ' << json << '\n';
  }
};

struct CensusEntry {
  std::string label;
  std::string family;
  std::string params;
  Graph graph;
  const CayleyGraph* cay = nullptr;  // exact Cayley data when the row is one
};

// Admissible transitivity levels by order, from the published classification
// of tetravalent arc-transitive graphs at these orders.
const std::map<int, std::vector<int>>& admissible_s() {
  static const std::map<int, std::vector<int>> table = {
      {24, {1}}, {54, {1, 2}}, {150, {1}}, {294, {1}}};
  return table;
}

int run_census(int pmax, const std::string& cache_path) {
  CensusCache cache{cache_path, {}};
  cache.load();

  std::cout << "# symcensus census, orders 6p^2 for primes p <= " << pmax << '\n'
            << "# Identifiers of the form C[n,i] from published census tables are not\n"
            << "# reconstructed; each row is a constructible graph of the stated order, and\n"
            << "# its s value is checked against the classification for these orders:\n"
            << "# one-regular, or isomorphic to C_{3p^2}[2K_1], or s admissible for the order.\n";
  std::cout << std::left << std::setw(26) << "# graph" << std::right << std::setw(6) << "order"
            << std::setw(4) << "s" << ' ' << std::setw(15) << "aut_order" << ' ' << std::setw(12)
            << "one_regular" << "  verdict" << '\n';

  int rc = kOk;
  std::vector<std::string> violations;
  for (int p : {2, 3, 5, 7}) {
    if (p > pmax) break;
    const int half = 3 * p * p;  // cycle length; the graphs have order 2*half = 6p^2

    std::vector<CensusEntry> entries;
    std::vector<FamilyGraph> fams;  // keeps cay data alive for the cay pointers
    fams.reserve(5);
    entries.push_back({"C_" + std::to_string(half) + "[2K_1]", "lex-c2k1",
                       "n=" + std::to_string(half), twin_expanded_cycle(half), nullptr});
    entries.push_back({"R_" + std::to_string(half) + "(2,1)", "rose-window",
                       "n=" + std::to_string(half) + " a=2 r=1", rose_window(half, 2, 1),
                       nullptr});
    for (char tag = 'a'; tag <= 'e'; ++tag) {
      if (!family_valid(tag, p)) continue;
      std::optional<int> eps;
      if (tag == 'b' || tag == 'd') eps = find_epsilon(tag, p);
      FamilyGraph fam = family(tag, p, eps);
      if (!fam.cay.connected) {
        std::cout << "# family " << tag << " at p=" << p
                  << " skipped: connection set generates a proper subgroup (disconnected)\n";
        continue;
      }
      fams.push_back(std::move(fam));
      const FamilyGraph& f = fams.back();
      std::string params = "p=" + std::to_string(p);
      if (f.epsilon) params += " eps=" + std::to_string(*f.epsilon);
      std::string label = "family-" + std::string(1, tag) + "(" + params + ")";
      for (auto& ch : label)
        if (ch == ' ') ch = ',';
      entries.push_back({label, "cayley-" + std::string(1, tag), params, f.cay.graph, &f.cay});
    }

    // Certificate of this order's doubled cycle, computed only if some row
    // needs the isomorphism fallback of the consistency check.
    std::optional<Graph> lex_certificate;
    auto lex_cert = [&]() -> const Graph& {
      if (!lex_certificate) lex_certificate = canonical_form(entries.front().graph);
      return *lex_certificate;
    };

    for (const auto& entry : entries) {
      AnalysisReport rep;
      const std::string bytes = write_graph(entry.graph);
      const std::string hash = hash_hex(bytes);
      const auto hit = cache.by_hash.find(hash);
      if (hit != cache.by_hash.end()) {
        rep = report_from_json_line(hit->second);
      } else {
        try {
          rep = analyze(entry.graph, entry.label, entry.cay);
        } catch (const CapExceeded& e) {
          std::cout << "# " << entry.label << " error (resource cap): " << e.what() << '\n';
          rc = std::max(rc, kResourceCap);
          continue;
        }
        rep.graph_id = entry.label;
        rep.family = entry.family;
        rep.params = entry.params;
        cache.append(hash, to_json_line(rep));
      }

      // Consistency: one-regular, or the doubled cycle itself, or s admissible.
      std::string verdict;
      if (rep.one_regular) {
        verdict = "one-regular";
      } else {
        const auto allowed = admissible_s().find(rep.n);
        const bool s_ok = allowed != admissible_s().end() &&
                          std::find(allowed->second.begin(), allowed->second.end(), rep.s) !=
                              allowed->second.end();
        if (s_ok)
          verdict = "s-admissible";
        else if (canonical_form(entry.graph) == lex_cert())
          verdict = "=C_" + std::to_string(half) + "[2K_1]";
        else {
          verdict = "VIOLATION";
          violations.push_back(entry.label + ": s=" + std::to_string(rep.s) +
                               ", |Aut|=" + rep.aut_order);
        }
      }
      std::cout << std::left << std::setw(26) << entry.label << std::right << std::setw(6)
                << rep.n << std::setw(4) << rep.s << ' ' << std::setw(15) << rep.aut_order
                << ' ' << std::setw(12) << (rep.one_regular ? "yes" : "no") << "  " << verdict << '\n';
    }
  }

  if (violations.empty()) {
    std::cout << "# consistency: all rows one-regular, the doubled cycle, or s-admissible\n";
  } else {
    for (const auto& v : violations) std::cout << "# consistency VIOLATION: " << v << '\n';
    rc = std::max(rc, kPropertyFailure);
  }
  return rc;
}

// ---------------------------------------------------------------------------
// propsuite

int run_propsuite(bool seed_from_cli, std::uint64_t cli_seed, const std::string& config_path) {
  std::uint64_t seed = 1729;
  if (const char* env = std::getenv("SYMCENSUS_SEED")) seed = parse_u64(env, "SYMCENSUS_SEED");
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot open config file: " + config_path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument(config_path + ":" + std::to_string(lineno) +
                                    ": expected key=value");
      const std::string key = line.substr(0, eq);
      const std::string value = line.substr(eq + 1);
      if (key == "seed")
        seed = parse_u64(value, "config seed");
      else
        throw std::invalid_argument(config_path + ":" + std::to_string(lineno) +
                                    ": unknown key '" + key + "'");
    }
  }
  if (seed_from_cli) seed = cli_seed;

  const PropSuiteResult result = run_property_suite(seed);
  std::cout << format(result);
  int passed = 0;
  for (const auto& c : result.checks) passed += c.passed ? 1 : 0;
  std::cout << "propsuite: " << passed << "/" << result.checks.size()
            << " batteries passed, seed " << seed << '\n';
  return result.all_passed() ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "symcensus: exact symmetry analysis of small graphs — constructions, automorphism "
      "groups, transitivity levels, regular covers, and an order-6p^2 census"};
  app.require_subcommand(1);

  ConstructArgs cargs;
  auto* construct = app.add_subcommand("construct", "build a graph family instance");
  construct->add_option("--family", cargs.family, "lex-c2k1 | cayley | rose-window")->required();
  construct->add_option("--out", cargs.out, "output graph file")->required();
  construct->add_option("--n", cargs.n, "cycle length (lex-c2k1, rose-window)");
  construct->add_option("--tag", cargs.tag, "family tag a..e (cayley)");
  construct->add_option("--p", cargs.p, "prime parameter (cayley)");
  auto* eps_opt = construct->add_option("--epsilon", cargs.epsilon, "epsilon override (tags b, d)");
  construct->add_option("--a", cargs.a, "spoke shift (rose-window)");
  construct->add_option("--r", cargs.r, "inner jump (rose-window)");

  std::string an_path, an_id;
  AnalysisOptions an_opt;
  auto* analyze_cmd = app.add_subcommand("analyze", "full symmetry report as one JSON line");
  analyze_cmd->add_option("input", an_path, "graph file")->required();
  analyze_cmd->add_option("--graph-id", an_id, "report identifier (default: input path)");
  analyze_cmd->add_option("--node-cap", an_opt.search.max_nodes, "search tree node budget");
  analyze_cmd->add_option("--stabilizer-cap", an_opt.regular_search.stabilizer_cap,
                          "regular-subgroup search: stabilizer enumeration cap");
  analyze_cmd->add_option("--regular-node-cap", an_opt.regular_search.node_cap,
                          "regular-subgroup search: node budget");

  std::string iso_a, iso_b;
  auto* iso_cmd = app.add_subcommand("iso", "isomorphism test with witness");
  iso_cmd->add_option("first", iso_a, "graph file")->required();
  iso_cmd->add_option("second", iso_b, "graph file")->required();

  std::string cov_base, cov_volt, cov_out;
  auto* cover_cmd = app.add_subcommand("cover", "derived regular cover from a voltage file");
  cover_cmd->add_option("base", cov_base, "base graph file")->required();
  cover_cmd->add_option("voltages", cov_volt, "voltage assignment file")->required();
  cover_cmd->add_option("--out", cov_out, "output graph file for the cover")->required();

  std::string q_graph, q_gens, q_out;
  auto* quot_cmd = app.add_subcommand("quotient", "quotient by a group of automorphisms");
  quot_cmd->add_option("input", q_graph, "graph file")->required();
  quot_cmd->add_option("--gens", q_gens, "file of generator permutations, one image list per line")
      ->required();
  quot_cmd->add_option("--out", q_out, "output graph file for the quotient");

  int pmax = 7;
  std::string cache_path;
  auto* census_cmd = app.add_subcommand("census", "analyze all constructible graphs of order 6p^2");
  census_cmd->add_option("--pmax", pmax, "largest prime (2..7)")->check(CLI::Range(2, 7));
  census_cmd->add_option("--cache", cache_path, "report cache file, keyed by graph content hash");

  std::uint64_t seed = 0;
  std::string config_path;
  auto* prop_cmd = app.add_subcommand("propsuite", "randomized invariant batteries");
  auto* seed_opt = prop_cmd->add_option("--seed", seed, "RNG seed (also: SYMCENSUS_SEED)");
  prop_cmd->add_option("--config", config_path, "key=value config file (key: seed)");

  try {
    app.parse(argc, argv);
    if (construct->parsed()) {
      cargs.has_epsilon = eps_opt->count() > 0;
      return run_construct(cargs);
    }
    if (analyze_cmd->parsed()) return run_analyze(an_path, an_id, an_opt);
    if (iso_cmd->parsed()) return run_iso(iso_a, iso_b);
    if (cover_cmd->parsed()) return run_cover(cov_base, cov_volt, cov_out);
    if (quot_cmd->parsed()) return run_quotient(q_graph, q_gens, q_out);
    if (census_cmd->parsed()) return run_census(pmax, cache_path);
    if (prop_cmd->parsed()) return run_propsuite(seed_opt->count() > 0, seed, config_path);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalidInput;
  } catch (const CapExceeded& e) {
    std::cerr << "resource cap exceeded: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency violation: " << e.what() << '\n';
    return kPropertyFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}
