#include "symcensus/analysis.hpp"

#include <stdexcept>

#include <json.hpp>

namespace symcensus {

std::string to_string(TriState t) {
  switch (t) {
    case TriState::Yes: return "yes";
    case TriState::No: return "no";
    default: return "inconclusive";
  }
}

TriState tristate_from_string(const std::string& s) {
  if (s == "yes") return TriState::Yes;
  if (s == "no") return TriState::No;
  if (s == "inconclusive") return TriState::Inconclusive;
  throw std::invalid_argument("not a yes/no/inconclusive value: " + s);
}

namespace {

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("analysis self-check failed: ") + what);
}

}  // namespace

AnalysisReport analyze(const Graph& g, const std::string& graph_id, const CayleyGraph* cay,
                       const AnalysisOptions& options) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("analyze: empty graph");

  AnalysisReport rep;
  rep.graph_id = graph_id;
  rep.n = n;
  rep.m = g.edge_count();
  const auto val = g.valency();
  rep.valency = val ? *val : -1;
  rep.connected = g.is_connected();
  rep.bipartite = is_bipartite(g);

  SearchOptions sopt = options.search;
  sopt.canonical = false;
  const SearchResult aut = canonical_search(g, {}, sopt);
  rep.aut_order = to_decimal(aut.aut_order);
  const PermGroup A = PermGroup::from_generators(aut.generators, n);

  const TransitivityReport trans = transitivity(g, A);
  rep.vertex_transitive = trans.vertex_transitive;
  rep.edge_transitive = trans.edge_transitive;
  rep.arc_transitive = trans.arc_transitive;

  if (rep.vertex_transitive) {
    check(aut.aut_order % n == 0, "orbit-stabilizer divisibility");
    rep.stabilizer_order = to_decimal(aut.aut_order / n);
  }

  if (rep.connected && rep.valency >= 3) {
    const SLevelReport lev = s_level(g, aut);
    check(lev.vertex_transitive == rep.vertex_transitive, "vertex-transitivity agreement");
    check(lev.arc_transitive == rep.arc_transitive, "arc-transitivity agreement");
    rep.s = lev.s;
    rep.validator = !lev.arc_transitive || rep.valency != 4
                        ? "inapplicable"
                        : lev.stabilizer_consistent ? "consistent"
                                                    : "violated: " + lev.stabilizer_note;
    rep.one_regular = lev.arc_transitive && aut.aut_order == BigInt(n) * rep.valency;
    if (rep.one_regular) check(rep.s == 1, "one-regular graphs are 1- but not 2-transitive");
    if (rep.valency == 4 && rep.arc_transitive)
      check(rep.one_regular == (aut.aut_order == BigInt(4) * n), "one-regular order identity");
  } else {
    rep.validator = "inapplicable";
  }

  if (cay != nullptr) {
    if (cay->graph != g)
      throw std::invalid_argument("analyze: supplied Cayley data is for a different graph");
    rep.cayley = TriState::Yes;
    rep.normal_cayley = is_normal_cayley(*cay) ? TriState::Yes : TriState::No;
    rep.family = "cayley";
  } else if (rep.connected && rep.vertex_transitive) {
    const RegularSubgroupResult reg = find_regular_subgroup(g, A, options.regular_search);
    switch (reg.status) {
      case RegularSearchStatus::Found: {
        rep.cayley = TriState::Yes;
        // Normality of the found copy certifies normal-Cayley; its failure
        // does not rule out another regular subgroup being normal.
        const PermGroup R = PermGroup::from_generators(reg.generators, n);
        bool normal = true;
        for (const auto& gamma : aut.generators) {
          const Permutation gamma_inv = gamma.inverse();
          for (const auto& r : reg.generators)
            if (!R.contains(gamma_inv.then(r).then(gamma))) {
              normal = false;
              break;
            }
          if (!normal) break;
        }
        rep.normal_cayley = normal ? TriState::Yes : TriState::Inconclusive;
        break;
      }
      case RegularSearchStatus::NoneExists:
        rep.cayley = TriState::No;
        rep.normal_cayley = TriState::No;
        break;
      case RegularSearchStatus::Inconclusive:
        rep.cayley = TriState::Inconclusive;
        rep.normal_cayley = TriState::Inconclusive;
        break;
    }
  } else if (!rep.vertex_transitive) {
    rep.cayley = TriState::No;  // Cayley graphs are vertex-transitive
    rep.normal_cayley = TriState::No;
  }

  return rep;
}

std::string to_json_line(const AnalysisReport& rep) {
  nlohmann::ordered_json j;
  j["graph"] = rep.graph_id;
  j["family"] = rep.family;
  j["params"] = rep.params;
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["valency"] = rep.valency;
  j["connected"] = rep.connected;
  j["bipartite"] = rep.bipartite;
  j["aut_order"] = rep.aut_order;
  j["s"] = rep.s;
  j["vertex_transitive"] = rep.vertex_transitive;
  j["edge_transitive"] = rep.edge_transitive;
  j["arc_transitive"] = rep.arc_transitive;
  j["one_regular"] = rep.one_regular;
  j["cayley"] = to_string(rep.cayley);
  j["normal_cayley"] = to_string(rep.normal_cayley);
  j["stabilizer_order"] = rep.stabilizer_order;
  j["validator"] = rep.validator;
  return j.dump();
}

AnalysisReport report_from_json_line(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  AnalysisReport rep;
  rep.graph_id = j.at("graph").get<std::string>();
  rep.family = j.at("family").get<std::string>();
  rep.params = j.at("params").get<std::string>();
  rep.n = j.at("n").get<int>();
  rep.m = j.at("m").get<int>();
  rep.valency = j.at("valency").get<int>();
  rep.connected = j.at("connected").get<bool>();
  rep.bipartite = j.at("bipartite").get<bool>();
  rep.aut_order = j.at("aut_order").get<std::string>();
  rep.s = j.at("s").get<int>();
  rep.vertex_transitive = j.at("vertex_transitive").get<bool>();
  rep.edge_transitive = j.at("edge_transitive").get<bool>();
  rep.arc_transitive = j.at("arc_transitive").get<bool>();
  rep.one_regular = j.at("one_regular").get<bool>();
  rep.cayley = tristate_from_string(j.at("cayley").get<std::string>());
  rep.normal_cayley = tristate_from_string(j.at("normal_cayley").get<std::string>());
  rep.stabilizer_order = j.at("stabilizer_order").get<std::string>();
  rep.validator = j.at("validator").get<std::string>();
  return rep;
}

std::uint64_t content_hash(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace symcensus
