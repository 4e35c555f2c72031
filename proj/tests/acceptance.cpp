// Acceptance gate: the checkable end-to-end claims the library is built
// around, one line of output per criterion. Each line reports PASS or FAIL
// with the measured value and the elapsed time; the process exits nonzero
// iff any criterion fails. Expected values here were recorded from
// independent computations (brute-force and backtracking oracles, hand
// counts on small cases) before the search engine existed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

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

#include "oracles.hpp"

using namespace symcensus;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run_criterion(int number, const std::string& label, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s criterion %d (%s) [%.1fs]: %s\n", out.pass ? "PASS" : "FAIL", number,
              label.c_str(), secs, out.detail.c_str());
  std::fflush(stdout);
  if (!out.pass) ++failures;
}

// ---------------------------------------------------------------------------
// 1-3: automorphism orders of the octahedron and two twin-expanded cycles.

Outcome octahedron_order() {
  const BigInt got = aut_order(octahedron());
  return {got == BigInt(48), "|Aut(octahedron)| = " + to_decimal(got) + ", expected 48"};
}

Outcome twin9_order() {
  const BigInt got = aut_order(twin_expanded_cycle(9));
  return {got == BigInt(9216), "|Aut| = " + to_decimal(got) + ", expected 9216 = 2^9*18"};
}

Outcome twin33_order() {
  BigInt expect = 1;
  mpz_mul_2exp(expect.get_mpz_t(), expect.get_mpz_t(), 33);
  expect *= 66;  // 2^33 * 2n with n = 33
  const BigInt got = aut_order(twin_expanded_cycle(33));
  return {got == expect && to_decimal(expect) == "566935683072",
          "|Aut| = " + to_decimal(got) + ", expected 566935683072 = 2^33*66"};
}

// ---------------------------------------------------------------------------
// 4: the doubled cycles of order 6p^2 are 1-transitive with 2-group
// stabilizers at every supported prime.

Outcome doubled_cycle_levels() {
  std::string detail;
  for (int p : {2, 3, 5, 7}) {
    const int half = 3 * p * p;
    const SLevelReport lev = s_level(twin_expanded_cycle(half));
    const bool ok = lev.s == 1 && lev.stabilizer_consistent &&
                    is_power_of_two(lev.stabilizer_order);
    if (!detail.empty()) detail += "; ";
    detail += "p=" + std::to_string(p) + ": s=" + std::to_string(lev.s) + " stab=2^" +
              std::to_string(mpz_sizeinbase(lev.stabilizer_order.get_mpz_t(), 2) - 1);
    if (!ok) {
      detail += " UNEXPECTED (want s=1, 2-group stabilizer, consistent table)";
      return {false, detail};
    }
  }
  return {true, detail};
}

// ---------------------------------------------------------------------------
// 5: the rose-window graphs R_n(2,1) are the doubled cycles in disguise,
// certified by equality of canonical forms.

Outcome rose_window_certificates() {
  for (int n : {12, 27}) {
    if (canonical_form(rose_window(n, 2, 1)) != canonical_form(twin_expanded_cycle(n)))
      return {false, "canonical certificates differ at n = " + std::to_string(n)};
  }
  return {true, "canonical_form(R_n(2,1)) = canonical_form(C_n[2K_1]) for n = 12, 27"};
}

// ---------------------------------------------------------------------------
// 6: the five Cayley constructions at their smallest valid odd primes:
// order 6p^2, tetravalent, connected, vertex-transitive, expected |Aut|,
// and |Aut| = 4n (one-regularity).

Outcome family_instances() {
  struct Row {
    char tag;
    int p;
    std::optional<int> eps;
    long expect_aut;
  };
  const std::vector<Row> rows = {
      {'a', 5, std::nullopt, 600}, {'b', 5, 2, 600},  {'c', 3, std::nullopt, 216},
      {'d', 5, 7, 600},            {'e', 5, std::nullopt, 1200},
  };
  std::string detail;
  bool all = true;
  for (const auto& row : rows) {
    const FamilyGraph fg = family(row.tag, row.p, row.eps);
    const Graph& g = fg.cay.graph;
    const int n = 6 * row.p * row.p;
    const SLevelReport lev = s_level(g);
    const bool shape_ok = g.vertex_count() == n && g.valency() == 4 && g.is_connected() &&
                          lev.vertex_transitive;
    const bool aut_ok = lev.aut_order == BigInt(row.expect_aut);
    const bool one_regular = lev.arc_transitive && lev.aut_order == BigInt(4L * n);
    if (!detail.empty()) detail += "; ";
    detail += std::string(1, row.tag) + "(p=" + std::to_string(row.p) +
              "): |Aut|=" + to_decimal(lev.aut_order);
    if (!(shape_ok && aut_ok && one_regular)) {
      all = false;
      if (row.tag == 'e' && row.p == 5 && shape_ok && aut_ok) {
        // Honest failure, kept visible on purpose: the engine and the
        // independent backtracking oracle agree that this instance has
        // |Aut| = 1200 = 8*150, so one-regularity (|Aut| = 600) does not
        // hold for it. The other four instances are one-regular.
        const long long oracle = oracles::backtracking_aut_count(g, 10000);
        detail += " = 8*150, engine and independent backtracking oracle " +
                  std::string(oracle == 1200 ? "agree" : "DISAGREE") +
                  "; one-regularity (|Aut| = 600) does not hold for this instance";
      } else {
        detail += " UNEXPECTED";
      }
    }
  }
  return {all, detail};
}

// ---------------------------------------------------------------------------
// 7: the randomized invariant batteries at the pinned seed.

Outcome property_batteries() {
  const PropSuiteResult res = run_property_suite(1729);
  int passed = 0;
  std::string failing;
  for (const auto& c : res.checks) {
    if (c.passed) {
      ++passed;
    } else {
      failing += failing.empty() ? " (failing: " : ", ";
      failing += c.name;
    }
  }
  if (!failing.empty()) failing += ")";
  return {res.all_passed(), std::to_string(passed) + "/" + std::to_string(res.checks.size()) +
                                " batteries passed at seed 1729" + failing};
}

// ---------------------------------------------------------------------------
// 8: exhaustive elementary-abelian covers of the octahedron. Every
// connected Z_p x Z_p cover (p = 2, 3) over the 7 cotree edges is built, up
// to the GL(2,p) relabeling of the voltage group, and searched for an
// arc-transitive example whose covering group is normal in the full
// automorphism group. The classification of these orders says there is
// none; the criterion fails if one appears.

struct CoverScan {
  long long tuples = 0;
  long long orbit_reps = 0;
  long long connected = 0;
  long long vt_candidates = 0;
  long long arc_transitive = 0;
  long long ct_normal_violations = 0;
};

// All 2x2 matrices over F_p with nonzero determinant, as value tables acting
// on voltage indices a*p + b.
std::vector<std::vector<int>> gl2_tables(int p) {
  std::vector<std::vector<int>> tables;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          if ((a * d - b * c) % p == 0) continue;
          std::vector<int> table(p * p);
          for (int x = 0; x < p; ++x)
            for (int y = 0; y < p; ++y)
              table[x * p + y] = ((a * x + b * y) % p) * p + (c * x + d * y) % p;
          tables.push_back(std::move(table));
        }
  return tables;
}

// BFS layer profile from every vertex; vertex-transitive graphs have
// identical rows. Cheap necessary condition used to filter before the full
// engine runs.
bool uniform_layer_profile(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> reference;
  std::vector<int> dist(n);
  std::vector<int> queue(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    int head = 0, tail = 0;
    queue[tail++] = root;
    dist[root] = 0;
    std::vector<int> profile;
    while (head < tail) {
      const int u = queue[head++];
      if ((int)profile.size() <= dist[u]) profile.push_back(0);
      ++profile[dist[u]];
      for (int v : g.neighbors(u))
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue[tail++] = v;
        }
    }
    if (root == 0)
      reference = profile;
    else if (profile != reference)
      return false;
  }
  return true;
}

// Triangles through each vertex, again constant on vertex-transitive graphs.
bool uniform_triangle_count(const Graph& g) {
  const int n = g.vertex_count();
  int reference = -1;
  for (int u = 0; u < n; ++u) {
    int triangles = 0;
    const auto& nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (g.adjacent(nb[i], nb[j])) ++triangles;
    if (u == 0)
      reference = triangles;
    else if (triangles != reference)
      return false;
  }
  return true;
}

CoverScan scan_octahedron_covers(int p) {
  const Graph base = octahedron();
  const auto cotree = cotree_edges(base);  // 7 edges
  const StructuredGroup K = make_group({{p, p}, false, {}});
  const auto tables = gl2_tables(p);
  const int q = p * p;

  CoverScan scan;
  std::vector<int> tuple(cotree.size(), 0);
  bool done = false;
  while (!done) {
    ++scan.tuples;

    // Keep one representative per GL(2,p) orbit: the lexicographic minimum.
    bool is_min = true;
    for (const auto& table : tables) {
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        const int mapped = table[tuple[i]];
        if (mapped != tuple[i]) {
          is_min = mapped > tuple[i];
          break;
        }
      }
      if (!is_min) break;
    }

    if (is_min) {
      ++scan.orbit_reps;
      // Connectivity of the cover = the voltages span the whole group.
      int v1 = 0;
      for (int x : tuple)
        if (x) {
          v1 = x;
          break;
        }
      bool spans = false;
      if (v1) {
        for (int x : tuple) {
          if (!x) continue;
          // x independent of v1 iff x is not a scalar multiple of v1.
          bool multiple = false;
          for (int s = 0; s < p; ++s)
            if (((v1 / p * s) % p) * p + (v1 % p * s) % p == x) multiple = true;
          if (!multiple) {
            spans = true;
            break;
          }
        }
      }

      if (spans) {
        ++scan.connected;
        std::map<std::pair<int, int>, GroupElement> xi;
        for (std::size_t i = 0; i < cotree.size(); ++i)
          xi[cotree[i]] = K.from_coords({tuple[i] / p, tuple[i] % p});
        const DerivedGraph d = derived_graph(make_voltage_assignment(base, K, xi));

        if (uniform_triangle_count(d.cover) && uniform_layer_profile(d.cover)) {
          ++scan.vt_candidates;
          SearchOptions opt;
          opt.canonical = false;
          const SearchResult aut = canonical_search(d.cover, {}, opt);
          const PermGroup A =
              PermGroup::from_generators(aut.generators, d.cover.vertex_count());
          if (transitivity(d.cover, A).arc_transitive) {
            ++scan.arc_transitive;
            bool normal = true;
            for (const auto& gamma : A.generators()) {
              const Permutation gamma_inv = gamma.inverse();
              for (const auto& t : d.ct.generators())
                if (!d.ct.contains(gamma_inv.then(t).then(gamma))) {
                  normal = false;
                  break;
                }
              if (!normal) break;
            }
            if (normal) ++scan.ct_normal_violations;
          }
        }
      }
    }

    // Advance the base-p^2 counter.
    done = true;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (++tuple[i] < q) {
        done = false;
        break;
      }
      tuple[i] = 0;
    }
  }
  return scan;
}

Outcome octahedron_cover_scan() {
  std::string detail;
  bool pass = true;
  for (int p : {2, 3}) {
    const CoverScan scan = scan_octahedron_covers(p);
    if (!detail.empty()) detail += "; ";
    detail += "p=" + std::to_string(p) + ": " + std::to_string(scan.tuples) + " tuples, " +
              std::to_string(scan.orbit_reps) + " orbit reps, " +
              std::to_string(scan.connected) + " connected, " +
              std::to_string(scan.vt_candidates) + " vt-candidates, " +
              std::to_string(scan.arc_transitive) + " arc-transitive, " +
              std::to_string(scan.ct_normal_violations) + " with normal covering group";
    if (scan.ct_normal_violations != 0) pass = false;
  }
  return {pass, detail};
}

}  // namespace

int main() {
  run_criterion(1, "octahedron automorphisms", octahedron_order);
  run_criterion(2, "doubled 9-cycle automorphisms", twin9_order);
  run_criterion(3, "doubled 33-cycle automorphisms", twin33_order);
  run_criterion(4, "doubled-cycle transitivity levels", doubled_cycle_levels);
  run_criterion(5, "rose-window certificates", rose_window_certificates);
  run_criterion(6, "Cayley family instances", family_instances);
  run_criterion(7, "invariant batteries", property_batteries);
  run_criterion(8, "octahedron cover scan", octahedron_cover_scan);

  if (failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
  } else {
    std::printf("acceptance: %d of 8 criteria failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
