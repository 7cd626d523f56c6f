#include "spextral/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>

#include "spextral/json_io.hpp"
#include "spextral/search.hpp"
#include "spextral/spectral.hpp"
#include "spextral/turan.hpp"

namespace spextral {

namespace {

struct Check {
  bool pass = true;
  int failures = 0;
  std::string detail;

  void fail(const std::string& msg) {
    pass = false;
    if (++failures <= 5) {
      if (!detail.empty()) detail += "; ";
      detail += msg;
    }
  }
  void expect(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
  }
  void note(const std::string& msg) {
    if (!detail.empty()) detail += "; ";
    detail += msg;
  }
};

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) g.add_edge(u, v);
  return g;
}

// Random bipartite graph: random side assignment, then m cross edges.
Graph random_bipartite(std::mt19937_64& rng, int n, int m) {
  Graph g(n);
  std::vector<int> side(n);
  for (int v = 0; v < n; ++v) side[v] = static_cast<int>(rng() & 1);
  std::vector<std::pair<int, int>> cross;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (side[u] != side[v]) cross.emplace_back(u, v);
  std::shuffle(cross.begin(), cross.end(), rng);
  for (int i = 0; i < m && i < static_cast<int>(cross.size()); ++i)
    g.add_edge(cross[i].first, cross[i].second);
  return g;
}

VertexSet random_subset(std::mt19937_64& rng, int n) {
  VertexSet s;
  for (int v = 0; v < n; ++v)
    if (rng() & 1) s.add(v);
  return s;
}

ForestPattern random_pattern(std::mt19937_64& rng, int max_order) {
  while (true) {
    std::vector<int> stars, paths;
    int budget = max_order;
    int comps = 1 + static_cast<int>(rng() % 3);
    for (int c = 0; c < comps && budget >= 1; ++c) {
      if (rng() & 1) {
        int s = 1 + static_cast<int>(rng() % 4);
        if (s + 1 <= budget) {
          stars.push_back(s);
          budget -= s + 1;
        }
      } else {
        int p = 1 + static_cast<int>(rng() % 5);
        if (p <= budget) {
          paths.push_back(p);
          budget -= p;
        }
      }
    }
    if (stars.empty() && paths.empty()) continue;
    return ForestPattern::make(stars, paths);
  }
}

// ----------------------------------------------------------- criteria 1..11

Check criterion1() {
  Check c;
  for (int p = 1; p <= 6; ++p) {
    for (int n = p; n <= 200; ++n) {
      double closed = rho_split_closed(n, p);
      double iter = power_iteration(build(ExtremalFamily::split(n, p))).rho;
      if (std::abs(closed - iter) > 1e-9)
        c.fail("split n=" + std::to_string(n) + " p=" + std::to_string(p) + " gap " +
               std::to_string(std::abs(closed - iter)));
    }
  }
  return c;
}

Check criterion2() {
  Check c;
  auto check = [&](const ExtremalFamily& f) {
    double q = quotient_rho(equitable_from_family(f));
    double full = power_iteration(build(f)).rho;
    if (std::abs(q - full) > 1e-9)
      c.fail(f.describe() + " quotient " + std::to_string(q) + " vs " + std::to_string(full));
  };
  for (int k = 1; k <= 3; ++k) {
    for (int l = 4; l <= 6; ++l) {
      int h = k + l / 2 - 1;
      for (int n = 1; n <= 120; ++n) {
        if (n >= h) check(ExtremalFamily::split(n, h));
        if (n >= h + 2) check(ExtremalFamily::split_plus(n, h));
        if (n >= k) check(ExtremalFamily::clique_join_cliques(n, k, l, (n - k) % (l - 1)));
      }
    }
    for (int n = std::max(1, k - 1); n <= 120; ++n)
      check(ExtremalFamily::linear_forest_extremal(n, k));
  }
  return c;
}

Check criterion3(bool gated) {
  Check c;
  ForestPattern two_s3 = ForestPattern::parse("2S3");
  ForestPattern s3 = ForestPattern::parse("1S3");
  const long long expected[] = {21, 22, 24};
  for (int n = 8; n <= (gated ? 10 : 9); ++n) {
    SearchOptions opts;
    opts.allow_gated = gated;
    SearchReport rep = brute_ex(n, two_s3, opts);
    long long want = expected[n - 8];
    if (rep.best_edges != want)
      c.fail("ex(" + std::to_string(n) + ",2S3) = " + std::to_string(rep.best_edges) +
             ", want " + std::to_string(want));
    TuranValue tv = turan_star_forest(n, 2, 3);
    if (tv.value != want) c.fail("formula mismatch at n=" + std::to_string(n));
  }
  if (!gated) c.note("n=10 run skipped (gated)");
  for (int n = 5; n <= 9; ++n) {
    SearchReport rep = brute_ex(n, s3);
    if (rep.best_edges != n)
      c.fail("ex(" + std::to_string(n) + ",S3) = " + std::to_string(rep.best_edges) + ", want " +
             std::to_string(n));
  }
  return c;
}

Check criterion4() {
  Check c;
  for (int k = 1; k <= 4; ++k) {
    for (int l : {4, 6, 8}) {
      for (int n = k; n <= 200; ++n) {
        int r = (n - k) % (l - 1);
        auto [tv, pred] = turan_star_path(n, k, l);
        long long built = build(ExtremalFamily::clique_join_cliques(n, k, l, r)).edge_count();
        if (built != tv.value)
          c.fail("CJC(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(l) +
                 ") has " + std::to_string(built) + " edges, formula " + std::to_string(tv.value));
        if (r == l / 2 || r == (l - 2) / 2) {
          int h = k + l / 2 - 1;
          if (n >= h) {
            long long split_e = build(ExtremalFamily::split(n, h)).edge_count();
            if (split_e != tv.value)
              c.fail("split(" + std::to_string(n) + "," + std::to_string(h) + ") edges " +
                     std::to_string(split_e) + " != " + std::to_string(tv.value));
          }
        }
        double ub = upbound_star_path(n, k, l);
        if (static_cast<double>(tv.value) > ub)
          c.fail("value exceeds coarse bound at n=" + std::to_string(n));
      }
    }
  }
  return c;
}

Check criterion5() {
  Check c;
  struct Case {
    const char* text;
    int min_n;
  };
  const Case cases[] = {{"1S3+1P4", 2}, {"1S4+1P5", 4}, {"2S3+2P4", 5}, {"1S4+2P5", 6},
                        {"2P3", 1},     {"3P3", 2},     {"4P3", 3}};
  for (const Case& cs : cases) {
    ForestPattern f = ForestPattern::parse(cs.text);
    int checked = 0;
    for (int n = cs.min_n; n <= 14; ++n) {
      Prediction pred = predicted_spectral_extremal(f, n);
      for (const auto& fam : pred.families) {
        Graph g = build(fam);
        if (!is_free(g, f))
          c.fail(std::string(cs.text) + ": " + fam.describe() + " is not pattern-free");
        if (checked < 3 && naive_injection_oracle(g, f))
          c.fail(std::string(cs.text) + ": naive oracle disagrees on " + fam.describe());
      }
      ++checked;
    }
  }
  // the exact-value predictions take the same freeness obligation
  for (int l : {4, 5}) {
    for (int n = 1; n <= 14; ++n) {
      ForestPattern f = ForestPattern::make({l - 1}, {l});
      auto [tv, pred] = turan_star_path(n, 1, l);
      for (const auto& fam : pred.families) {
        if (fam.kind == FamilyKind::SplitPlus && fam.n - fam.h < 2) continue;
        if (!is_free(build(fam), f))
          c.fail("turan family " + fam.describe() + " contains " + f.to_string());
      }
    }
  }
  return c;
}

Check criterion6() {
  Check c;
  std::vector<ForestPattern> grid;
  for (const char* t : {"1P4", "1S3", "2S3", "1S3+1P4", "2P2", "3P2", "2P3"})
    grid.push_back(ForestPattern::parse(t));
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : graph_census(n)) {
      for (const auto& f : grid) {
        if (contains_forest(g, f) != naive_injection_oracle(g, f))
          c.fail("disagreement on " + g.to_graph6() + " pattern " + f.to_string());
      }
    }
  }
  std::mt19937_64 rng(20240811);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(rng, n, unif(rng));
    ForestPattern f = random_pattern(rng, 8);
    Embedding emb;
    bool fast = contains_forest(g, f, &emb);
    bool naive = naive_injection_oracle(g, f);
    if (fast != naive)
      c.fail("random disagreement on " + g.to_graph6() + " pattern " + f.to_string());
    if (fast && !verify_embedding(g, f, emb))
      c.fail("bad embedding certificate on " + g.to_graph6() + " pattern " + f.to_string());
  }
  return c;
}

Check criterion7() {
  Check c;
  for (int n = 1; n <= 8; ++n) {
    enumerate_graphs(n, [&](const Graph& g) {
      double rho = power_iteration(g).rho;
      if (hong_bound(g) < rho - 1e-9) c.fail("degree bound violated on " + g.to_graph6());
    });
  }
  std::mt19937_64 rng(771177);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 10000; ++trial) {
    int n = static_cast<int>(rng() % 21);
    Graph g = random_graph(rng, n, unif(rng));
    VertexSet a = random_subset(rng, n), b = random_subset(rng, n);
    long long eab = edges_between(g, a, b);
    long long rhs = edges_between(g, a, b - a) + 2 * g.induced(a & b).edge_count() +
                    edges_between(g, a - b, a & b);
    if (eab != rhs) c.fail("subset identity failed on " + g.to_graph6());
    if (eab > g.induced(a | b).edge_count() + g.induced(a & b).edge_count() ||
        g.induced(a | b).edge_count() + g.induced(a & b).edge_count() > 2 * g.edge_count())
      c.fail("union/intersection bound failed on " + g.to_graph6());
    if (eab > static_cast<long long>(a.count()) * b.count())
      c.fail("product bound failed on " + g.to_graph6());
    // intersection lower bound over a random family of subsets
    int k = 2 + static_cast<int>(rng() % 4);
    VertexSet inter = VertexSet::range(n), uni;
    long long sum = 0;
    for (int i = 0; i < k; ++i) {
      VertexSet s = random_subset(rng, n);
      inter = inter & s;
      uni = uni | s;
      sum += s.count();
    }
    if (inter.count() < sum - static_cast<long long>(k - 1) * uni.count())
      c.fail("family intersection bound failed at n=" + std::to_string(n));
  }
  return c;
}

Check criterion8() {
  Check c;
  std::mt19937_64 rng(96321);
  for (int l : {4, 5, 6}) {
    int found = 0;
    long long attempts = 0;
    while (found < 1000 && ++attempts < 2000000) {
      int n = 1 + static_cast<int>(rng() % 20);
      Graph g = random_bipartite(rng, n, static_cast<int>(rng() % (n + 1)));
      if (has_path(g, l)) continue;
      ++found;
      if (g.edge_count() > static_cast<long long>(l / 2 - 1) * n)
        c.fail("path-free bipartite bound violated (l=" + std::to_string(l) + ") on " +
               g.to_graph6());
    }
    c.expect(found == 1000, "insufficient path-free bipartite samples for l=" +
                                std::to_string(l));
  }
  ForestPattern f = ForestPattern::parse("1S3+1P4");
  int found = 0;
  long long attempts = 0;
  while (found < 1000 && ++attempts < 2000000) {
    int n = 28 + static_cast<int>(rng() % 13);  // the small-parameter threshold is n >= 28
    Graph g = random_bipartite(rng, n, static_cast<int>(rng() % (n + 3)));
    if (contains_forest(g, f)) continue;
    ++found;
    if (g.edge_count() > 2LL * n)
      c.fail("star-path-free bipartite bound violated on " + g.to_graph6());
  }
  c.expect(found == 1000, "insufficient star-path-free bipartite samples");
  return c;
}

Check criterion9() {
  Check c;
  struct Tuple {
    int k, l, h;
  };
  for (const Tuple& t : {Tuple{1, 4, 2}, Tuple{2, 4, 3}, Tuple{1, 6, 3}}) {
    for (int n = 150; n <= 300; n += 50) {
      Graph g = build(ExtremalFamily::split(n, t.h));
      LevelSets ls = perron_level_sets(g, t.k, t.l);
      // Leaves enter R'' exactly when their Perron ratio h/rho reaches
      // 1/(2(h+1)), i.e. when rho(S_{n,h}) <= 2h(h+1); below that derived
      // threshold the whole vertex set qualifies.
      bool settled = rho_split_closed(n, t.h) > 2.0 * t.h * (t.h + 1);
      int want = settled ? t.h : n;
      if (ls.r_double_prime.count() != want)
        c.fail("R'' size " + std::to_string(ls.r_double_prime.count()) + " want " +
               std::to_string(want) + " at n=" + std::to_string(n) + " h=" + std::to_string(t.h));
      if (!settled)
        c.note("n=" + std::to_string(n) + " h=" + std::to_string(t.h) +
               " sits below the derived threshold (needs rho > 2h(h+1)); |R''| = n there");
      StructureReport rep = structure_claims(g, t.k, t.l);
      if (!rep.star_free_complement || !rep.hub_dominates_complement ||
          !rep.complement_edgeless)
        c.fail("structure claims A/B/C failed on split n=" + std::to_string(n));
    }
  }
  for (int n = 150; n <= 300; n += 50) {
    Graph g = build(ExtremalFamily::split_plus(n, 2));
    StructureReport rep = structure_claims(g, 1, 5);
    if (!rep.complement_at_most_one_edge || rep.complement_edges != 1)
      c.fail("structure claim D failed on split-plus n=" + std::to_string(n));
    if (rep.complement_edgeless) c.fail("claim C unexpectedly true on split-plus");
  }
  return c;
}

Check criterion10() {
  Check c;
  SearchOptions opts;
  SearchReport r7 = brute_ex_sp(7, ForestPattern::parse("2P2"), opts);
  std::string star7 = canonical_graph6(build(ExtremalFamily::split(7, 1)));
  if (r7.certificates != std::vector<std::string>{star7})
    c.fail("2P2-free spectral optimum at n=7 is not the star alone");
  if (std::abs(r7.best_rho - std::sqrt(6.0)) > 1e-9) c.fail("rho(K_{1,6}) mismatch");

  SearchReport r9 = brute_ex_sp(9, ForestPattern::parse("3P2"), opts);
  std::string split9 = canonical_graph6(build(ExtremalFamily::split(9, 2)));
  if (r9.certificates != std::vector<std::string>{split9})
    c.fail("3P2-free spectral optimum at n=9 is not the split graph alone");
  if (std::abs(r9.best_rho - (1.0 + std::sqrt(57.0)) / 2.0) > 1e-9)
    c.fail("rho(S_{9,2}) mismatch");
  c.note(
      "certificates match the printed matching families with k shifted down "
      "by one, i.e. the printed k acts as a matching-size bound");
  return c;
}

Check criterion11(bool gated) {
  Check c;
  auto compare = [&](const std::string& label, const std::function<SearchReport(int)>& run) {
    std::string a = report_to_json(run(1)).dump();
    std::string b = report_to_json(run(4)).dump();
    if (a != b) c.fail("jobs 1 vs 4 reports differ for " + label);
  };
  ForestPattern two_s3 = ForestPattern::parse("2S3");
  ForestPattern s3 = ForestPattern::parse("1S3");
  for (int n = 8; n <= (gated ? 10 : 9); ++n)
    compare("ex(" + std::to_string(n) + ",2S3)", [&](int jobs) {
      SearchOptions o;
      o.jobs = jobs;
      o.allow_gated = gated;
      return brute_ex(n, two_s3, o);
    });
  for (int n = 5; n <= 9; ++n)
    compare("ex(" + std::to_string(n) + ",S3)", [&](int jobs) {
      SearchOptions o;
      o.jobs = jobs;
      return brute_ex(n, s3, o);
    });
  compare("exsp(7,2P2)", [&](int jobs) {
    SearchOptions o;
    o.jobs = jobs;
    return brute_ex_sp(7, ForestPattern::parse("2P2"), o);
  });
  compare("exsp(9,3P2)", [&](int jobs) {
    SearchOptions o;
    o.jobs = jobs;
    return brute_ex_sp(9, ForestPattern::parse("3P2"), o);
  });
  return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& suite, bool gated,
                                            std::ostream& log) {
  struct Entry {
    int id;
    const char* name;
    const char* suite;
    std::function<Check()> run;
  };
  const std::vector<Entry> entries = {
      {1, "closed form vs power iteration", "spectral", [] { return criterion1(); }},
      {2, "quotient matrix exactness", "spectral", [] { return criterion2(); }},
      {3, "extremal formulas vs exhaustive search", "formulas",
       [gated] { return criterion3(gated); }},
      {4, "construction-formula identity", "formulas", [] { return criterion4(); }},
      {5, "predicted families are pattern-free", "oracles", [] { return criterion5(); }},
      {6, "containment oracle equivalence", "oracles", [] { return criterion6(); }},
      {7, "universal bounds and subset identities", "spectral", [] { return criterion7(); }},
      {8, "bipartite edge bounds", "formulas", [] { return criterion8(); }},
      {9, "Perron level-set diagnostics", "spectral", [] { return criterion9(); }},
      {10, "matching statement disambiguation", "oracles", [] { return criterion10(); }},
      {11, "deterministic reports across job counts", "oracles",
       [gated] { return criterion11(gated); }},
  };

  std::vector<CriterionResult> results;
  for (const Entry& e : entries) {
    if (suite != "all" && suite != e.suite) continue;
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    r.id = e.id;
    r.name = e.name;
    r.suite = e.suite;
    try {
      Check c = e.run();
      r.pass = c.pass;
      r.detail = c.detail;
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(r);
    char line[160];
    std::snprintf(line, sizeof(line), "[%s] %2d %-42s (%.2fs)", r.pass ? "PASS" : "FAIL", r.id,
                  r.name.c_str(), r.seconds);
    log << line;
    if (!r.detail.empty()) log << "  -- " << r.detail;
    log << '\n';
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace spextral
