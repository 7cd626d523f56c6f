// spextral — CLI over the star-path-forest extremal toolkit.
//
// Exit codes: 0 success, 2 argument error, 3 computation error
// (non-convergence), 4 verification failure.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "spextral/json_io.hpp"
#include "spextral/search.hpp"
#include "spextral/spectral.hpp"
#include "spextral/turan.hpp"
#include "spextral/verify.hpp"

namespace {

using nlohmann::json;
using namespace spextral;

void emit(const json& j) { std::cout << j.dump() << '\n'; }

void emit_error(const std::string& type, const std::string& message) {
  json j{{"schema", kSchemaTag}, {"error", {{"type", type}, {"message", message}}}};
  std::cerr << j.dump() << '\n';
}

int default_jobs() {
  if (const char* env = std::getenv("SPEXTRAL_JOBS")) {
    int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

Graph graph_arg(const std::string& g6) { return Graph::from_graph6(g6); }

ExtremalFamily family_arg(const std::string& name, int n, int h, int k, int l, int r) {
  if (name == "split") return ExtremalFamily::split(n, h);
  if (name == "split-plus") return ExtremalFamily::split_plus(n, h);
  if (name == "clique-join-cliques") return ExtremalFamily::clique_join_cliques(n, k, l, r);
  if (name == "linear-forest") return ExtremalFamily::linear_forest_extremal(n, k);
  if (name == "clique-union-empty") return ExtremalFamily::clique_union_empty(n, h);
  throw ArgumentError("unknown family '" + name + "'");
}

// Routes a pattern to the closed form that covers it.
json turan_json(const std::string& pattern_text, int n) {
  ForestPattern f = ForestPattern::parse(pattern_text);
  json j{{"schema", kSchemaTag}, {"pattern", f.to_string()}, {"n", n}};
  bool all_stars_equal =
      !f.stars.empty() &&
      std::all_of(f.stars.begin(), f.stars.end(), [&](int s) { return s == f.stars[0]; });
  if (f.paths.empty() && all_stars_equal && f.stars.size() >= 2) {
    TuranValue v = turan_star_forest(n, static_cast<int>(f.stars.size()), f.stars[0]);
    j.update(turan_value_to_json(v));
    return j;
  }
  if (f.paths.empty() && all_stars_equal && f.stars.size() == 1) {
    j["value"] = turan_star_bound(n, f.stars[0]);
    j["case"] = "upper-bound-only";
    j["guaranteed"] = true;
    j["threshold"] = f.stars[0] + 1;
    return j;
  }
  if (all_stars_equal && f.paths.size() == 1 && f.paths[0] == f.stars[0] + 1 && f.paths[0] >= 4) {
    auto [v, pred] = turan_star_path(n, static_cast<int>(f.stars.size()), f.paths[0]);
    j.update(turan_value_to_json(v));
    j["upper_bound"] =
        json_real(upbound_star_path(n, static_cast<int>(f.stars.size()), f.paths[0]));
    json fams = json::array();
    for (const auto& fam : pred.families) fams.push_back(family_to_json(fam));
    j["families"] = fams;
    return j;
  }
  if (f.stars.empty() && f.paths.size() == 1 && f.paths[0] >= 4) {
    j["value"] = turan_connected_path_bound(n, f.paths[0] - 1);
    j["case"] = "connected-only-upper-bound";
    j["guaranteed"] = true;
    j["threshold"] = f.paths[0];
    return j;
  }
  throw UnsupportedPatternError("no closed form for pattern " + f.to_string());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"star-path-forest extremal toolkit"};
  app.require_subcommand(1);
  // --h is a family parameter, so help lives on --help alone
  app.set_help_flag("--help", "print help");

  // construct
  auto* c_construct = app.add_subcommand("construct", "emit a named family as graph6");
  std::string family;
  int n = 0, h = 0, k = 0, l = 0, r = 0;
  c_construct->add_option("--family", family)->required();
  c_construct->add_option("--n", n)->required();
  c_construct->add_option("--h", h);
  c_construct->add_option("--k", k);
  c_construct->add_option("--l", l);
  c_construct->add_option("--r", r);

  // rho
  auto* c_rho = app.add_subcommand("rho", "Perron root of a graph6 graph");
  std::string g6;
  double tol = 1e-12;
  c_rho->add_option("--g6", g6)->required();
  c_rho->add_option("--tol", tol);

  // bound
  auto* c_bound = app.add_subcommand("bound", "degree-based spectral bound vs rho");
  c_bound->add_option("--g6", g6)->required();

  // turan
  auto* c_turan = app.add_subcommand("turan", "closed-form extremal edge count");
  std::string pattern;
  c_turan->add_option("--pattern", pattern)->required();
  c_turan->add_option("--n", n)->required();

  // predict
  auto* c_predict = app.add_subcommand("predict", "predicted spectral-extremal family");
  c_predict->add_option("--pattern", pattern)->required();
  c_predict->add_option("--n", n)->required();

  // free
  auto* c_free = app.add_subcommand("free", "decide pattern containment");
  c_free->add_option("--pattern", pattern)->required();
  c_free->add_option("--g6", g6)->required();

  // levelsets
  auto* c_levels = app.add_subcommand("levelsets", "Perron weight level sets");
  c_levels->add_option("--g6", g6)->required();
  c_levels->add_option("--k", k)->required();
  c_levels->add_option("--l", l)->required();
  c_levels->add_option("--tol", tol);

  // claims
  auto* c_claims = app.add_subcommand("claims", "structural predicates on the level sets");
  c_claims->add_option("--g6", g6)->required();
  c_claims->add_option("--k", k)->required();
  c_claims->add_option("--l", l)->required();
  c_claims->add_option("--tol", tol);

  // search-ex / search-sp
  int jobs = default_jobs();
  bool gated = false;
  std::string g6_file;
  auto* c_sex = app.add_subcommand("search-ex", "exhaustive max-edge search");
  c_sex->add_option("--pattern", pattern)->required();
  c_sex->add_option("--n", n)->required();
  c_sex->add_option("--jobs", jobs);
  c_sex->add_option("--g6-file", g6_file);
  c_sex->add_flag("--gated", gated, "allow the minutes-scale n=10 run");

  auto* c_ssp = app.add_subcommand("search-sp", "exhaustive max-spectral-radius search");
  c_ssp->add_option("--pattern", pattern)->required();
  c_ssp->add_option("--n", n)->required();
  c_ssp->add_option("--jobs", jobs);
  c_ssp->add_option("--g6-file", g6_file);
  c_ssp->add_option("--tol", tol);
  c_ssp->add_flag("--gated", gated, "allow the minutes-scale n=10 run");

  // verify
  auto* c_verify = app.add_subcommand("verify", "run the acceptance criteria");
  std::string suite = "all";
  c_verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "formulas", "oracles", "spectral"}));
  c_verify->add_flag("--gated", gated, "include the minutes-scale n=10 checks");

  for (CLI::App* sub : app.get_subcommands({})) sub->set_help_flag("--help", "print help");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    emit_error("argument", e.what());
    return 2;
  }

  try {
    if (*c_construct) {
      std::cout << build(family_arg(family, n, h, k, l, r)).to_graph6() << '\n';
    } else if (*c_rho) {
      SpectralResult res = power_iteration(graph_arg(g6), tol);
      emit({{"schema", kSchemaTag},
            {"rho", json_real(res.rho)},
            {"residual", json_real(res.residual)},
            {"iterations", res.iterations}});
    } else if (*c_bound) {
      Graph g = graph_arg(g6);
      double hong = hong_bound(g);
      double rho = power_iteration(g).rho;
      emit({{"schema", kSchemaTag},
            {"hong", json_real(hong)},
            {"rho", json_real(rho)},
            {"ok", rho <= hong + 1e-9}});
    } else if (*c_turan) {
      emit(turan_json(pattern, n));
    } else if (*c_predict) {
      ForestPattern f = ForestPattern::parse(pattern);
      json j = prediction_to_json(predicted_spectral_extremal(f, n));
      j["schema"] = kSchemaTag;
      j["pattern"] = f.to_string();
      j["n"] = n;
      emit(j);
    } else if (*c_free) {
      ForestPattern f = ForestPattern::parse(pattern);
      Graph g = graph_arg(g6);
      Embedding emb;
      bool contained = contains_forest(g, f, &emb);
      json j{{"schema", kSchemaTag}, {"pattern", f.to_string()}, {"free", !contained}};
      if (contained) {
        json comps = json::array();
        for (const auto& ce : emb)
          comps.push_back({{"type", ce.is_star ? "star" : "path"}, {"vertices", ce.vertices}});
        j["embedding"] = comps;
      }
      emit(j);
    } else if (*c_levels) {
      emit(level_sets_to_json(perron_level_sets(graph_arg(g6), k, l, tol)));
    } else if (*c_claims) {
      emit(structure_report_to_json(structure_claims(graph_arg(g6), k, l, tol)));
    } else if (*c_sex || *c_ssp) {
      ForestPattern f = ForestPattern::parse(pattern);
      SearchOptions opts;
      opts.jobs = jobs;
      opts.tol = tol;
      opts.allow_gated = gated;
      std::vector<Graph> universe;
      if (!g6_file.empty()) {
        std::ifstream in(g6_file);
        if (!in) throw ArgumentError("cannot open graph6 file " + g6_file);
        universe = read_graph6_lines(in);
        opts.universe = &universe;
      }
      SearchReport rep = *c_sex ? brute_ex(n, f, opts) : brute_ex_sp(n, f, opts);
      emit(report_to_json(rep));
      std::cerr << "elapsed " << rep.elapsed_seconds << "s\n";
    } else if (*c_verify) {
      auto results = run_acceptance(suite, gated, std::cout);
      if (!all_passed(results)) {
        emit_error("verification", "one or more acceptance criteria failed");
        return 4;
      }
    }
  } catch (const UnsupportedPatternError& e) {
    emit_error("unsupported-pattern", e.what());
    return 2;
  } catch (const ParseError& e) {
    emit_error("parse", e.what());
    return 2;
  } catch (const ArgumentError& e) {
    emit_error("argument", e.what());
    return 2;
  } catch (const ConvergenceError& e) {
    emit_error("convergence", e.what());
    return 3;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 3;
  }
  return 0;
}
