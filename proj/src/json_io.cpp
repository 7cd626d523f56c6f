#include "spextral/json_io.hpp"

#include <cstdio>
#include <cstdlib>

namespace spextral {

double json_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return std::strtod(buf, nullptr);
}

std::string family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Split: return "split";
    case FamilyKind::SplitPlus: return "split-plus";
    case FamilyKind::CliqueJoinCliques: return "clique-join-cliques";
    case FamilyKind::LinearForestExtremal: return "linear-forest";
    case FamilyKind::CliqueUnionEmpty: return "clique-union-empty";
  }
  return "?";
}

nlohmann::json family_to_json(const ExtremalFamily& f) {
  nlohmann::json j{{"kind", family_kind_name(f.kind)}, {"n", f.n}};
  switch (f.kind) {
    case FamilyKind::Split:
    case FamilyKind::SplitPlus:
      j["h"] = f.h;
      break;
    case FamilyKind::CliqueJoinCliques:
      j["k"] = f.k;
      j["l"] = f.l;
      j["r"] = f.r;
      break;
    case FamilyKind::LinearForestExtremal:
      j["k"] = f.k;
      break;
    case FamilyKind::CliqueUnionEmpty:
      j["c"] = f.h;
      break;
  }
  j["graph6"] = build(f).to_graph6();
  return j;
}

nlohmann::json turan_value_to_json(const TuranValue& v) {
  return {{"value", v.value},
          {"case", v.case_tag},
          {"guaranteed", v.guaranteed},
          {"threshold", v.threshold}};
}

nlohmann::json prediction_to_json(const Prediction& p) {
  nlohmann::json fams = nlohmann::json::array();
  for (const auto& f : p.families) fams.push_back(family_to_json(f));
  nlohmann::json j{{"source", p.source},
                   {"threshold", p.threshold},
                   {"guaranteed", p.guaranteed},
                   {"families", fams}};
  if (!p.note.empty()) j["note"] = p.note;
  if (p.printed_statement_inconsistent) j["printed_statement_inconsistent"] = true;
  return j;
}

nlohmann::json report_to_json(const SearchReport& r) {
  nlohmann::json j{{"schema", kSchemaTag},
                   {"objective", r.objective},
                   {"pattern", r.pattern},
                   {"n", r.n},
                   {"certificates", r.certificates},
                   {"enumerated", r.enumerated}};
  if (r.objective == "rho") {
    j["best"] = json_real(r.best_rho);
    j["tol"] = json_real(r.tol);
  } else {
    j["best"] = r.best_edges;
  }
  return j;
}

nlohmann::json level_sets_to_json(const LevelSets& ls) {
  return {{"schema", kSchemaTag},
          {"k", ls.k},
          {"l", ls.l},
          {"h", ls.h},
          {"t", ls.t},
          {"alpha", json_real(ls.alpha)},
          {"rho", json_real(ls.spectral.rho)},
          {"R", ls.r.members()},
          {"Rp", ls.r_prime.members()},
          {"Rpp", ls.r_double_prime.members()},
          {"boundary_flags", ls.boundary.members()}};
}

nlohmann::json structure_report_to_json(const StructureReport& rep) {
  return {{"schema", kSchemaTag},
          {"A", rep.star_free_complement},
          {"B", rep.hub_dominates_complement},
          {"C", rep.complement_edgeless},
          {"D", rep.complement_at_most_one_edge},
          {"Rpp_complete", rep.core_complete},
          {"dominating", rep.core_dominates},
          {"Rpp", rep.levels.r_double_prime.members()},
          {"complement_edges", rep.complement_edges},
          {"z", rep.z}};
}

}  // namespace spextral
