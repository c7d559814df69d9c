#include "quiver/json.hpp"

#include <fstream>

#include "quiver/error.hpp"

namespace quiver {

Json to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["verdict"] = std::string(to_string(r.verdict));
  j["first_violation"] = r.first_violation ? Json(*r.first_violation) : Json(nullptr);
  j["margin"] = r.margin;
  j["tolerance"] = r.tolerance;
  j["quiver"] = r.quiver;
  j["sharp"] = r.sharp;
  j["parameters"] = Json::object();
  for (const auto& [k, v] : r.parameters) j["parameters"][k] = v;
  j["stats"] = Json::object();
  for (const auto& [k, v] : r.stats) j["stats"][k] = v;
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

Json to_json(const CheckReport& r, const SequenceTable& sequences) {
  Json j = to_json(r);
  j["sequences"] = to_json(sequences);
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["check"] = "certificate";
  j["verdict"] = std::string(to_string(c.verdict()));
  j["applicable"] = c.applicable;
  if (!c.reason.empty()) j["reason"] = c.reason;
  j["n"] = c.n;
  j["max_degree"] = c.max_degree;
  j["tolerance"] = c.tolerance;
  j["tree_edges"] = c.tree_edges;
  j["chain"] = c.chain;
  j["tree_brouwer_margin"] = c.tree_brouwer_margin;
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json step;
    step["added_edge"] = s.added_edge;
    step["interlacing_margin"] = s.interlacing_margin;
    step["brouwer_margin"] = s.brouwer_margin;
    Json cases = Json::array();
    for (const auto& rec : s.cases)
      cases.push_back(Json{{"k", rec.k}, {"case", std::string(to_string(rec.which))}, {"margin", rec.margin}});
    step["cases"] = std::move(cases);
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["final_brouwer_margin"] = c.final_brouwer_margin;
  j["passed"] = c.passed;
  j["quiver"] = c.quiver;
  return j;
}

Json to_json(const SequenceTable& t) {
  Json j;
  j["n"] = t.n;
  j["m"] = t.m;
  j["r"] = t.r;
  j["trace"] = t.trace;
  j["eigenvalues"] = t.kirchhoff.values;
  j["signless_eigenvalues"] = t.signless.values;
  j["degrees"] = t.degrees.sorted;
  Json rows = Json::array();
  for (const auto& row : t.rows)
    rows.push_back(Json{{"k", row.k},
                        {"S", row.S},
                        {"D", row.D},
                        {"B", row.B},
                        {"H", row.H},
                        {"U2D", row.U},
                        {"lower", row.lower},
                        {"A", row.A}});
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const AggregateReport& a) {
  Json j;
  j["family"] = a.family;
  j["seed"] = a.seed;
  j["instances"] = a.instances;
  j["total_failures"] = a.total_failures();
  Json checks = Json::array();
  for (const auto& c : a.checks) {
    Json cj;
    cj["check"] = c.check;
    cj["evaluated"] = c.evaluated;
    cj["passed"] = c.passed;
    cj["failed"] = c.failed;
    cj["inapplicable"] = c.inapplicable;
    cj["sharp_hits"] = c.sharp_hits;
    cj["min_margin"] = c.min_margin ? Json(*c.min_margin) : Json(nullptr);
    cj["worst_instance"] = c.worst_instance ? Json(*c.worst_instance) : Json(nullptr);
    if (c.check == "connection") {
      cj["radius_g_exceeds_L"] = c.radius_exceedances;
      cj["max_radius_ratio_g_over_L"] = c.max_radius_ratio;
    }
    Json failures = Json::array();
    for (const auto& f : c.failures) failures.push_back(to_json(f));
    cj["failures"] = std::move(failures);
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  if (a.max_s3_excess) {
    j["max_s3_minus_m_plus_6"] = *a.max_s3_excess;
    j["max_s3_instance"] = *a.max_s3_instance;
  }
  return j;
}

namespace {

template <typename T>
T get_or(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("batch spec field \"") + key + "\": " + e.what(), 0);
  }
}

}  // namespace

SearchSpec search_spec_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("batch spec must be a JSON object", 0);
  if (!j.contains("family")) throw ParseError("batch spec needs \"family\"", 0);
  SearchSpec spec;
  try {
    spec.family.family = parse_family(get_or<std::string>(j, "family", ""));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), 0);
  }
  const Json params = j.contains("params") ? j.at("params") : Json::object();
  if (!params.is_object()) throw ParseError("\"params\" must be an object", 0);
  spec.family.n = get_or<std::size_t>(params, "n", 0);
  spec.family.m = get_or<std::size_t>(params, "m", 0);
  spec.family.loops = get_or<std::size_t>(params, "loops", 0);
  spec.family.multi = get_or<std::size_t>(params, "multi", 0);
  spec.seed = get_or<std::uint64_t>(j, "seed", 0);
  spec.family.seed = spec.seed;
  spec.trials = get_or<std::size_t>(j, "trials", 1);
  spec.checks = get_or<std::vector<std::string>>(j, "checks", {});
  if (spec.checks.empty()) throw ParseError("batch spec needs a non-empty \"checks\" list", 0);
  spec.explore_s3 = get_or<bool>(j, "explore_s3", false);
  spec.threads = get_or<std::size_t>(j, "threads", 1);
  if (j.contains("tolerance")) spec.options.tolerance = get_or<double>(j, "tolerance", 0.0);
  spec.options.classical_bound = get_or<bool>(j, "classical_bound", false);
  spec.options.threshold_s = get_or<double>(j, "threshold_s", 2.0);
  return spec;
}

SearchSpec load_search_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  return search_spec_from_json(j);
}

}  // namespace quiver
