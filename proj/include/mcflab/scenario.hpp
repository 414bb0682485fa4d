#ifndef MCFLAB_SCENARIO_HPP
#define MCFLAB_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcflab/conformal_family.hpp"
#include "mcflab/vector_field.hpp"

namespace mcf {

using Json = nlohmann::json;

/** {"case":"I_i","lambda":1.0,"c1":1.0,"c2":0.0,"Q":"zero",
 *  "domain":[[u0,u1],[v0,v1]], ...}; case I_i additionally requires
 * "form":"u"|"v" to pick between the two first-integral closures. */
ConformalFamily family_from_json(const Json& j);

/** Named metric ({"name":"flat-gaussian"|"hyperbolic-gaussian"|
 * "flat-isothermal","domain":...}) or {"family":{...}}, which also yields
 * the family's vector field. */
struct MetricSpec {
    SurfaceMetric metric;
    std::optional<SurfaceField> field;
};
MetricSpec metric_from_json(const Json& j);

/** Named surface field ({"name":"shrinker"|"translator"}) for flat charts. */
SurfaceField surface_field_from_json(const Json& j);

/** Named symmetry candidate or explicit quadratic components
 * {"tau":{"t":2},"xi":{"x":1},"eta":{"u":1}}. */
SymmetryCandidate candidate_from_json(const Json& j);

/** Parses and validates a scenario config. Unknown keys are rejected and
 * every tolerance must be positive; violations raise ConfigError. */
struct ScenarioConfig {
    std::string name;
    std::string kind;
    std::uint64_t seed = 1;
    Json metric;      // family spec or named metric
    Json field;       // symmetry candidates / surface fields
    Json initial;     // initial data
    Json run;         // steps, T, dt, ...
    Json tolerances;  // asserted bounds, all > 0
    std::string out_dir;

    static ScenarioConfig parse(const Json& j);
};

/** Returns the built-in scenario config for a name; throws ConfigError for
 * unknown names. */
ScenarioConfig builtin_scenario(const std::string& name);
std::vector<std::string> builtin_scenario_names();

/** Runs a scenario and returns the exit report
 * {scenario, status, metrics{residuals, distances, runtimes}, rng, seed}.
 * status is "pass" exactly when every asserted tolerance was met. */
Json run_scenario(const ScenarioConfig& config);

/** Deep-copies a report with volatile timing fields removed; two runs with
 * the same config and seed compare equal on this view. */
Json stable_report_view(Json report);

} // namespace mcf

#endif
