#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dag/sampling.hpp"
#include "dag/scene.hpp"

namespace dag {

/// Rejection sampling ran out of retries; the generator is over-constrained.
class GeneratorExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TrialStatus { pass, fail, skipped, ideal };

struct CheckResult {
  TrialStatus status = TrialStatus::pass;
  std::string note;
  long checks = 0;
  double residual = 0.0;
};

struct TheoremSpec {
  std::string id;
  std::string summary;
  /// Uses a tolerance instead of exact zero.
  bool approximate = false;
  /// Mutation controls and other deliberately broken variants.
  bool control = false;
  std::function<Scene(Sampler&)> generate;
  std::function<CheckResult(const Scene&, double tol)> check;
};

const std::vector<TheoremSpec>& theorem_registry();

/// Throws std::invalid_argument for an unknown id.
const TheoremSpec& find_theorem(const std::string& id);

struct CampaignConfig {
  std::string theorem;
  long trials = 1000;
  std::uint64_t seed = 42;
  long bound = 50;
  long retry_limit = 1000;
  double tolerance = 1e-9;
};

/// Throws std::invalid_argument for trials < 1 or bound < 2.
void validate(const CampaignConfig& cfg);

/// Deterministic admissible configuration for one trial. Throws
/// GeneratorExhausted after `retry_limit` rejections.
Scene generate_config(const TheoremSpec& thm, std::uint64_t seed, std::uint64_t trial, long bound, long retry_limit,
                      long* rejections = nullptr);

/// Runs the check on a scene (normalizing by its gauge first).
CheckResult check_scene(const TheoremSpec& thm, const Scene& scene, double tol = 1e-9);

TheoremReport run_campaign(const CampaignConfig& cfg);

/// Maps every point through the scene gauge into the normalized chart.
Scene normalized(const Scene& scene);

// ---- JSON ----

nlohmann::json to_json(const Scene& scene);
/// Throws ParseError for malformed scenes.
Scene scene_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TheoremReport& report);
TheoremReport report_from_json(const nlohmann::json& j);

/// Applies the scene's `construct` entries and returns the computed objects.
nlohmann::json construct_scene(const Scene& scene);

// ---- SVG ----

/// Throws GeometryError for an empty scene.
std::string render_svg(const Scene& scene);

}  // namespace dag
