#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dag/gauge.hpp"
#include "dag/parabola.hpp"

namespace dag {

/// A named configuration: the unit of scene files and of counterexamples.
struct Scene {
  std::optional<Gauge> gauge;
  std::map<std::string, Point> points;
  std::map<std::string, Parabola> parabolas;
  /// Scalar inputs of a construction (slopes, fractions, angles).
  std::map<std::string, Scalar> params;
  std::vector<std::string> construct;
  std::vector<std::string> verify;

  friend bool operator==(const Scene&, const Scene&) = default;
};

/// Outcome of a theorem campaign.
struct TheoremReport {
  std::string theorem;
  std::uint64_t seed = 0;
  long trials = 0;
  long failures = 0;
  long skipped = 0;
  /// Trials whose configuration ended at an ideal point (Miquel-type
  /// degeneracies); counted as passing.
  long ideal = 0;
  long checks = 0;
  /// Configurations the generator discarded before an admissible one.
  long rejections = 0;
  /// Largest residual magnitude seen; only meaningful for approximate suites.
  double max_residual = 0.0;
  std::optional<Scene> first_counterexample;
  std::optional<std::string> failure_note;
  /// Reason given by the first skipped trial.
  std::optional<std::string> skip_note;

  bool passed() const { return failures == 0; }

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

}  // namespace dag
