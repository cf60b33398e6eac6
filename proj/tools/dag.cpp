#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dag/harness.hpp"

namespace {

enum Exit { kPass = 0, kCounterexample = 1, kInvalid = 2, kExhausted = 3 };

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dag::ParseError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw dag::ParseError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw dag::ParseError("cannot write " + path);
  out << text;
}

void print_summary(const dag::TheoremReport& r) {
  std::cout << r.theorem << ": " << (r.passed() ? "PASS" : "FAIL") << " trials=" << r.trials
            << " failures=" << r.failures << " skipped=" << r.skipped << " ideal=" << r.ideal << " checks=" << r.checks
            << " rejections=" << r.rejections;
  if (r.max_residual > 0) std::cout << " max_residual=" << r.max_residual;
  std::cout << '\n';
  if (r.failure_note) std::cout << "  first counterexample: " << *r.failure_note << '\n';
  if (r.skip_note && r.skipped == r.trials) std::cout << "  all trials skipped: " << *r.skip_note << '\n';
}

int run_verify(const dag::CampaignConfig& cfg, const std::string& json_out) {
  const dag::TheoremReport r = dag::run_campaign(cfg);
  print_summary(r);
  if (!json_out.empty()) write_text(json_out, dag::to_json(r).dump(2) + "\n");
  return r.passed() ? kPass : kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification harness for difference-angle geometry on vertical-axis parabolas"};
  app.require_subcommand(1);

  dag::CampaignConfig cfg;
  std::string json_out;
  auto* verify = app.add_subcommand("verify", "run a seeded campaign for one theorem");
  verify->add_option("--theorem", cfg.theorem, "theorem id (see list-theorems)")->required();
  verify->add_option("--trials", cfg.trials, "number of trials")->default_val(1000);
  verify->add_option("--seed", cfg.seed, "64-bit campaign seed")->default_val(42);
  verify->add_option("--bound", cfg.bound, "numerator/denominator cap")->default_val(50);
  verify->add_option("--retry-limit", cfg.retry_limit, "rejections allowed per trial")->default_val(1000);
  verify->add_option("--tol", cfg.tolerance, "tolerance for approximate suites")->default_val(1e-9);
  verify->add_option("--json", json_out, "write the report as JSON ('-' for stdout)");

  auto* list = app.add_subcommand("list-theorems", "list registered theorem ids");

  std::string scene_path, out_path, svg_path;
  auto* construct = app.add_subcommand("construct", "apply a scene's constructions and checks");
  construct->add_option("--scene", scene_path, "scene JSON")->required();
  construct->add_option("--out", out_path, "result JSON (stdout if omitted)");

  auto* plot = app.add_subcommand("plot", "render a scene as SVG");
  plot->add_option("--scene", scene_path, "scene JSON")->required();
  plot->add_option("--svg", svg_path, "output SVG (stdout if omitted)");

  dag::CampaignConfig euclid;
  euclid.theorem = "euclid_export";
  auto* export_cmd = app.add_subcommand("euclid-export", "binary64 campaign for the Euclidean bisector theorem");
  export_cmd->add_option("--trials", euclid.trials, "number of triangles")->default_val(1000);
  export_cmd->add_option("--tol", euclid.tolerance, "residual tolerance")->default_val(1e-9);
  export_cmd->add_option("--seed", euclid.seed, "64-bit campaign seed")->default_val(42);
  export_cmd->add_option("--json", json_out, "write the report as JSON ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*verify) return run_verify(cfg, json_out);
    if (*export_cmd) return run_verify(euclid, json_out);
    if (*list) {
      for (const dag::TheoremSpec& t : dag::theorem_registry())
        std::cout << t.id << (t.control ? " [control]" : "") << (t.approximate ? " [approximate]" : "") << "  "
                  << t.summary << '\n';
      return kPass;
    }
    if (*construct) {
      const dag::Scene scene = dag::scene_from_json(read_json(scene_path));
      const nlohmann::json result = dag::construct_scene(scene);
      write_text(out_path, result.dump(2) + "\n");
      for (const auto& [id, v] : result["verify"].items())
        if (v["status"] == "fail") return kCounterexample;
      return kPass;
    }
    if (*plot) {
      const dag::Scene scene = dag::scene_from_json(read_json(scene_path));
      write_text(svg_path, dag::render_svg(scene));
      return kPass;
    }
  } catch (const dag::GeneratorExhausted& e) {
    std::cerr << "generator exhausted: " << e.what() << '\n';
    return kExhausted;
  } catch (const dag::ParseError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const dag::GeometryError& e) {
    std::cerr << "invalid scene: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid scene: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
