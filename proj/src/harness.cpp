#include "dag/harness.hpp"

#include <algorithm>
#include <sstream>

#include "call.hpp"
#include "dag/theorems.hpp"
#include "dag/triangle.hpp"

namespace dag {

using nlohmann::json;

void validate(const CampaignConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (cfg.bound < 2) throw std::invalid_argument("bound must be >= 2");
  if (cfg.retry_limit < 1) throw std::invalid_argument("retry limit must be >= 1");
  if (!(cfg.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
}

Scene generate_config(const TheoremSpec& thm, std::uint64_t seed, std::uint64_t trial, long bound, long retry_limit,
                      long* rejections) {
  Sampler s(hash64(seed, trial), bound);
  for (long attempt = 0; attempt < retry_limit; ++attempt) {
    try {
      return thm.generate(s);
    } catch (const GeometryError&) {
      if (rejections) ++*rejections;
    } catch (const std::domain_error&) {
      // Division by zero in a construction: a degenerate draw.
      if (rejections) ++*rejections;
    }
  }
  throw GeneratorExhausted(thm.id + ": no admissible configuration after " + std::to_string(retry_limit) +
                           " attempts (trial " + std::to_string(trial) + ")");
}

Scene normalized(const Scene& scene) {
  if (!scene.gauge) return scene;
  scene.gauge->validate();
  Scene out = scene;
  for (auto& [name, p] : out.points) p = scene.gauge->to_chart(p);
  out.gauge.reset();
  return out;
}

CheckResult check_scene(const TheoremSpec& thm, const Scene& scene, double tol) {
  return thm.check(normalized(scene), tol);
}

TheoremReport run_campaign(const CampaignConfig& cfg) {
  validate(cfg);
  const TheoremSpec& thm = find_theorem(cfg.theorem);
  TheoremReport rep;
  rep.theorem = thm.id;
  rep.seed = cfg.seed;
  rep.trials = cfg.trials;
  for (long i = 0; i < cfg.trials; ++i) {
    const Scene sc = generate_config(thm, cfg.seed, static_cast<std::uint64_t>(i), cfg.bound, cfg.retry_limit,
                                     &rep.rejections);
    CheckResult r;
    try {
      r = thm.check(sc, cfg.tolerance);
    } catch (const GeometryError& e) {
      // The generator already ran this check once, so a throw here is a real failure.
      r.status = TrialStatus::fail;
      r.note = std::string("check raised: ") + e.what();
    } catch (const std::domain_error& e) {
      r.status = TrialStatus::fail;
      r.note = std::string("check raised: ") + e.what();
    }
    rep.checks += r.checks;
    rep.max_residual = std::max(rep.max_residual, r.residual);
    switch (r.status) {
      case TrialStatus::pass:
        break;
      case TrialStatus::ideal:
        ++rep.ideal;
        break;
      case TrialStatus::skipped:
        ++rep.skipped;
        if (!rep.skip_note) rep.skip_note = r.note;
        break;
      case TrialStatus::fail:
        ++rep.failures;
        if (!rep.first_counterexample) {
          rep.first_counterexample = sc;
          rep.failure_note = "trial " + std::to_string(i) + ": " + r.note;
        }
        break;
    }
  }
  return rep;
}

// ---- JSON ----

namespace {

json point_json(const Point& p) { return json::array({p.x.str(), p.y.str()}); }

Scalar scalar_from(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("scalar must be a string in exact text form");
}

Point point_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("point must be a two-element array");
  return {scalar_from(j[0]), scalar_from(j[1])};
}

json parabola_json(const Parabola& p) {
  return {{"kappa", p.kappa().str()}, {"beta", p.beta().str()}, {"gamma", p.gamma().str()}};
}

json meet_json(const MeetResult& m) {
  if (m.is_finite()) return {{"at", point_json(m.point())}};
  if (m.is_ideal()) return {{"ideal", m.direction().str()}};
  return {{m.is_coincident() ? "coincident" : "empty", true}};
}

std::vector<std::string> strings_from(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const json& e : j) {
    if (!e.is_string()) throw ParseError(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

json to_json(const Scene& scene) {
  json j;
  if (scene.gauge) {
    const Gauge& g = *scene.gauge;
    j["gauge"] = {{"origin", point_json(g.origin)},
                  {"reference_direction", json::array({g.reference_direction.x.str(), g.reference_direction.y.str()})},
                  {"projective_direction",
                   json::array({g.projective_direction.x.str(), g.projective_direction.y.str()})}};
  }
  j["points"] = json::object();
  for (const auto& [n, p] : scene.points) j["points"][n] = point_json(p);
  j["parabolas"] = json::object();
  for (const auto& [n, p] : scene.parabolas) j["parabolas"][n] = parabola_json(p);
  if (!scene.params.empty()) {
    j["params"] = json::object();
    for (const auto& [n, v] : scene.params) j["params"][n] = v.str();
  }
  j["construct"] = scene.construct;
  j["verify"] = scene.verify;
  return j;
}

Scene scene_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("scene must be a JSON object");
  Scene s;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "gauge") {
        Gauge g;
        g.origin = point_from(value.at("origin"));
        const Point r = point_from(value.at("reference_direction"));
        const Point d = point_from(value.at("projective_direction"));
        g.reference_direction = {r.x, r.y};
        g.projective_direction = {d.x, d.y};
        g.validate();
        s.gauge = g;
      } else if (key == "points") {
        for (const auto& [n, p] : value.items()) s.points[n] = point_from(p);
      } else if (key == "parabolas") {
        for (const auto& [n, p] : value.items())
          s.parabolas.emplace(n, Parabola(scalar_from(p.at("kappa")), scalar_from(p.at("beta")),
                                          scalar_from(p.at("gamma"))));
      } else if (key == "params") {
        for (const auto& [n, v] : value.items()) s.params[n] = scalar_from(v);
      } else if (key == "construct") {
        s.construct = strings_from(value, "construct");
      } else if (key == "verify") {
        s.verify = strings_from(value, "verify");
      } else {
        throw ParseError("unknown scene field: " + key);
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed scene: ") + e.what());
  } catch (const GeometryError& e) {
    throw ParseError(std::string("invalid scene: ") + e.what());
  }
  std::map<std::string, int> names;
  for (const auto& [n, p] : s.points) ++names[n];
  for (const auto& [n, p] : s.parabolas) ++names[n];
  for (const auto& [n, c] : names)
    if (c > 1) throw ParseError("name used twice: " + n);
  for (const std::string& id : s.verify) {
    try {
      find_theorem(id);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return s;
}

json to_json(const TheoremReport& r) {
  json j = {{"theorem", r.theorem},   {"seed", r.seed},         {"trials", r.trials},
            {"failures", r.failures}, {"skipped", r.skipped},   {"ideal", r.ideal},
            {"checks", r.checks},     {"rejections", r.rejections}, {"max_residual", r.max_residual}};
  if (r.first_counterexample) j["first_counterexample"] = to_json(*r.first_counterexample);
  if (r.failure_note) j["failure_note"] = *r.failure_note;
  if (r.skip_note) j["skip_note"] = *r.skip_note;
  return j;
}

TheoremReport report_from_json(const json& j) {
  TheoremReport r;
  try {
    r.theorem = j.at("theorem").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.trials = j.at("trials").get<long>();
    r.failures = j.at("failures").get<long>();
    r.skipped = j.at("skipped").get<long>();
    r.ideal = j.value("ideal", 0L);
    r.checks = j.value("checks", 0L);
    r.rejections = j.value("rejections", 0L);
    r.max_residual = j.value("max_residual", 0.0);
    if (j.contains("first_counterexample")) r.first_counterexample = scene_from_json(j.at("first_counterexample"));
    if (j.contains("failure_note")) r.failure_note = j.at("failure_note").get<std::string>();
    if (j.contains("skip_note")) r.skip_note = j.at("skip_note").get<std::string>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  return r;
}

// ---- constructions ----

namespace detail {

Call parse_call(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') throw ParseError("construction must look like op(args): " + text);
  Call c;
  c.op = text.substr(0, open);
  std::stringstream ss(text.substr(open + 1, text.size() - open - 2));
  std::string arg;
  while (std::getline(ss, arg, ',')) {
    arg.erase(std::remove(arg.begin(), arg.end(), ' '), arg.end());
    if (!arg.empty()) c.args.push_back(arg);
  }
  return c;
}

}  // namespace detail

namespace {

using detail::Call;
using detail::parse_call;


const Point& point_arg(const Scene& s, const std::string& n) {
  auto it = s.points.find(n);
  if (it == s.points.end()) throw ParseError("undefined point " + n);
  return it->second;
}

Scalar scalar_arg(const Scene& s, const std::string& n) {
  auto it = s.params.find(n);
  return it != s.params.end() ? it->second : Scalar::parse(n);
}

void arity(const Call& c, std::size_t n) {
  if (c.args.size() != n)
    throw ParseError(c.op + " takes " + std::to_string(n) + " arguments, got " + std::to_string(c.args.size()));
}

DATriangle tri_arg(const Scene& s, const Call& c, std::size_t first = 0) {
  return DATriangle(point_arg(s, c.args[first]), point_arg(s, c.args[first + 1]), point_arg(s, c.args[first + 2]));
}

json points_json(const std::array<Point, 3>& pts) {
  json j = json::array();
  for (const Point& p : pts) j.push_back(point_json(p));
  return j;
}

json apply(const Scene& s, const Call& c) {
  if (c.op == "centers") {
    arity(c, 3);
    const DATriangle t = tri_arg(s, c);
    const CenterSet cs = centers(t);
    json ex = json::object();
    for (const auto& [v, m] : cs.excenters) ex[to_string(v)] = meet_json(m);
    return {{"incenter", point_json(cs.incenter)},
            {"excenters", ex},
            {"centroid", point_json(cs.centroid)},
            {"tangent_centroid", point_json(cs.tangent_centroid)},
            {"bisector_centroid", point_json(cs.bisector_centroid)}};
  }
  if (c.op == "angles") {
    arity(c, 3);
    const DATriangle t = tri_arg(s, c);
    json j = json::array();
    for (Vertex v : kVertices) j.push_back(t.angle(v).str());
    return j;
  }
  if (c.op == "circumparabola") {
    arity(c, 3);
    return parabola_json(circumparabola(point_arg(s, c.args[0]), point_arg(s, c.args[1]), point_arg(s, c.args[2])));
  }
  if (c.op == "angle") {
    arity(c, 3);
    return difference_angle(point_arg(s, c.args[0]), point_arg(s, c.args[1]), point_arg(s, c.args[2])).value.str();
  }
  if (c.op == "meet") {
    arity(c, 4);
    return meet_json(meet(line_through(point_arg(s, c.args[0]), point_arg(s, c.args[1])),
                          line_through(point_arg(s, c.args[2]), point_arg(s, c.args[3]))));
  }
  if (c.op == "simson") {
    arity(c, 4);
    const SimsonResult r = simson(tri_arg(s, c), scalar_arg(s, c.args[3]));
    return {{"feet", points_json(r.feet)}, {"line", r.line.str()}, {"collinearity", r.collinearity.str()}};
  }
  if (c.op == "midpoint_lemma") {
    arity(c, 3);
    const MidpointLemma r = midpoint_lemma_check(tri_arg(s, c));
    json meets = json::array();
    for (const MeetResult& m : r.meets) meets.push_back(meet_json(m));
    return {{"meets", meets}, {"feet", points_json(r.feet)}, {"ideal", r.ideal}};
  }
  if (c.op == "dabct") {
    arity(c, 3);
    const DABCTResult r = dabct(tri_arg(s, c));
    return {{"l_points", points_json(r.l_points)}, {"line", r.line.str()}, {"collinearity", r.collinearity.str()}};
  }
  if (c.op == "miquel_triangle") {
    arity(c, 6);
    const auto r = miquel_triangle(tri_arg(s, c), point_arg(s, c.args[3]), point_arg(s, c.args[4]),
                                   point_arg(s, c.args[5]));
    json ps = json::array();
    for (const Parabola& p : r.parabolas) ps.push_back(parabola_json(p));
    return {{"m", meet_json(r.m)}, {"parabolas", ps}};
  }
  if (c.op == "miquel_quadrilateral") {
    arity(c, 4);
    const Point &a = point_arg(s, c.args[0]), &b = point_arg(s, c.args[1]), &cc = point_arg(s, c.args[2]),
                &d = point_arg(s, c.args[3]);
    const auto r =
        miquel_quadrilateral(CompleteQuadrilateral(line_through(a, b), line_through(b, cc), line_through(cc, d),
                                                   line_through(d, a)));
    json ps = json::array();
    for (const Parabola& p : r.parabolas) ps.push_back(parabola_json(p));
    return {{"m", meet_json(r.m)}, {"parabolas", ps}};
  }
  if (c.op == "parabolic_power") {
    arity(c, 2);
    auto it = s.parabolas.find(c.args[0]);
    if (it == s.parabolas.end()) throw ParseError("undefined parabola " + c.args[0]);
    return parabolic_power(it->second, point_arg(s, c.args[1])).str();
  }
  throw ParseError("unknown construction: " + c.op);
}

const char* status_name(TrialStatus s) {
  switch (s) {
    case TrialStatus::pass:
      return "pass";
    case TrialStatus::fail:
      return "fail";
    case TrialStatus::skipped:
      return "skipped";
    case TrialStatus::ideal:
      return "ideal";
  }
  return "?";
}

}  // namespace

json construct_scene(const Scene& scene) {
  const Scene s = normalized(scene);
  json out = {{"constructions", json::object()}, {"verify", json::object()}};
  for (const std::string& text : s.construct) out["constructions"][text] = apply(s, parse_call(text));
  for (const std::string& id : s.verify) {
    const CheckResult r = find_theorem(id).check(s, 1e-9);
    json v = {{"status", status_name(r.status)}, {"checks", r.checks}};
    if (!r.note.empty()) v["note"] = r.note;
    out["verify"][id] = v;
  }
  return out;
}

}  // namespace dag
