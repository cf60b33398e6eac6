#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "call.hpp"
#include "dag/harness.hpp"
#include "dag/theorems.hpp"
#include "dag/triangle.hpp"

namespace dag {

namespace {

struct Mark {
  std::string label;
  double x, y;
  bool derived;
};

struct Arrow {
  std::string label;
  Slope direction;
};

struct Drawing {
  std::vector<Mark> marks;
  std::vector<std::pair<std::string, Parabola>> parabolas;
  std::vector<std::pair<std::string, Line>> lines;
  std::vector<Arrow> arrows;

  void mark(const std::string& label, const Point& p, bool derived = true) {
    marks.push_back({label, p.x.to_double(), p.y.to_double(), derived});
  }
  void meet(const std::string& label, const MeetResult& m) {
    if (m.is_finite()) mark(label, m.point());
    if (m.is_ideal()) arrows.push_back({label, m.direction()});
  }
};

std::string num(double v) {
  if (std::abs(v) < 5e-5) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

const Point& point_of(const Scene& s, const std::string& n) {
  auto it = s.points.find(n);
  if (it == s.points.end()) throw ParseError("undefined point " + n);
  return it->second;
}

void add_construction(Drawing& d, const Scene& s, const detail::Call& c) {
  auto need = [&](std::size_t n) {
    if (c.args.size() != n) throw ParseError(c.op + " takes " + std::to_string(n) + " arguments");
  };
  auto tri = [&]() { return DATriangle(point_of(s, c.args[0]), point_of(s, c.args[1]), point_of(s, c.args[2])); };
  auto sides = [&](const DATriangle& t) {
    for (Vertex v : kVertices) d.lines.push_back({"", t.side_opposite(v)});
  };
  if (c.op == "centers") {
    need(3);
    const DATriangle t = tri();
    const CenterSet cs = centers(t);
    sides(t);
    for (Vertex v : kVertices) d.lines.push_back({"bisector " + to_string(v), bisector_at(t, v, BisectorMode::interior)});
    d.mark("I", cs.incenter);
    for (const auto& [v, m] : cs.excenters) d.meet("I_" + to_string(v), m);
    d.mark("G", cs.centroid);
  } else if (c.op == "circumparabola") {
    need(3);
    d.parabolas.push_back({"", circumparabola(point_of(s, c.args[0]), point_of(s, c.args[1]), point_of(s, c.args[2]))});
  } else if (c.op == "meet") {
    need(4);
    const Line l1 = line_through(point_of(s, c.args[0]), point_of(s, c.args[1]));
    const Line l2 = line_through(point_of(s, c.args[2]), point_of(s, c.args[3]));
    d.lines.push_back({"", l1});
    d.lines.push_back({"", l2});
    d.meet("X", meet(l1, l2));
  } else if (c.op == "simson") {
    need(4);
    auto it = s.params.find(c.args[3]);
    const SimsonResult r = simson(tri(), it != s.params.end() ? it->second : Scalar::parse(c.args[3]));
    sides(tri());
    for (int i = 0; i < 3; ++i) d.mark("H" + std::to_string(i + 1), r.feet[i]);
    d.lines.push_back({"simson", r.line});
  } else if (c.op == "dabct") {
    need(3);
    const DABCTResult r = dabct(tri());
    sides(tri());
    for (Vertex v : kVertices) d.mark("L_" + to_string(v), r.l_points[static_cast<std::size_t>(v)]);
    d.lines.push_back({"", r.line});
  } else if (c.op == "midpoint_lemma") {
    need(3);
    const MidpointLemma r = midpoint_lemma_check(tri());
    sides(tri());
    for (std::size_t i = 0; i < 3; ++i) d.meet(std::string(1, static_cast<char>('D' + i)), r.meets[i]);
  } else if (c.op == "miquel_triangle") {
    need(6);
    const auto r = miquel_triangle(tri(), point_of(s, c.args[3]), point_of(s, c.args[4]), point_of(s, c.args[5]));
    sides(tri());
    for (const Parabola& p : r.parabolas) d.parabolas.push_back({"", p});
    d.meet("M", r.m);
  } else if (c.op == "miquel_quadrilateral") {
    need(4);
    std::array<Point, 4> q{point_of(s, c.args[0]), point_of(s, c.args[1]), point_of(s, c.args[2]),
                           point_of(s, c.args[3])};
    const CompleteQuadrilateral cq(line_through(q[0], q[1]), line_through(q[1], q[2]), line_through(q[2], q[3]),
                                   line_through(q[3], q[0]));
    const auto r = miquel_quadrilateral(cq);
    for (const Line& l : cq.lines()) d.lines.push_back({"", l});
    d.mark("E", cq.points()[4]);
    d.mark("F", cq.points()[5]);
    for (const Parabola& p : r.parabolas) d.parabolas.push_back({"", p});
    d.meet("M", r.m);
  }
  // Other constructions have no figure.
}

}  // namespace

std::string render_svg(const Scene& scene) {
  const Scene s = normalized(scene);
  Drawing d;
  for (const auto& [n, p] : s.points) d.mark(n, p, false);
  for (const auto& [n, p] : s.parabolas) d.parabolas.push_back({n, p});
  for (const std::string& text : s.construct) add_construction(d, s, detail::parse_call(text));

  if (d.marks.empty() && d.parabolas.empty()) throw GeometryError("render_svg: nothing to draw");

  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  auto grow = [&](double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  };
  for (const Mark& m : d.marks) grow(m.x, m.y);
  if (d.marks.empty()) {
    for (const auto& [n, p] : d.parabolas) {
      const double vx = -p.beta().to_double() / (2 * p.kappa().to_double());
      for (double x : {vx - 1, vx, vx + 1}) grow(x, p(Scalar(mpq_class(x))).to_double());
    }
  }
  if (x1 - x0 < 1e-9) {
    x0 -= 1;
    x1 += 1;
  }
  if (y1 - y0 < 1e-9) {
    y0 -= 1;
    y1 += 1;
  }
  const double mx = 0.1 * (x1 - x0), my = 0.1 * (y1 - y0);
  const double bx0 = x0 - mx, bx1 = x1 + mx, by0 = y0 - my, by1 = y1 + my;
  const double size = std::max(bx1 - bx0, by1 - by0);
  const double stroke = 0.004 * size, radius = 0.008 * size, font = 0.03 * size;

  std::ostringstream o;
  // SVG y grows downwards, so every y is negated.
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(bx0) << ' ' << num(-by1) << ' '
    << num(bx1 - bx0) << ' ' << num(by1 - by0) << "\">\n";
  o << "<g fill=\"none\" stroke-width=\"" << num(stroke) << "\">\n";

  for (const auto& [label, p] : d.parabolas) {
    // Exact cubic form of the quadratic on each of 16 spans.
    const int spans = 16;
    const double k = p.kappa().to_double(), b = p.beta().to_double(), g = p.gamma().to_double();
    auto f = [&](double x) { return (k * x + b) * x + g; };
    o << "<path class=\"parabola\" stroke=\"#1f5fbf\" d=\"M " << num(bx0) << ' ' << num(-f(bx0));
    for (int i = 0; i < spans; ++i) {
      const double u = bx0 + (bx1 - bx0) * i / spans, v = bx0 + (bx1 - bx0) * (i + 1) / spans;
      const double qx = (u + v) / 2, qy = f(u) + (2 * k * u + b) * (v - u) / 2;
      const double c1x = u + 2.0 / 3 * (qx - u), c1y = f(u) + 2.0 / 3 * (qy - f(u));
      const double c2x = v + 2.0 / 3 * (qx - v), c2y = f(v) + 2.0 / 3 * (qy - f(v));
      o << " C " << num(c1x) << ' ' << num(-c1y) << ' ' << num(c2x) << ' ' << num(-c2y) << ' ' << num(v) << ' '
        << num(-f(v));
    }
    o << "\"/>\n";
    if (!label.empty()) o << "<!-- parabola " << escape(label) << ": " << escape(p.str()) << " -->\n";
  }

  for (const auto& [label, l] : d.lines) {
    double ax, ay, cx, cy;
    if (l.is_singular()) {
      ax = cx = l.x0().to_double();
      ay = by0;
      cy = by1;
    } else {
      const double m = l.m().to_double(), k = l.k().to_double();
      ax = bx0;
      cx = bx1;
      ay = m * ax + k;
      cy = m * cx + k;
    }
    o << "<line class=\"" << (label.empty() ? "line" : "bisector") << "\" stroke=\"#555555\" x1=\"" << num(ax)
      << "\" y1=\"" << num(-ay) << "\" x2=\"" << num(cx) << "\" y2=\"" << num(-cy) << "\"/>\n";
  }
  o << "</g>\n";

  for (const Mark& m : d.marks) {
    o << "<circle class=\"" << (m.derived ? "marker" : "point") << "\" cx=\"" << num(m.x) << "\" cy=\"" << num(-m.y)
      << "\" r=\"" << num(radius) << "\" fill=\"" << (m.derived ? "#c0392b" : "#000000") << "\"/>\n";
    o << "<text x=\"" << num(m.x + radius) << "\" y=\"" << num(-m.y - radius) << "\" font-size=\"" << num(font)
      << "\">" << escape(m.label) << "</text>\n";
  }

  // Ideal points: an arrow from the frame center to the frame edge.
  const double cx = (bx0 + bx1) / 2, cy = (by0 + by1) / 2;
  for (const Arrow& a : d.arrows) {
    double dx = 0, dy = 1;
    if (a.direction.is_finite()) {
      dx = 1;
      dy = a.direction.value().to_double();
    }
    double t = 1e300;
    if (dx != 0) t = std::min(t, (bx1 - cx) / std::abs(dx));
    if (dy != 0) t = std::min(t, (by1 - cy) / std::abs(dy));
    const double ex = cx + 0.95 * t * dx, ey = cy + 0.95 * t * dy;
    const double sx = cx + 0.75 * t * dx, sy = cy + 0.75 * t * dy;
    o << "<line class=\"ideal\" stroke=\"#8e44ad\" stroke-width=\"" << num(stroke) << "\" x1=\"" << num(sx)
      << "\" y1=\"" << num(-sy) << "\" x2=\"" << num(ex) << "\" y2=\"" << num(-ey) << "\"/>\n";
    o << "<circle class=\"ideal-head\" cx=\"" << num(ex) << "\" cy=\"" << num(-ey) << "\" r=\"" << num(radius)
      << "\" fill=\"#8e44ad\"/>\n";
    o << "<text x=\"" << num(ex) << "\" y=\"" << num(-ey - 2 * radius) << "\" font-size=\"" << num(font) << "\">"
      << escape(a.label + " (ideal, slope " + a.direction.str() + ")") << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace dag
