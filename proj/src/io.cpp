#include "newton/io.hpp"

#include <algorithm>
#include <cstdio>

#include "newton/errors.hpp"

namespace newton {

nlohmann::json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational((long)j.get<long long>());
  if (!j.is_string()) throw ParseError(0, "expected a rational string");
  return rational_from_string(j.get<std::string>());
}

nlohmann::json polyhedron_json(const StaircasePolyhedron& p) {
  nlohmann::json j;
  j["dim"] = p.dim();
  j["vertices"] = nlohmann::json::array();
  for (const RationalPoint& v : p.vertices()) {
    nlohmann::json row = nlohmann::json::array();
    for (const Rational& c : v) row.push_back(rational_json(c));
    j["vertices"].push_back(std::move(row));
  }
  j["facets"] = nlohmann::json::array();
  for (const Facet& f : p.facets()) {
    nlohmann::json row;
    row["normal"] = nlohmann::json::array();
    for (const Integer& n : f.normal) row["normal"].push_back(n.get_str());
    row["offset"] = rational_json(f.offset);
    j["facets"].push_back(std::move(row));
  }
  return j;
}

StaircasePolyhedron polyhedron_from_json(const nlohmann::json& j) {
  if (!j.contains("dim") || !j.contains("vertices"))
    throw ParseError(0, "polyhedron document needs 'dim' and 'vertices'");
  int dim = j["dim"].get<int>();
  std::vector<RationalPoint> points;
  for (const nlohmann::json& row : j["vertices"]) {
    RationalPoint p;
    for (const nlohmann::json& c : row) p.push_back(rational_from_json(c));
    if ((int)p.size() != dim)
      throw ParseError(0, "vertex arity disagrees with 'dim'");
    points.push_back(std::move(p));
  }
  return StaircasePolyhedron::hull(std::move(points), dim);
}

nlohmann::json face_json(const CompactFace& face) {
  nlohmann::json j;
  j["affine_dim"] = face.affine_dim;
  j["vertices"] = nlohmann::json::array();
  for (const RationalPoint& v : face.vertices) {
    nlohmann::json row = nlohmann::json::array();
    for (const Rational& c : v) row.push_back(rational_json(c));
    j["vertices"].push_back(std::move(row));
  }
  j["normal"] = nlohmann::json::array();
  for (const Integer& n : face.normal) j["normal"].push_back(n.get_str());
  j["level"] = rational_json(face.level);
  return j;
}

std::string face_label(const CompactFace& face) {
  std::string s = "conv{";
  for (size_t i = 0; i < face.vertices.size(); ++i) {
    if (i) s += ",";
    s += "(";
    for (size_t k = 0; k < face.vertices[i].size(); ++k) {
      if (k) s += ",";
      s += to_string(face.vertices[i][k]);
    }
    s += ")";
  }
  return s + "}";
}

namespace {

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

void write_staircase_svg(const StaircasePolyhedron& p, std::ostream& out) {
  if (p.dim() != 2)
    throw UnsupportedDimensionError("staircase plots are d = 2 only");

  const std::vector<RationalPoint>& verts = p.vertices();
  Rational vmax = 1;
  for (const RationalPoint& v : verts)
    for (const Rational& c : v) vmax = std::max(vmax, c);
  double view = vmax.get_d() + 1.0;

  const double side = 400.0, margin = 50.0;
  double s = side / view;
  auto X = [&](double x) { return margin + s * x; };
  auto Y = [&](double y) { return margin + side - s * y; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << px(side + 2 * margin) << "\" height=\"" << px(side + 2 * margin)
      << "\" viewBox=\"0 0 " << px(side + 2 * margin) << " "
      << px(side + 2 * margin) << "\">\n";

  // shaded bounded complement: box minus the staircase region
  out << "  <polygon fill=\"#c8d8f0\" stroke=\"none\" points=\"";
  std::vector<std::pair<double, double>> poly;
  poly.emplace_back(0.0, 0.0);
  double x0 = verts.front()[0].get_d();
  if (x0 > 0.0) {
    poly.emplace_back(0.0, view);
    poly.emplace_back(x0, view);
  }
  for (const RationalPoint& v : verts)
    poly.emplace_back(v[0].get_d(), v[1].get_d());
  double yk = verts.back()[1].get_d();
  if (yk > 0.0) {
    poly.emplace_back(view, yk);
    poly.emplace_back(view, 0.0);
  }
  for (size_t i = 0; i < poly.size(); ++i) {
    if (i) out << " ";
    out << px(X(poly[i].first)) << "," << px(Y(poly[i].second));
  }
  out << "\"/>\n";

  // staircase boundary
  out << "  <polyline fill=\"none\" stroke=\"#204080\" stroke-width=\"2\" "
         "points=\"";
  bool first = true;
  if (x0 > 0.0) {
    out << px(X(x0)) << "," << px(Y(view));
    first = false;
  }
  for (const RationalPoint& v : verts) {
    if (!first) out << " ";
    out << px(X(v[0].get_d())) << "," << px(Y(v[1].get_d()));
    first = false;
  }
  if (yk > 0.0) out << " " << px(X(view)) << "," << px(Y(yk));
  out << "\"/>\n";

  // axes
  out << "  <line x1=\"" << px(X(0)) << "\" y1=\"" << px(Y(0)) << "\" x2=\""
      << px(X(view)) << "\" y2=\"" << px(Y(0))
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "  <line x1=\"" << px(X(0)) << "\" y1=\"" << px(Y(0)) << "\" x2=\""
      << px(X(0)) << "\" y2=\"" << px(Y(view))
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // vertices with coordinate labels
  for (const RationalPoint& v : verts) {
    double x = v[0].get_d(), y = v[1].get_d();
    out << "  <circle cx=\"" << px(X(x)) << "\" cy=\"" << px(Y(y))
        << "\" r=\"3\" fill=\"#204080\"/>\n";
    out << "  <text x=\"" << px(X(x) + 6) << "\" y=\"" << px(Y(y) - 6)
        << "\" font-size=\"12\" font-family=\"monospace\">("
        << to_string(v[0]) << "," << to_string(v[1]) << ")</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace newton
