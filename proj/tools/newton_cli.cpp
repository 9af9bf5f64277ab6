// newton-cli: staircase polyhedra, multiplicities, and nondegeneracy
// reports over exact rational arithmetic.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "newton/errors.hpp"
#include "newton/family.hpp"
#include "newton/io.hpp"
#include "newton/monomial_ideal.hpp"
#include "newton/nnd.hpp"
#include "newton/oracle.hpp"
#include "newton/parse.hpp"
#include "newton/polyhedron.hpp"

namespace {

using nlohmann::json;
using namespace newton;

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitBudget = 4;
constexpr int kExitDisagree = 5;

std::unique_ptr<std::istream> open_input(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return std::make_unique<std::stringstream>(std::move(buf));
  }
  auto file = std::make_unique<std::ifstream>(path);
  if (!*file) throw ParseError(0, "cannot open input file '" + path + "'");
  return file;
}

std::string vertex_text(const RationalPoint& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::string facet_text(const Facet& f, const std::vector<std::string>& vars) {
  std::string s;
  bool any = false;
  for (size_t i = 0; i < f.normal.size(); ++i) {
    if (f.normal[i] == 0) continue;
    if (any) s += " + ";
    if (f.normal[i] != 1) s += f.normal[i].get_str() + "*";
    s += i < vars.size() ? vars[i] : "x" + std::to_string(i + 1);
    any = true;
  }
  if (!any) s = "0";
  return s + " >= " + to_string(f.offset);
}

long d_factorial(int d) {
  long f = 1;
  for (int k = 2; k <= d; ++k) f *= k;
  return f;
}

json failing_faces_json(const std::vector<CompactFace>& faces) {
  json arr = json::array();
  for (const CompactFace& f : faces) arr.push_back(face_json(f));
  return arr;
}

void emit(const json& report, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_gamma(const std::string& input, const std::string& svg_path,
              bool as_json) {
  auto in = open_input(input);
  IdealDocument doc = parse_ideal_document(*in);
  StaircasePolyhedron gamma = newton_polyhedron(doc.ideal);

  if (!svg_path.empty()) {
    if (gamma.dim() != 2)
      throw UnsupportedDimensionError("--svg requires a d = 2 ideal");
    std::ofstream svg(svg_path);
    if (!svg) throw DomainError("cannot write '" + svg_path + "'");
    write_staircase_svg(gamma, svg);
  }

  json report = polyhedron_json(gamma);
  std::ostringstream text;
  text << "vertices:";
  for (const RationalPoint& v : gamma.vertices())
    text << " " << vertex_text(v);
  text << "\nfacets:\n";
  for (const Facet& f : gamma.facets())
    text << "  " << facet_text(f, doc.vars) << "\n";
  emit(report, as_json, text.str());
  return 0;
}

int cmd_covol_mult(const std::string& input, bool as_json) {
  auto in = open_input(input);
  IdealDocument doc = parse_ideal_document(*in);
  StaircasePolyhedron gamma = newton_polyhedron(doc.ideal);
  Rational covol = covolume(gamma);
  Rational dcovol = covol * d_factorial(doc.ideal.dim);
  long e = multiplicity(doc.ideal);
  bool equal = Rational(e) == dcovol;

  json report = polyhedron_json(gamma);
  report["covol"] = rational_json(covol);
  report["d_factorial_covol"] = rational_json(dcovol);
  report["multiplicity"] = e;
  report["nnd"] = equal;

  std::ostringstream text;
  text << "covol = " << to_string(covol) << "\n"
       << "d! * covol = " << to_string(dcovol) << "\n"
       << "multiplicity = " << e << "\n"
       << "verdict: " << (equal ? "EQUAL" : "UNEQUAL") << "\n";
  emit(report, as_json, text.str());
  return 0;
}

int cmd_nnd(const std::string& input, const std::string& route, bool as_json) {
  auto in = open_input(input);
  IdealDocument doc = parse_ideal_document(*in);

  std::optional<bool> face_verdict;
  std::vector<CompactFace> failing;
  if (route == "face" || route == "both") {
    FaceCertification cert = certify_faces(doc.ideal);
    face_verdict = cert.nnd;
    failing = std::move(cert.failing_faces);
  }
  std::optional<bool> mult_verdict;
  if (route == "mult" || route == "both")
    mult_verdict = is_nnd_multiplicity(doc.ideal);

  bool nnd = face_verdict.value_or(false) || mult_verdict.value_or(false);
  std::optional<MonomialIdeal> closure;
  if (nnd)
    closure = monomial_integral_closure(ideal_I0(newton_polyhedron(doc.ideal)));

  json report;
  report["nnd"] = nnd;
  if (face_verdict) report["face_route"] = *face_verdict;
  if (mult_verdict) report["mult_route"] = *mult_verdict;
  report["failing_faces"] = failing_faces_json(failing);
  if (closure) {
    json gens = json::array();
    for (const Exponent& g : closure->minimal_generators()) gens.push_back(g);
    report["closure_generators"] = std::move(gens);
  }

  std::ostringstream text;
  if (face_verdict)
    text << "face route: " << (*face_verdict ? "NND" : "NOT NND") << "\n";
  for (const CompactFace& f : failing)
    text << "  failing face: " << face_label(f) << "\n";
  if (mult_verdict)
    text << "mult route: " << (*mult_verdict ? "NND" : "NOT NND") << "\n";
  text << "verdict: " << (nnd ? "NND" : "NOT NND") << "\n";
  if (closure) {
    text << "closure generators:";
    for (const Exponent& g : closure->minimal_generators()) {
      text << " [";
      for (size_t i = 0; i < g.size(); ++i)
        text << (i ? "," : "") << g[i];
      text << "]";
    }
    text << "\n";
  }
  emit(report, as_json, text.str());

  if (route == "both" && *face_verdict != *mult_verdict) {
    std::cerr << "error: face and multiplicity routes disagree\n";
    return kExitDisagree;
  }
  return 0;
}

const char* verdict_name(NoetherianVerdict v) {
  switch (v) {
    case NoetherianVerdict::Certified:
      return "Noetherian-certified";
    case NoetherianVerdict::ConsistentUpToBudget:
      return "Noetherian-consistent-up-to-budget";
    default:
      return "non-polyhedral-up-to-budget";
  }
}

int cmd_family(const std::string& input, int budget, bool as_json) {
  auto in = open_input(input);
  FamilyDocument doc = parse_family_document(*in);
  FamilySpec family = doc.spec();

  LimitingBody body = limiting_body(family, budget);
  NoetherianReport noe = noetherian_report(family, budget);

  json report;
  json fam;
  fam["verdict"] = verdict_name(noe.verdict);
  fam["note"] = noe.note;
  fam["budget"] = noe.budget;

  std::ostringstream text;
  if (body.stabilized_at) {
    int c = *body.stabilized_at;
    fam["c"] = c;
    FamilyMultVerdict mv = mult_equals_covol_check(family, c);
    fam["e"] = rational_json(mv.family_e);
    report["covol"] =
        rational_json(mv.d_factorial_covol / d_factorial(family.dim()));
    report["d_factorial_covol"] = rational_json(mv.d_factorial_covol);
    report["nnd"] = mv.equal;
    report["failing_faces"] = failing_faces_json(mv.failing_faces);
    json closure = polyhedron_json(*body.closure);
    report["vertices"] = closure["vertices"];
    report["facets"] = closure["facets"];

    text << "stabilized at c = " << c << "\n"
         << "e(family) = " << to_string(mv.family_e) << "\n"
         << "d! * covol = " << to_string(mv.d_factorial_covol) << "\n"
         << "multiplicity vs covolume: " << (mv.equal ? "EQUAL" : "UNEQUAL")
         << "\n";
    if (!mv.equal) text << "gap = " << to_string(mv.gap) << "\n";
    for (const CompactFace& f : mv.failing_faces)
      text << "  failing face: " << face_label(f) << "\n";
    text << "closure vertices:";
    for (const RationalPoint& v : body.closure->vertices())
      text << " " << vertex_text(v);
    text << "\n";
  } else {
    text << "not stabilized up to budget " << noe.budget << "\n";
    text << "scaled axis vertices:";
    for (size_t n = 0; n < body.scaled.size(); ++n)
      text << " " << vertex_text(body.scaled[n].vertices().front());
    text << "\n";
  }
  text << "noetherian: " << verdict_name(noe.verdict) << " (" << noe.note
       << ")\n";
  report["family"] = std::move(fam);
  emit(report, as_json, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton polyhedron calculator for monomial-supported ideals"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string svg_path;
  std::string route = "both";
  int budget = 8;
  bool as_json = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", input, "input document path, '-' for stdin");
    sub->add_flag("--json", as_json, "machine-readable report");
  };

  CLI::App* gamma = app.add_subcommand("gamma", "Newton polyhedron");
  add_common(gamma);
  gamma->add_option("--svg", svg_path, "write a staircase plot (d = 2)");

  CLI::App* covol = app.add_subcommand("covol", "co-volume vs multiplicity");
  add_common(covol);
  CLI::App* mult = app.add_subcommand("mult", "multiplicity vs co-volume");
  add_common(mult);

  CLI::App* nnd = app.add_subcommand("nnd", "nondegeneracy certification");
  add_common(nnd);
  nnd->add_option("--route", route, "face | mult | both")
      ->check(CLI::IsMember({"face", "mult", "both"}));

  CLI::App* family = app.add_subcommand("family", "graded family analysis");
  add_common(family);
  family->add_option("--budget", budget, "prefix indices to inspect");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gamma->parsed()) return cmd_gamma(input, svg_path, as_json);
    if (covol->parsed() || mult->parsed()) return cmd_covol_mult(input, as_json);
    if (nnd->parsed()) return cmd_nnd(input, route, as_json);
    if (family->parsed()) return cmd_family(input, budget, as_json);
  } catch (const newton::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const newton::BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const newton::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
