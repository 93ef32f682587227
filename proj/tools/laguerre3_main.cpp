// Command-line front end: figure exporters and JSON-driven queries against
// the chain-geometry library.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "laguerre3/bridge.hpp"
#include "laguerre3/cubics.hpp"
#include "laguerre3/figures.hpp"
#include "laguerre3/json_io.hpp"
#include "laguerre3/projline.hpp"

namespace lag = laguerre3;

namespace {

std::vector<lag::Rational> parse_param_list(const std::string& csv) {
  std::vector<lag::Rational> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string item = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!item.empty()) out.push_back(lag::parse_rational(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void print_series(const lag::SeriesPair& sp) {
  std::cout << "G1(g(s)) = " << sp.g1.to_string() << "\n";
  std::cout << "G2(g(s)) = " << sp.g2.to_string() << "\n";
}

int run_classify(const std::string& chain_file) {
  lag::Chain c = lag::chain_from_json(lag::load_json_file(chain_file));
  const lag::NormalForm& nf = c.normal_form();
  lag::Json out;
  out["normal_form"] = lag::to_json(nf);
  out["improper_point"] = lag::to_string(c.improper_point());
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_contact(const std::string& matrix_file) {
  lag::Collineation4 a(lag::mat4_from_json(lag::load_json_file(matrix_file)));
  lag::TypeTag tag = lag::classify_type(a);
  std::cout << "type: " << lag::to_string(tag.base);
  if (tag.base != lag::TypeBase::None) std::cout << " (level " << tag.level << ")";
  std::cout << "\n";
  lag::SeriesPair sp = lag::contact_series(a);
  print_series(sp);
  std::cout << "contact order at f: " << lag::to_string(lag::contact_order_at_f(a)) << "\n";
  if (tag.base != lag::TypeBase::None)
    for (int k = 2; k <= 4; ++k)
      std::cout << "table rows for order " << k << ": "
                << (lag::table_predicate(a, k) ? "satisfied" : "violated") << "\n";
  return 0;
}

int run_factor(const std::string& matrix_file, int level) {
  lag::Collineation4 a(lag::mat4_from_json(lag::load_json_file(matrix_file)));
  lag::Json factors = lag::Json::array();
  if (level == 1) {
    lag::TypeIFactors f = lag::factor_type_I(a);
    for (const lag::Collineation4* m : {&f.affinity, &f.shear, &f.stretching, &f.translation})
      factors.push_back(lag::to_json(m->mat()));
  } else if (level == 2) {
    for (const lag::Collineation4& m : lag::factor_I12(a)) factors.push_back(lag::to_json(m.mat()));
  } else if (level == 3) {
    for (const lag::Collineation4& m : lag::factor_I123(a)) factors.push_back(lag::to_json(m.mat()));
  } else {
    throw lag::DomainError(lag::Err::BadInput, "--level must be 1, 2 or 3");
  }
  lag::Json out;
  out["factors"] = factors;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_improper(const std::string& chain_file, const std::string& chain2_file) {
  lag::Chain c1 = lag::chain_from_json(lag::load_json_file(chain_file));
  std::cout << "improper point: " << lag::to_string(c1.improper_point()) << "\n";
  if (chain2_file.empty()) return 0;
  lag::Chain c2 = lag::chain_from_json(lag::load_json_file(chain2_file));
  std::cout << "improper point 2: " << lag::to_string(c2.improper_point()) << "\n";
  lag::ChainKind k1 = c1.normal_form().kind, k2 = c2.normal_form().kind;
  if (k1 == lag::ChainKind::Parabola && k2 == lag::ChainKind::Parabola) {
    lag::ImproperVerdict v = lag::same_improper_point_parabolas_checked(c1, c2);
    std::cout << "by improper point: " << (v.by_improper_point ? "same" : "different") << "\n";
    std::cout << "by projected translate: " << (v.by_second_path ? "same" : "different") << "\n";
    std::cout << "verdict: " << (v.value() ? "same" : "different") << "\n";
  } else if (k1 == lag::ChainKind::CubicParabola && k2 == lag::ChainKind::CubicParabola) {
    lag::ImproperVerdict v = lag::same_improper_point_cubics_checked(c1, c2);
    std::cout << "by improper point: " << (v.by_improper_point ? "same" : "different") << "\n";
    std::cout << "by third-order contact: " << (v.by_second_path ? "same" : "different") << "\n";
    std::cout << "verdict: " << (v.value() ? "same" : "different") << "\n";
  } else {
    bool same = c1.improper_point() == c2.improper_point();
    std::cout << "verdict: " << (same ? "same" : "different") << "\n";
  }
  return 0;
}

int run_touch(const std::string& chain_file, const std::string& chain2_file) {
  lag::Chain c1 = lag::chain_from_json(lag::load_json_file(chain_file));
  lag::Chain c2 = lag::chain_from_json(lag::load_json_file(chain2_file));
  std::cout << "kind: " << lag::to_string(c1.normal_form().kind) << " / "
            << lag::to_string(c2.normal_form().kind) << "\n";
  std::cout << "touch: " << (lag::chains_touch(c1, c2) ? "yes" : "no") << "\n";
  return 0;
}

int run_admissible(const std::string& file) {
  lag::Json j = lag::load_json_file(file);
  lag::TernionCurve curve{{lag::Ternion(0), lag::Ternion(0), lag::Ternion(0), lag::Ternion(0)}};
  if (j.is_object() && (j.contains("matrix") || j.contains("kind"))) {
    curve = lag::TernionCurve::from_normal_form(lag::chain_from_json(j).normal_form());
  } else {
    curve = lag::curve_from_json(j);
  }
  if (curve.z[3].is_zero() && !curve.z[2].is_zero()) {
    bool ok = lag::is_admissible_parabola(curve);
    std::cout << "parabola admissible: " << (ok ? "yes" : "no") << "\n";
    std::cout << "diameters vertical: "
              << (lag::ideal_class(curve.z[2]) == lag::IdealClass::Annihilator ? "yes" : "no")
              << "\n";
    bool plane_regular = !lag::real_part(curve.z[1]).is_zero() ||
                         !lag::real_part(curve.z[2]).is_zero();
    std::cout << "plane regular: " << (plane_regular ? "yes" : "no") << "\n";
  } else {
    lag::AdmissibleCubicVerdict v = lag::is_admissible_cubic_checked(curve);
    std::cout << "by normal form: " << (v.by_normal_form ? "admissible" : "not admissible") << "\n";
    std::cout << "by second-order contact: " << (v.by_contact ? "admissible" : "not admissible")
              << "\n";
    std::cout << "cubic parabola admissible: " << (v.value() ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_figure(int id, const std::vector<std::string>& range, int samples,
               const std::string& params_csv, int grid, const std::string& format,
               const std::string& out_path) {
  lag::FigureSpec spec;
  spec.id = id;
  if (!range.empty()) {
    spec.t_min = lag::parse_rational(range[0]);
    spec.t_max = lag::parse_rational(range[1]);
  }
  if (samples != 0) spec.samples = samples;
  if (grid != 0) spec.grid = grid;
  if (!params_csv.empty()) spec.params = parse_param_list(params_csv);
  lag::Mesh mesh = lag::generate(spec);
  lag::export_mesh_to_file(mesh, lag::parse_format(format), out_path);
  std::cout << "wrote " << out_path << " (" << mesh.vertices.size() << " vertices, "
            << mesh.polylines.size() << " polylines, " << mesh.quads.size() << " quads)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-dimensional Laguerre geometry over R[e]/<e^3>: chains, contact and figures"};
  app.require_subcommand(1);

  auto* fig = app.add_subcommand("figure", "sample a figure and write OBJ/SVG/CSV");
  int id = 2, samples = 0, grid = 0;
  std::vector<std::string> range;
  std::string params_csv, format, out_path, chain_file, chain2_file, matrix_file;
  int level = 1;
  fig->add_option("--id", id, "figure id (2..6)")->required();
  fig->add_option("--range", range, "curve parameter range")->expected(2);
  fig->add_option("--samples", samples, "samples per curve");
  fig->add_option("--params", params_csv, "comma-separated group parameters");
  fig->add_option("--grid", grid, "surface grid resolution");
  fig->add_option("--format", format, "obj|svg|csv")->required();
  fig->add_option("--out", out_path, "output path")->required();

  auto* cls = app.add_subcommand("classify", "normal form and improper point of a chain");
  cls->add_option("--chain", chain_file, "chain JSON file")->required();

  auto* con = app.add_subcommand("contact", "contact series and order of a collineation");
  con->add_option("--matrix", matrix_file, "4x4 matrix JSON file")->required();

  auto* fac = app.add_subcommand("factor", "factor a type-I collineation");
  fac->add_option("--matrix", matrix_file, "4x4 matrix JSON file")->required();
  fac->add_option("--level", level, "1 = type I, 2 = type I.1.2, 3 = type I.1.2.3")->required();

  auto* imp = app.add_subcommand("improper", "improper point(s); two chains are compared");
  imp->add_option("--chain", chain_file, "chain JSON file")->required();
  imp->add_option("--chain2", chain2_file, "second chain JSON file");

  auto* tou = app.add_subcommand("touch", "decide whether two chains touch");
  tou->add_option("--chain", chain_file, "chain JSON file")->required();
  tou->add_option("--chain2", chain2_file, "second chain JSON file")->required();

  auto* adm = app.add_subcommand("admissible", "admissibility of a (cubic) parabola");
  adm->add_option("--chain", chain_file, "chain or curve JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (fig->parsed())
      return run_figure(id, range, samples, params_csv, grid, format, out_path);
    if (cls->parsed()) return run_classify(chain_file);
    if (con->parsed()) return run_contact(matrix_file);
    if (fac->parsed()) return run_factor(matrix_file, level);
    if (imp->parsed()) return run_improper(chain_file, chain2_file);
    if (tou->parsed()) return run_touch(chain_file, chain2_file);
    if (adm->parsed()) return run_admissible(chain_file);
  } catch (const lag::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lag::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
