#include "laguerre3/figures.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>

#include "laguerre3/errors.hpp"

namespace laguerre3 {

int Mesh::add_vertex(std::array<Rational, 3> v, int tag) {
  vertices.push_back(std::move(v));
  vertex_tag.push_back(tag);
  return static_cast<int>(vertices.size()) - 1;
}

bool Mesh::indices_valid() const {
  int n = static_cast<int>(vertices.size());
  for (const Polyline& p : polylines)
    for (int i : p.idx)
      if (i < 0 || i >= n) return false;
  for (const Quad& q : quads)
    for (int i : q.idx)
      if (i < 0 || i >= n) return false;
  return vertex_tag.size() == vertices.size();
}

namespace {

using Point = std::array<Rational, 3>;

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(Err::InternalInconsistency, what);
}

std::vector<Rational> linspace(const Rational& lo, const Rational& hi, int n) {
  std::vector<Rational> out;
  out.reserve(n);
  Rational step = (hi - lo) / Rational(n - 1);
  for (int i = 0; i < n; ++i) out.push_back(lo + Rational(i) * step);
  return out;
}

Point cubic_point(const Rational& t) { return {t, t * t, t * t * t}; }

// Group actions on affine points, row convention.
Point sigma_image(const Rational& c, const Point& p) {
  return {p[0], p[1], p[2] + c * (p[0] + p[1])};
}
Point gamma1_image(const Rational& a, const Point& p) {
  return {p[0] + a, p[1], p[2] - a * p[1]};
}
Point gamma2_image(const Rational& a, const Point& p) {
  return {p[0], p[1] + a, p[2] + Rational(2) * a * p[0]};
}

// Exact defining equations of the family members.
bool on_psi(const Point& p) { return p[1] == p[0] * p[0]; }
bool on_translated_psi(const Point& p, const Rational& a) {
  Rational d = p[0] - a;
  return p[1] == d * d;
}
bool on_shifted_psi(const Point& p, const Rational& a) { return p[1] - a == p[0] * p[0]; }
bool on_cayley(const Point& p) {
  return Rational(2) * p[0] * p[1] - p[0] * p[0] * p[0] == p[2];
}

struct Builder {
  Mesh mesh;
  int next_tag = 0;

  int add_curve(const std::vector<Point>& pts, const std::function<bool(const Point&)>& res) {
    int tag = next_tag++;
    Mesh::Polyline line{tag, {}};
    for (const Point& p : pts) {
      require(res(p), "figure vertex violates its exact residual");
      line.idx.push_back(mesh.add_vertex(p, tag));
    }
    mesh.polylines.push_back(std::move(line));
    return tag;
  }

  int add_grid(const std::vector<Rational>& us, const std::vector<Rational>& vs,
               const std::function<Point(const Rational&, const Rational&)>& point,
               const std::function<bool(const Point&, const Rational&, const Rational&)>& res) {
    int tag = next_tag++;
    int nu = static_cast<int>(us.size()), nv = static_cast<int>(vs.size());
    std::vector<int> idx(nu * nv);
    for (int i = 0; i < nu; ++i)
      for (int j = 0; j < nv; ++j) {
        Point p = point(us[i], vs[j]);
        require(res(p, us[i], vs[j]), "figure vertex violates its exact residual");
        idx[i * nv + j] = mesh.add_vertex(std::move(p), tag);
      }
    for (int i = 0; i + 1 < nu; ++i)
      for (int j = 0; j + 1 < nv; ++j)
        mesh.quads.push_back(Mesh::Quad{tag,
                                        {idx[i * nv + j], idx[i * nv + j + 1],
                                         idx[(i + 1) * nv + j + 1], idx[(i + 1) * nv + j]}});
    return tag;
  }
};

std::pair<Rational, Rational> param_range(const FigureSpec& spec) {
  if (spec.params.empty()) return {Rational(-1), Rational(1)};
  Rational lo = spec.params.front(), hi = spec.params.front();
  for (const Rational& p : spec.params) {
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  if (lo == hi)
    throw DomainError(Err::InvalidSpec, "ruled-surface figures need a parameter range");
  return {lo, hi};
}

}  // namespace

Mesh generate(const FigureSpec& spec) {
  if (spec.id < 2 || spec.id > 6) throw DomainError(Err::InvalidSpec, "figure id must be 2..6");
  if (spec.samples < 2) throw DomainError(Err::InvalidSpec, "at least 2 samples per curve");
  if (spec.grid < 2) throw DomainError(Err::InvalidSpec, "grid resolution must be at least 2");
  if (!(spec.t_min < spec.t_max))
    throw DomainError(Err::InvalidSpec, "parameter range must be non-degenerate");

  Builder b;
  std::vector<Rational> ts = linspace(spec.t_min, spec.t_max, spec.samples);
  std::vector<Rational> gs = linspace(spec.t_min, spec.t_max, spec.grid);

  std::vector<Point> base;
  base.reserve(ts.size());
  for (const Rational& t : ts) base.push_back(cubic_point(t));

  auto curve_images = [&](auto image, const std::function<bool(const Point&, const Rational&)>& res) {
    b.add_curve(base, on_psi);  // C itself
    for (const Rational& a : spec.params) {
      std::vector<Point> pts;
      pts.reserve(base.size());
      for (const Point& p : base) pts.push_back(image(a, p));
      b.add_curve(pts, [&res, &a](const Point& p) { return res(p, a); });
    }
  };

  auto psi_grid = [&] {
    b.add_grid(gs, gs,
               [](const Rational& x1, const Rational& x3) {
                 return Point{x1, x1 * x1, x3};
               },
               [](const Point& p, const Rational&, const Rational&) { return on_psi(p); });
  };

  switch (spec.id) {
    case 2:
      // C and its shear images, all on the invariant cylinder Psi.
      curve_images(sigma_image, [](const Point& p, const Rational&) { return on_psi(p); });
      psi_grid();
      break;

    case 3:
      // Gamma1 images on translated cylinders, plus those cylinders.
      curve_images(gamma1_image, on_translated_psi);
      for (const Rational& a : spec.params)
        b.add_grid(gs, gs,
                   [&a](const Rational& x1, const Rational& x3) {
                     Rational d = x1 - a;
                     return Point{x1, d * d, x3};
                   },
                   [&a](const Point& p, const Rational&, const Rational&) {
                     return on_translated_psi(p, a);
                   });
      break;

    case 4: {
      // Ruled surface swept by Gamma1 over C; the origin orbit (the x1-axis,
      // an edge of regression) comes first, then a fan of point orbits.
      auto [lo, hi] = param_range(spec);
      std::vector<Rational> as = linspace(lo, hi, spec.grid);
      std::vector<Point> origin_orbit;
      for (const Rational& a : as) origin_orbit.push_back(gamma1_image(a, cubic_point(Rational(0))));
      b.add_curve(origin_orbit,
                  [](const Point& p) { return p[1].is_zero() && p[2].is_zero(); });
      b.add_grid(gs, as,
                 [](const Rational& t, const Rational& a) {
                   return gamma1_image(a, cubic_point(t));
                 },
                 [](const Point& p, const Rational&, const Rational& a) {
                   return on_translated_psi(p, a);
                 });
      for (const Rational& t : linspace(spec.t_min, spec.t_max, 9)) {
        std::vector<Point> orbit;
        Point src = cubic_point(t);
        for (const Rational& a : as) orbit.push_back(gamma1_image(a, src));
        b.add_curve(orbit, [&src](const Point& p) { return p[1] == src[1]; });
      }
      break;
    }

    case 5:
      // C, Psi and their Gamma2 images; the image curves lie on the Cayley
      // surface, the image cylinders are shifted copies of Psi.
      curve_images(gamma2_image, [](const Point& p, const Rational&) { return on_cayley(p); });
      psi_grid();
      for (const Rational& a : spec.params)
        b.add_grid(gs, gs,
                   [&a](const Rational& x1, const Rational& x3) {
                     return gamma2_image(a, Point{x1, x1 * x1, x3});
                   },
                   [&a](const Point& p, const Rational&, const Rational&) {
                     return on_shifted_psi(p, a);
                   });
      break;

    case 6: {
      // Ruled subset of the Cayley surface swept by Gamma2, plus orbits.
      auto [lo, hi] = param_range(spec);
      std::vector<Rational> as = linspace(lo, hi, spec.grid);
      b.add_grid(gs, as,
                 [](const Rational& t, const Rational& a) {
                   return gamma2_image(a, cubic_point(t));
                 },
                 [](const Point& p, const Rational&, const Rational&) { return on_cayley(p); });
      for (const Rational& t : linspace(spec.t_min, spec.t_max, 9)) {
        std::vector<Point> orbit;
        Point src = cubic_point(t);
        for (const Rational& a : as) orbit.push_back(gamma2_image(a, src));
        b.add_curve(orbit, on_cayley);
      }
      break;
    }
  }

  require(b.mesh.indices_valid(), "mesh indices out of range");
  return b.mesh;
}

namespace {

std::string fmt9(const Rational& r) {
  double d = r.to_double();
  if (d == 0.0) d = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", d);
  return buf;
}

void export_obj(const Mesh& m, std::ostream& os) {
  os << "# laguerre3 figure export\n";
  for (const auto& v : m.vertices)
    os << "v " << fmt9(v[0]) << " " << fmt9(v[1]) << " " << fmt9(v[2]) << "\n";
  for (const auto& p : m.polylines) {
    os << "l";
    for (int i : p.idx) os << " " << i + 1;
    os << "\n";
  }
  for (const auto& q : m.quads)
    os << "f " << q.idx[0] + 1 << " " << q.idx[1] + 1 << " " << q.idx[2] + 1 << " "
       << q.idx[3] + 1 << "\n";
}

// Fixed axonometry with exact rational coefficients; the SVG y axis points
// down, so the second coordinate is negated.
std::pair<Rational, Rational> project(const std::array<Rational, 3>& v) {
  return {v[0] - Rational(2, 5) * v[1], v[2] - Rational(1, 5) * v[1]};
}

void export_svg(const Mesh& m, std::ostream& os) {
  Rational ulo(0), uhi(1), vlo(0), vhi(1);
  bool first = true;
  for (const auto& v : m.vertices) {
    auto [u, w] = project(v);
    if (first || u < ulo) ulo = u;
    if (first || u > uhi) uhi = u;
    if (first || w < vlo) vlo = w;
    if (first || w > vhi) vhi = w;
    first = false;
  }
  Rational du = uhi - ulo, dv = vhi - vlo;
  if (du.is_zero()) du = Rational(1);
  if (dv.is_zero()) dv = Rational(1);
  Rational mu = du / Rational(20), mv = dv / Rational(20);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt9(ulo - mu) << " "
     << fmt9(Rational(0) - (vhi + mv)) << " " << fmt9(du + Rational(2) * mu) << " "
     << fmt9(dv + Rational(2) * mv) << "\">\n";
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt9((du + dv) / Rational(800))
     << "\">\n";
  auto emit_points = [&](const std::vector<int>& idx) {
    bool lead = true;
    for (int i : idx) {
      auto [u, w] = project(m.vertices[i]);
      if (!lead) os << " ";
      lead = false;
      os << fmt9(u) << "," << fmt9(Rational(0) - w);
    }
  };
  for (const auto& p : m.polylines) {
    os << "<polyline points=\"";
    emit_points(p.idx);
    os << "\"/>\n";
  }
  for (const auto& q : m.quads) {
    os << "<polygon points=\"";
    emit_points(std::vector<int>(q.idx.begin(), q.idx.end()));
    os << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
}

void export_csv(const Mesh& m, std::ostream& os) {
  os << "tag,x1,x2,x3\n";
  for (std::size_t i = 0; i < m.vertices.size(); ++i)
    os << m.vertex_tag[i] << "," << fmt9(m.vertices[i][0]) << "," << fmt9(m.vertices[i][1])
       << "," << fmt9(m.vertices[i][2]) << "\n";
}

}  // namespace

void export_mesh(const Mesh& m, MeshFormat format, std::ostream& os) {
  if (!m.indices_valid())
    throw DomainError(Err::InternalInconsistency, "mesh indices out of range");
  switch (format) {
    case MeshFormat::Obj: export_obj(m, os); break;
    case MeshFormat::Svg: export_svg(m, os); break;
    case MeshFormat::Csv: export_csv(m, os); break;
  }
  if (!os) throw IoError("write failed");
}

void export_mesh_to_file(const Mesh& m, MeshFormat format, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  export_mesh(m, format, os);
  os.flush();
  if (!os) throw IoError("write to '" + path + "' failed");
}

MeshFormat parse_format(const std::string& name) {
  if (name == "obj") return MeshFormat::Obj;
  if (name == "svg") return MeshFormat::Svg;
  if (name == "csv") return MeshFormat::Csv;
  throw DomainError(Err::BadInput, "unknown format '" + name + "' (expected obj|svg|csv)");
}

}  // namespace laguerre3
