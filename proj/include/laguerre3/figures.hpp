#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "laguerre3/rational.hpp"

namespace laguerre3 {

enum class MeshFormat { Obj, Svg, Csv };

// Sampling request for one of the five figure scenes (ids 2..6): the curve
// family on the shear cylinder, the translated cylinders, the two ruled
// surfaces and the Cayley-surface view. Geometry is sampled exactly and only
// rounded at export.
struct FigureSpec {
  int id = 2;
  Rational t_min = Rational(-3, 2);
  Rational t_max = Rational(3, 2);
  int samples = 64;
  std::vector<Rational> params = {Rational(-1), Rational(-1, 2), Rational(1, 2), Rational(1)};
  int grid = 32;
};

struct Mesh {
  struct Polyline {
    int tag;
    std::vector<int> idx;
  };
  struct Quad {
    int tag;
    std::array<int, 4> idx;
  };

  std::vector<std::array<Rational, 3>> vertices;
  std::vector<int> vertex_tag;
  std::vector<Polyline> polylines;
  std::vector<Quad> quads;

  int add_vertex(std::array<Rational, 3> v, int tag);
  bool indices_valid() const;
};

// Samples curves, orbits and surface grids for the requested figure. Every
// vertex is checked against the exact defining equation of its family member
// before it is stored. Throws InvalidSpec.
Mesh generate(const FigureSpec& spec);

// Deterministic export: fixed ordering, floats printed once with 9
// significant digits. The SVG uses the fixed axonometry
// u = x1 - (2/5) x2, v = x3 - (1/5) x2.
void export_mesh(const Mesh& m, MeshFormat format, std::ostream& os);
void export_mesh_to_file(const Mesh& m, MeshFormat format, const std::string& path);

MeshFormat parse_format(const std::string& name);  // throws BadInput

}  // namespace laguerre3
