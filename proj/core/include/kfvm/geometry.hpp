#ifndef KFVM_GEOMETRY_HPP_
#define KFVM_GEOMETRY_HPP_

#include <array>
#include <vector>

#include "kfvm/monomials.hpp"

namespace kfvm {

// Integer cell offset relative to the central cell of a stencil.
struct CellOffset {
  int i = 0;
  int j = 0;
  bool operator==(const CellOffset&) const = default;
};

// Lexicographic by (j,i); every stencil is stored in this order.
inline bool offset_less(CellOffset a, CellOffset b) {
  return (a.j != b.j) ? a.j < b.j : a.i < b.i;
}

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Gauss-Legendre rule on [-1/2, 1/2]; weights sum to 1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

enum Face : int { FACE_W = 0, FACE_E = 1, FACE_S = 2, FACE_N = 3 };

// Quadrature points on the four faces of the unit cell [-1/2,1/2]^2,
// R points per face, ordered by ascending node within each face.
struct FacePointSet {
  int R = 0;
  std::array<std::vector<Point>, 4> points;
  int total() const { return 4 * R; }
  const Point& at(int face, int k) const { return points[face][k]; }
  const Point& flat(int s) const { return points[s / R][s % R]; }
};

// "Spherical" stencil of radius R with its five 2D substencils.
// q=0 is the full stencil; q=1 the smaller-radius central set;
// q=2..5 the east/west/north/south biased sets.
struct StencilGeometry {
  int radius = 0;
  std::vector<CellOffset> full;
  std::array<std::vector<CellOffset>, 5> substencils;
  std::array<int, 6> degree{};  // max monomial total degree per (sub)stencil

  static constexpr int num_stencils = 6;
  const std::vector<CellOffset>& cells(int q) const {
    return q == 0 ? full : substencils[q - 1];
  }
  int size(int q) const { return static_cast<int>(cells(q).size()); }
};

// All offsets with i^2 + j^2 <= R^2, deterministically ordered.
// Throws std::invalid_argument for unsupported radii.
StencilGeometry build_full_stencil(int R);

// Central substencil {i^2+j^2 <= (R-1)^2} and the four axis-biased sets
// {|j|<=i}, {|j|<=-i}, {|i|<=j}, {|i|<=-j} intersected with the full stencil.
void build_substencils(StencilGeometry& s);

// Largest p such that the monomial cell-average matrix has full column
// rank on each (sub)stencil (scaled singular values, tolerance 1e-10).
void assign_degrees(StencilGeometry& s);

// Convenience: full + substencils + degrees.
StencilGeometry build_stencil_geometry(int R);

QuadratureRule gauss_legendre_rule(int n);  // 1 <= n <= 6

FacePointSet face_quadrature_points(int R);

// Tensor-product R x R interior points with matching weights (weights
// multiply to the 2D rule; used for cell-average init and source terms).
std::vector<Point> interior_quadrature_points(int R);

}  // namespace kfvm

#endif
