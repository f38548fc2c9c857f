#include "kfvm/geometry.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <stdexcept>

namespace kfvm {

StencilGeometry build_full_stencil(int R) {
  if (R != 2 && R != 3)
    throw std::invalid_argument("unsupported stencil radius (must be 2 or 3)");
  StencilGeometry s;
  s.radius = R;
  for (int j = -R; j <= R; ++j)
    for (int i = -R; i <= R; ++i)
      if (i * i + j * j <= R * R) s.full.push_back({i, j});
  std::sort(s.full.begin(), s.full.end(), offset_less);
  return s;
}

void build_substencils(StencilGeometry& s) {
  const int R = s.radius;
  for (auto& sub : s.substencils) sub.clear();
  for (const CellOffset& c : s.full) {
    const int i = c.i, j = c.j;
    if (i * i + j * j <= (R - 1) * (R - 1)) s.substencils[0].push_back(c);
    if (std::abs(j) <= i) s.substencils[1].push_back(c);
    if (std::abs(j) <= -i) s.substencils[2].push_back(c);
    if (std::abs(i) <= j) s.substencils[3].push_back(c);
    if (std::abs(i) <= -j) s.substencils[4].push_back(c);
  }
  // full stencil is already sorted; filtering preserves the order
}

namespace {

// Full-column-rank test of the monomial cell-average matrix at degree p.
bool unisolvent_at_degree(const std::vector<CellOffset>& cells, int p) {
  const auto mono = graded_monomials(p);
  const int n = static_cast<int>(cells.size());
  const int d = static_cast<int>(mono.size());
  if (d > n) return false;
  Eigen::MatrixXd P(n, d);
  for (int h = 0; h < n; ++h)
    for (int v = 0; v < d; ++v)
      P(h, v) = monomial_avg_cell(cells[h].i, cells[h].j, mono[v]);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(P);
  const auto& sv = svd.singularValues();
  return sv(sv.size() - 1) > 1e-10 * sv(0);
}

}  // namespace

void assign_degrees(StencilGeometry& s) {
  const int max_p = 2 * s.radius - 1;  // degree of the full stencil
  for (int q = 0; q < StencilGeometry::num_stencils; ++q) {
    int deg = 0;  // degree 0 is always admissible
    for (int p = 1; p <= max_p; ++p) {
      if (!unisolvent_at_degree(s.cells(q), p)) break;
      deg = p;
    }
    s.degree[q] = deg;
  }
}

StencilGeometry build_stencil_geometry(int R) {
  StencilGeometry s = build_full_stencil(R);
  build_substencils(s);
  assign_degrees(s);
  return s;
}

QuadratureRule gauss_legendre_rule(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("unsupported quadrature size");
  // Nodes/weights on [-1,1], mapped to [-1/2,1/2] (x/2, w/2).
  static const std::vector<std::vector<double>> nodes1 = {
      {0.0},
      {-0.5773502691896257645, 0.5773502691896257645},
      {-0.7745966692414833770, 0.0, 0.7745966692414833770},
      {-0.8611363115940525752, -0.3399810435848562648, 0.3399810435848562648,
       0.8611363115940525752},
      {-0.9061798459386639928, -0.5384693101056830910, 0.0,
       0.5384693101056830910, 0.9061798459386639928},
      {-0.9324695142031520278, -0.6612093864662645137, -0.2386191860831969086,
       0.2386191860831969086, 0.6612093864662645137, 0.9324695142031520278}};
  static const std::vector<std::vector<double>> weights1 = {
      {2.0},
      {1.0, 1.0},
      {0.5555555555555555556, 0.8888888888888888889, 0.5555555555555555556},
      {0.3478548451374538574, 0.6521451548625461426, 0.6521451548625461426,
       0.3478548451374538574},
      {0.2369268850561890875, 0.4786286704993664680, 0.5688888888888888889,
       0.4786286704993664680, 0.2369268850561890875},
      {0.1713244923791703450, 0.3607615730481386076, 0.4679139345726910474,
       0.4679139345726910474, 0.3607615730481386076, 0.1713244923791703450}};
  QuadratureRule r;
  for (double x : nodes1[n - 1]) r.nodes.push_back(0.5 * x);
  for (double w : weights1[n - 1]) r.weights.push_back(0.5 * w);
  return r;
}

FacePointSet face_quadrature_points(int R) {
  const QuadratureRule rule = gauss_legendre_rule(R);
  FacePointSet f;
  f.R = R;
  for (int k = 0; k < R; ++k) {
    const double t = rule.nodes[k];
    f.points[FACE_W].push_back({-0.5, t});
    f.points[FACE_E].push_back({0.5, t});
    f.points[FACE_S].push_back({t, -0.5});
    f.points[FACE_N].push_back({t, 0.5});
  }
  return f;
}

std::vector<Point> interior_quadrature_points(int R) {
  const QuadratureRule rule = gauss_legendre_rule(R);
  std::vector<Point> pts;
  for (int ky = 0; ky < R; ++ky)
    for (int kx = 0; kx < R; ++kx)
      pts.push_back({rule.nodes[kx], rule.nodes[ky]});
  return pts;
}

}  // namespace kfvm
