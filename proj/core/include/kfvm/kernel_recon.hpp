#ifndef KFVM_KERNEL_RECON_HPP_
#define KFVM_KERNEL_RECON_HPP_

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

#include "kfvm/geometry.hpp"
#include "kfvm/monomials.hpp"

namespace kfvm {

struct KernelConfig {
  double ell_over_delta = 5.0;  // squared-exponential length scale in cell units
};

// Row-major dense matrix; small, precompute-time only.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;
  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}
  double& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Squared-exponential kernel exp(-|x-y|^2 / (2 ell^2)).
double se_kernel(Point x, Point y, double ell);

// Average of exp(-t^2/(2 ell^2)) over a unit interval centered at c:
// ell*sqrt(pi/2) * [erf((c+1/2)/(ell*sqrt2)) - erf((c-1/2)/(ell*sqrt2))].
// Even in c by construction.
double avg_kernel_1d(double center_offset, double ell);

// N x N kernel cell-average matrix; Q_hl is the cell-h average of K(., x_l).
// Separable, so each entry is a product of two 1D factors.
DenseMatrix build_Q(std::span<const CellOffset> cells, double ell);

// N x D monomial cell-average matrix, columns in graded lexicographic order.
DenseMatrix build_P(std::span<const CellOffset> cells, int degree);

// Point sample vectors T_l = K(x*, x_l) and S_v = x*^alpha_(v).
void point_sample_vectors(std::span<const CellOffset> cells, Point x_star,
                          double ell, int degree, std::vector<double>& T,
                          std::vector<double>& S);

// Differential sample vectors at the cell center: D_l is the alpha-derivative
// of K(x, x_l) at x=0 (closed-form Gaussian-Hermite factors); S'_v is alpha!
// where the monomial index equals alpha and zero elsewhere.
void deriv_sample_vectors(std::span<const CellOffset> cells, MultiIndex alpha,
                          double ell, int degree, std::vector<double>& D,
                          std::vector<double>& Sp);

// Solves the transposed block system [[Q^T, P],[P^T, 0]] (r; w) = (T; S)
// with a pivoted dense factorization plus iterative refinement; returns r and
// discards the multipliers w. Throws if the residual exceeds 1e-9 (bad
// stencil/degree pairing).
std::vector<double> solve_recon_vector(const DenseMatrix& Q, const DenseMatrix& P,
                                       std::span<const double> T,
                                       std::span<const double> S);

// r . g; throws std::length_error on size mismatch.
double evaluate(std::span<const double> r, std::span<const double> g);

// All precomputed vectors for one (sub)stencil, rows aligned with the
// stencil's lexicographic cell order.
struct StencilVectors {
  int count = 0;   // number of cells N
  int degree = 0;  // assigned monomial degree
  std::vector<int> gather;      // position of each cell within the full stencil
  std::vector<double> face;     // [4R][N] point-value vectors, face-point order
  std::vector<double> interior; // [R*R][N] point-value vectors, tensor order
  std::vector<double> deriv;    // [n_alpha][N] derivative vectors

  std::span<const double> face_row(int s) const {
    return {face.data() + static_cast<size_t>(s) * count, static_cast<size_t>(count)};
  }
  std::span<const double> interior_row(int t) const {
    return {interior.data() + static_cast<size_t>(t) * count, static_cast<size_t>(count)};
  }
  std::span<const double> deriv_row(int a) const {
    return {deriv.data() + static_cast<size_t>(a) * count, static_cast<size_t>(count)};
  }
};

struct ReconstructionSet {
  int R = 0;
  KernelConfig kernel;
  StencilGeometry geom;
  QuadratureRule face_rule;           // R-point Gauss-Legendre
  FacePointSet face_points;
  std::vector<Point> interior_points; // R x R tensor points
  std::vector<MultiIndex> alphas;     // all 0 < |alpha| <= R
  std::array<StencilVectors, 6> st;

  int n_face_points() const { return 4 * R; }
  int n_interior_points() const { return R * R; }
  int n_derivs() const { return static_cast<int>(alphas.size()); }
};

// One-time precompute of every reconstruction vector: geometry, degrees,
// point-value vectors for all face and interior quadrature points, and
// derivative vectors for the smoothness indicators. Deterministic;
// vectors related by a square symmetry are exact permutations of each other.
ReconstructionSet precompute(int R, KernelConfig cfg);

// Plain-text debug dump, one vector per line with 17 significant digits.
void dump_recon_vectors(const ReconstructionSet& set, std::ostream& os);

}  // namespace kfvm

#endif
