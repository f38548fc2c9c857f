#ifndef KFVM_MONOMIALS_HPP_
#define KFVM_MONOMIALS_HPP_

#include <cmath>
#include <cstdint>
#include <vector>

namespace kfvm {

// Bivariate multi-index (a,b) representing x^a y^b.
struct MultiIndex {
  int a = 0;
  int b = 0;
  int order() const { return a + b; }
  bool operator==(const MultiIndex&) const = default;
};

// Monomial basis of total degree <= p in graded lexicographic order:
// (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ... Fixed project-wide so
// reconstruction vectors are reproducible.
inline std::vector<MultiIndex> graded_monomials(int p) {
  std::vector<MultiIndex> out;
  out.reserve((p + 1) * (p + 2) / 2);
  for (int d = 0; d <= p; ++d)
    for (int k = 0; k <= d; ++k) out.push_back({d - k, k});
  return out;
}

inline int poly_space_dim(int p) { return (p + 1) * (p + 2) / 2; }

// Derivative multi-indices 0 < |alpha| <= p, graded order.
inline std::vector<MultiIndex> derivative_indices(int p) {
  std::vector<MultiIndex> out;
  for (int d = 1; d <= p; ++d)
    for (int k = 0; k <= d; ++k) out.push_back({d - k, k});
  return out;
}

// Exact average of t^k over the unit interval centered at c.
inline double monomial_avg_1d(double c, int k) {
  return (std::pow(c + 0.5, k + 1) - std::pow(c - 0.5, k + 1)) / (k + 1);
}

// Exact average of x^a y^b over the unit cell centered at (cx, cy).
inline double monomial_avg_cell(double cx, double cy, MultiIndex m) {
  return monomial_avg_1d(cx, m.a) * monomial_avg_1d(cy, m.b);
}

inline double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace kfvm

#endif
