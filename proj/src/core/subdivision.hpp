#pragma once

#include <vector>

#include "core/dual_complex.hpp"

namespace esskel {

// An honest simplicial complex obtained as the order complex of the face
// poset: vertices are cells of the underlying Delta-complex, and a k-simplex
// is a strictly increasing chain of k+1 cells under the face relation.
//
// Chains are stored as ascending cell-index vectors (cell order sorts by
// dimension first, so index order agrees with the poset order within any
// chain); within each dimension simplices are sorted lexicographically.
// Vertex order inside a chain is the canonical orientation; the boundary of
// [c_0, ..., c_k] is the alternating sum of the chains omitting one entry.
struct SimplicialComplex {
  std::vector<std::vector<std::vector<int>>> simplices;

  bool empty() const { return simplices.empty(); }
  int dimension() const { return static_cast<int>(simplices.size()) - 1; }
  long long simplex_count(int k) const;
  long long euler_characteristic() const;
};

// First barycentric subdivision of (the restriction of) the dual complex.
// Realizations are homeomorphic; multiplicities play no role here.
SimplicialComplex barycentric_subdivision(const DualComplex& dc, const Subcomplex& sub);
SimplicialComplex barycentric_subdivision(const DualComplex& dc);

}  // namespace esskel
