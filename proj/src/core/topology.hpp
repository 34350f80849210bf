#pragma once

#include <string>
#include <vector>

#include "core/subdivision.hpp"

namespace esskel {

enum class PseudoManifoldClass {
  closed,
  with_boundary,
  not_pseudo_manifold,
};

const char* pseudo_manifold_class_name(PseudoManifoldClass c);

// A witness for a failed condition. Kinds:
//   "non_homogeneous_simplex"  simplex not a face of any top simplex
//   "branching_face"           (n-1)-simplex in >= 3 top simplices (incidence set)
//   "disconnected_top_pair"    two top simplices in distinct strong components
struct PseudoManifoldWitness {
  std::string kind;
  std::vector<std::vector<int>> simplices;  // chains of cell indices
  int incidence = 0;
};

struct PseudoManifoldReport {
  int dimension = 0;
  PseudoManifoldClass classification = PseudoManifoldClass::not_pseudo_manifold;
  std::vector<PseudoManifoldWitness> witnesses;
  std::vector<std::vector<int>> boundary;  // (n-1)-simplices with incidence 1
};

// Pseudo-manifold test on a triangulation with n = max simplex dimension:
// (1) every simplex is a face of an n-simplex, (2) every (n-1)-simplex is a
// face of exactly one or two n-simplices, (3) the graph on n-simplices joined
// through shared (n-1)-simplices is connected. Closed when condition (2)
// holds with "exactly two" throughout. All three conditions are evaluated
// even after one fails. For n = 0 the conditions are vacuous apart from
// strong connectedness, so a single point classifies as closed.
PseudoManifoldReport classify_pseudo_manifold(const SimplicialComplex& sc);

// Convenience overloads: triangulate first via barycentric subdivision, as
// parallel cells would otherwise break simpliciality. Throw empty_complex.
PseudoManifoldReport classify_pseudo_manifold(const DualComplex& dc, const Subcomplex& sub);
PseudoManifoldReport classify_pseudo_manifold(const DualComplex& dc);

struct HomologyProfile {
  std::vector<long long> betti;  // b_0 ... b_n over the rationals
};

// Rational Betti numbers from exact ranks of the simplicial boundary maps
// (fraction-free integer elimination; no floating point).
HomologyProfile betti_numbers(const SimplicialComplex& sc);
HomologyProfile betti_numbers(const DualComplex& dc, const Subcomplex& sub);
HomologyProfile betti_numbers(const DualComplex& dc);

// b_0 = 1, b_n = 1 and everything strictly between zero. Profiles shorter
// than n+1 are padded with zeros.
bool is_q_homology_sphere(const HomologyProfile& profile, int n);

// Exact rank of an integer matrix, exposed for cross-checking.
long long integer_matrix_rank(std::vector<std::vector<BigInt>> m);

}  // namespace esskel
