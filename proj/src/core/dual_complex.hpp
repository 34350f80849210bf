#pragma once

#include <string>
#include <vector>

#include "core/fiber.hpp"
#include "core/rational.hpp"

namespace esskel {

// One cell of the dual complex. Cells are simplices with pairwise distinct
// component labels, but distinct cells may share all of their faces (parallel
// cells), so the complex is a Delta-complex rather than a simplicial one.
struct Cell {
  std::string id;               // stratum id
  std::vector<int> components;  // ascending component indices (the set J)
  std::vector<int> facets;      // facets[k] = cell obtained by deleting components[k]

  int dim() const { return static_cast<int>(components.size()) - 1; }
};

// The dual intersection complex of a stratified fiber: one cell per stratum
// of dimension |J| - 1, glued along the parent pointers. Each cell carries
// the exact chart {w in Q^J : w_j >= 0, sum N_j w_j = 1}; the chart data is
// the multiplicity vector, reachable through `multiplicity`.
//
// Components are ordered by id, cells by (dimension, id); every listing and
// report downstream inherits this canonical order.
class DualComplex {
 public:
  // Validates the fiber first and throws Error(validation) carrying the full
  // report if it is incoherent.
  static DualComplex build(const StratifiedFiber& fiber);

  const std::vector<Component>& components() const { return components_; }
  const std::vector<Cell>& cells() const { return cells_; }
  int max_dimension() const { return max_dimension_; }

  const Component& component(int idx) const { return components_[idx]; }
  long long multiplicity(int comp) const { return components_[comp].multiplicity; }

  int component_index(const std::string& id) const;  // throws not_found
  int cell_index(const std::string& stratum_id) const;  // throws not_found
  int vertex_cell(int comp) const { return vertex_cell_[comp]; }

  // Face obtained by deleting one component; `comp` must belong to the cell.
  int facet(int cell, int comp) const;
  // Iterated face over a nonempty ascending subset of the cell's components.
  // Well defined independently of deletion order by the diamond condition.
  int face_over(int cell, const std::vector<int>& keep) const;

  const std::vector<int>& proper_faces(int cell) const { return faces_[cell]; }
  const std::vector<int>& proper_cofaces(int cell) const { return cofaces_[cell]; }
  bool is_face(int a, int b) const;  // a == b or a a proper face of b

 private:
  std::vector<Component> components_;
  std::vector<Cell> cells_;
  std::vector<int> vertex_cell_;           // component -> vertex cell index
  std::vector<std::vector<int>> faces_;    // proper faces, ascending
  std::vector<std::vector<int>> cofaces_;  // proper cofaces, ascending
  std::map<std::string, int> comp_index_;
  std::map<std::string, int> cell_index_;
  int max_dimension_ = 0;
};

// A face-closed set of cells, kept as ascending indices.
struct Subcomplex {
  std::vector<int> cells;

  bool contains(int cell) const;
  bool empty() const { return cells.empty(); }
  bool operator==(const Subcomplex&) const = default;
};

Subcomplex full_subcomplex(const DualComplex& dc);
// Closes `seed` under taking faces.
Subcomplex make_closure(const DualComplex& dc, std::vector<int> seed);
// Throws Error(validation) if `cells` is not face-closed.
Subcomplex checked_subcomplex(const DualComplex& dc, std::vector<int> cells);

// A monomial point in the interior of its carrier cell: weights are aligned
// with the carrier's components, all positive, with sum N_j w_j = 1 exactly.
struct SkeletonPoint {
  int cell;
  std::vector<Rational> weights;
};

// Validates the chart constraint and positivity; throws invalid_params.
SkeletonPoint make_skeleton_point(const DualComplex& dc, int cell,
                                  std::vector<Rational> weights);
// The divisorial point of a component: w = 1/N on its vertex cell.
SkeletonPoint vertex_point(const DualComplex& dc, int comp);

}  // namespace esskel
