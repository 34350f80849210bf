#include "core/dual_complex.hpp"

#include <algorithm>
#include <set>

#include "core/errors.hpp"

namespace esskel {

DualComplex DualComplex::build(const StratifiedFiber& fiber) {
  ValidationReport report = validate_fiber(fiber);
  if (!report.empty()) {
    throw Error(ErrorCode::validation, "invalid fiber:\n" + format_report(report));
  }

  DualComplex dc;
  dc.components_ = fiber.components;
  std::sort(dc.components_.begin(), dc.components_.end(),
            [](const Component& a, const Component& b) { return a.id < b.id; });
  for (size_t i = 0; i < dc.components_.size(); ++i) {
    dc.comp_index_[dc.components_[i].id] = static_cast<int>(i);
  }

  std::vector<const Stratum*> strata;
  strata.reserve(fiber.strata.size());
  for (const auto& s : fiber.strata) strata.push_back(&s);
  std::sort(strata.begin(), strata.end(), [](const Stratum* a, const Stratum* b) {
    if (a->components.size() != b->components.size()) {
      return a->components.size() < b->components.size();
    }
    return a->id < b->id;
  });

  dc.cells_.reserve(strata.size());
  for (const Stratum* s : strata) {
    Cell cell;
    cell.id = s->id;
    for (const auto& cid : s->components) {
      cell.components.push_back(dc.comp_index_.at(cid));
    }
    std::sort(cell.components.begin(), cell.components.end());
    dc.cell_index_[cell.id] = static_cast<int>(dc.cells_.size());
    dc.max_dimension_ = std::max(dc.max_dimension_, cell.dim());
    dc.cells_.push_back(std::move(cell));
  }

  dc.vertex_cell_.assign(dc.components_.size(), -1);
  for (size_t i = 0; i < dc.cells_.size(); ++i) {
    Cell& cell = dc.cells_[i];
    const Stratum* s = strata[i];
    if (cell.dim() == 0) {
      dc.vertex_cell_[cell.components.front()] = static_cast<int>(i);
      continue;
    }
    cell.facets.resize(cell.components.size());
    for (size_t k = 0; k < cell.components.size(); ++k) {
      const std::string& cid = dc.components_[cell.components[k]].id;
      cell.facets[k] = dc.cell_index_.at(s->parents.at(cid));
    }
  }

  // Proper faces, computed in cell order: every facet has strictly smaller
  // dimension, so its own face list is already final.
  dc.faces_.resize(dc.cells_.size());
  dc.cofaces_.resize(dc.cells_.size());
  for (size_t i = 0; i < dc.cells_.size(); ++i) {
    std::set<int> acc;
    for (int f : dc.cells_[i].facets) {
      acc.insert(f);
      acc.insert(dc.faces_[f].begin(), dc.faces_[f].end());
    }
    dc.faces_[i].assign(acc.begin(), acc.end());
    for (int f : dc.faces_[i]) dc.cofaces_[f].push_back(static_cast<int>(i));
  }
  return dc;
}

int DualComplex::component_index(const std::string& id) const {
  auto it = comp_index_.find(id);
  if (it == comp_index_.end()) {
    throw Error(ErrorCode::not_found, "unknown component \"" + id + "\"");
  }
  return it->second;
}

int DualComplex::cell_index(const std::string& stratum_id) const {
  auto it = cell_index_.find(stratum_id);
  if (it == cell_index_.end()) {
    throw Error(ErrorCode::not_found, "unknown stratum \"" + stratum_id + "\"");
  }
  return it->second;
}

int DualComplex::facet(int cell, int comp) const {
  const Cell& c = cells_[cell];
  auto it = std::lower_bound(c.components.begin(), c.components.end(), comp);
  if (it == c.components.end() || *it != comp) {
    throw Error(ErrorCode::internal,
                "component is not part of cell \"" + c.id + "\"");
  }
  return c.facets[static_cast<size_t>(it - c.components.begin())];
}

int DualComplex::face_over(int cell, const std::vector<int>& keep) const {
  const Cell& c = cells_[cell];
  int cur = cell;
  for (int comp : c.components) {
    if (!std::binary_search(keep.begin(), keep.end(), comp)) {
      cur = facet(cur, comp);
    }
  }
  if (cells_[cur].components != keep) {
    throw Error(ErrorCode::internal, "face_over: subset is not contained in the cell");
  }
  return cur;
}

bool DualComplex::is_face(int a, int b) const {
  if (a == b) return true;
  const auto& f = faces_[b];
  return std::binary_search(f.begin(), f.end(), a);
}

bool Subcomplex::contains(int cell) const {
  return std::binary_search(cells.begin(), cells.end(), cell);
}

Subcomplex full_subcomplex(const DualComplex& dc) {
  Subcomplex s;
  s.cells.resize(dc.cells().size());
  for (size_t i = 0; i < s.cells.size(); ++i) s.cells[i] = static_cast<int>(i);
  return s;
}

Subcomplex make_closure(const DualComplex& dc, std::vector<int> seed) {
  std::set<int> acc(seed.begin(), seed.end());
  for (int c : seed) {
    const auto& f = dc.proper_faces(c);
    acc.insert(f.begin(), f.end());
  }
  Subcomplex s;
  s.cells.assign(acc.begin(), acc.end());
  return s;
}

Subcomplex checked_subcomplex(const DualComplex& dc, std::vector<int> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  Subcomplex s;
  s.cells = std::move(cells);
  for (int c : s.cells) {
    for (int f : dc.proper_faces(c)) {
      if (!s.contains(f)) {
        throw Error(ErrorCode::validation,
                    "cell set is not face-closed: \"" + dc.cells()[c].id +
                        "\" is present but its face \"" + dc.cells()[f].id + "\" is not");
      }
    }
  }
  return s;
}

SkeletonPoint make_skeleton_point(const DualComplex& dc, int cell,
                                  std::vector<Rational> weights) {
  const Cell& c = dc.cells()[cell];
  if (weights.size() != c.components.size()) {
    throw Error(ErrorCode::invalid_params,
                "point on \"" + c.id + "\": expected " +
                    std::to_string(c.components.size()) + " weights, got " +
                    std::to_string(weights.size()));
  }
  Rational total = 0;
  for (size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] <= 0) {
      throw Error(ErrorCode::invalid_params,
                  "point on \"" + c.id + "\": weight for component \"" +
                      dc.component(c.components[k]).id +
                      "\" must be positive (the carrier must be minimal)");
    }
    total += weights[k] * dc.multiplicity(c.components[k]);
  }
  if (total != 1) {
    throw Error(ErrorCode::invalid_params,
                "point on \"" + c.id + "\": weights violate the chart constraint sum N_j w_j = 1");
  }
  return SkeletonPoint{cell, std::move(weights)};
}

SkeletonPoint vertex_point(const DualComplex& dc, int comp) {
  return make_skeleton_point(dc, dc.vertex_cell(comp),
                             {Rational(1, dc.multiplicity(comp))});
}

}  // namespace esskel
