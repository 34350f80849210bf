#include "core/weights.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace esskel {

namespace {

void check_total(const DualComplex& dc, const std::map<std::string, long long>& entries,
                 const std::string& what, ErrorCode code) {
  for (const auto& c : dc.components()) {
    if (!entries.count(c.id)) {
      throw Error(code, what + " has no entry for component \"" + c.id + "\"");
    }
  }
}

}  // namespace

void check_form_total(const DualComplex& dc, const PluricanonicalForm& form) {
  check_total(dc, form.vertical_mults, "form \"" + form.name + "\"",
              ErrorCode::incomplete_divisor);
}

Rational monomial_valuation(const DualComplex& dc, const SkeletonPoint& point,
                            const VerticalDivisor& divisor) {
  check_total(dc, divisor.coeffs, "divisor", ErrorCode::incomplete_divisor);
  const Cell& cell = dc.cells()[point.cell];
  Rational value = 0;
  for (size_t k = 0; k < cell.components.size(); ++k) {
    value += point.weights[k] * divisor.coeffs.at(dc.component(cell.components[k]).id);
  }
  return value;
}

Rational weight_at_point(const DualComplex& dc, const SkeletonPoint& point,
                         const PluricanonicalForm& form) {
  check_form_total(dc, form);
  const Cell& cell = dc.cells()[point.cell];
  Rational value = 0;
  for (size_t k = 0; k < cell.components.size(); ++k) {
    long long a = form.vertical_mults.at(dc.component(cell.components[k]).id);
    value += point.weights[k] * (a + form.degree);
  }
  return value;
}

Rational vertex_weight(const Component& component, const PluricanonicalForm& form) {
  auto it = form.vertical_mults.find(component.id);
  if (it == form.vertical_mults.end()) {
    throw Error(ErrorCode::incomplete_divisor,
                "form \"" + form.name + "\" has no entry for component \"" +
                    component.id + "\"");
  }
  return Rational(it->second + form.degree, component.multiplicity);
}

Rational vertex_weight(const DualComplex& dc, int comp, const PluricanonicalForm& form) {
  return vertex_weight(dc.component(comp), form);
}

MinimalityResult minimality_locus(const DualComplex& dc, const PluricanonicalForm& form) {
  check_form_total(dc, form);
  std::vector<Rational> vw(dc.components().size());
  for (size_t j = 0; j < vw.size(); ++j) {
    vw[j] = vertex_weight(dc, static_cast<int>(j), form);
  }
  Rational lambda = *std::min_element(vw.begin(), vw.end());

  std::vector<int> cells;
  for (size_t i = 0; i < dc.cells().size(); ++i) {
    const Cell& cell = dc.cells()[i];
    bool all_minimal = true;
    for (int comp : cell.components) {
      if (vw[comp] != lambda) {
        all_minimal = false;
        break;
      }
    }
    if (all_minimal) cells.push_back(static_cast<int>(i));
  }
  // A face keeps a subset of its cell's components, so the locus is closed
  // under taking faces; checked_subcomplex asserts that.
  return MinimalityResult{lambda, checked_subcomplex(dc, std::move(cells))};
}

Subcomplex essential_skeleton(const DualComplex& dc,
                              const std::vector<PluricanonicalForm>& forms) {
  if (forms.empty()) {
    throw Error(ErrorCode::missing_forms,
                "essential skeleton requires at least one pluricanonical form");
  }
  std::vector<int> acc;
  for (const auto& form : forms) {
    MinimalityResult r = minimality_locus(dc, form);
    acc.insert(acc.end(), r.locus.cells.begin(), r.locus.cells.end());
  }
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  return checked_subcomplex(dc, std::move(acc));
}

Subcomplex lc_subcomplex(const DualComplex& dc, const DeltaAssignment& delta) {
  for (const auto& [id, value] : delta.mults) {
    dc.component_index(id);  // reject entries for unknown components
    if (value > 1) {
      throw Error(ErrorCode::dlt_violation,
                  "delta multiplicity for component \"" + id + "\" is " +
                      to_fraction(value) + " > 1, which violates the dlt bound");
    }
  }
  std::vector<char> is_lc(dc.components().size(), 0);
  for (size_t j = 0; j < dc.components().size(); ++j) {
    auto it = delta.mults.find(dc.component(static_cast<int>(j)).id);
    if (it == delta.mults.end()) {
      throw Error(ErrorCode::incomplete_delta,
                  "delta assignment has no entry for component \"" +
                      dc.component(static_cast<int>(j)).id + "\"");
    }
    is_lc[j] = it->second == 1 ? 1 : 0;
  }
  std::vector<int> cells;
  for (size_t i = 0; i < dc.cells().size(); ++i) {
    const Cell& cell = dc.cells()[i];
    bool all_lc = true;
    for (int comp : cell.components) {
      if (!is_lc[comp]) {
        all_lc = false;
        break;
      }
    }
    if (all_lc) cells.push_back(static_cast<int>(i));
  }
  return checked_subcomplex(dc, std::move(cells));
}

Rational rescale_weight(const Rational& wt, long long d) {
  if (d < 1) {
    throw Error(ErrorCode::invalid_params,
                "ramification index must be >= 1, got " + std::to_string(d));
  }
  return wt * d - d + 1;
}

}  // namespace esskel
