#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/dual_complex.hpp"
#include "core/rational.hpp"

namespace esskel {

// An m-pluricanonical form seen through its vertical divisor: a_j is the
// multiplicity of component j in div(omega). Negative values are allowed
// (rational sections, twists by powers of the uniformizer).
struct PluricanonicalForm {
  std::string name;
  long long degree = 1;  // m
  std::map<std::string, long long> vertical_mults;
};

// A divisor supported on the special fiber; coefficients may be zero but an
// entry is required for every component.
struct VerticalDivisor {
  std::map<std::string, long long> coeffs;
};

// Multiplicities of the components in the log pullback of a dlt model's
// reduced fiber. The dlt condition caps every entry at 1; the cells where
// all entries equal 1 form the skeleton of that model.
struct DeltaAssignment {
  std::map<std::string, Rational> mults;
};

struct MinimalityResult {
  Rational minimum;  // the minimal weight lambda
  Subcomplex locus;  // all cells on which the weight is identically lambda
};

// Monomial valuation: sum of w_j * d_j over the carrier cell's components.
// Linear in the divisor. Throws incomplete_divisor if a component of the
// fiber has no entry.
Rational monomial_valuation(const DualComplex& dc, const SkeletonPoint& point,
                            const VerticalDivisor& divisor);

// Weight of the form at a monomial point: sum of w_j (a_j + m), i.e. the
// valuation of div(omega) + m * (reduced fiber). Affine on every cell.
Rational weight_at_point(const DualComplex& dc, const SkeletonPoint& point,
                         const PluricanonicalForm& form);

// Weight at the divisorial point of one component: (a_j + m) / N_j.
Rational vertex_weight(const DualComplex& dc, int comp, const PluricanonicalForm& form);
Rational vertex_weight(const Component& component, const PluricanonicalForm& form);

// The locus where the weight function attains its global minimum. Since the
// weight is affine on each chart, the minimum over a closed cell sits at a
// vertex, so lambda is the least vertex weight and the locus consists of the
// cells all of whose components attain it. Face-closed by construction.
MinimalityResult minimality_locus(const DualComplex& dc, const PluricanonicalForm& form);

// Union of the minimality loci of the given forms. Throws missing_forms on
// an empty list.
Subcomplex essential_skeleton(const DualComplex& dc,
                              const std::vector<PluricanonicalForm>& forms);

// Cells all of whose components have delta = 1; equivalently the locus where
// the valuation of Delta equals the valuation of the reduced fiber. Throws
// dlt_violation if some entry exceeds 1, incomplete_delta if one is missing.
Subcomplex lc_subcomplex(const DualComplex& dc, const DeltaAssignment& delta);

// Weight transformation under a totally ramified degree-d base change:
// wt -> d * wt - d + 1. Requires d >= 1.
Rational rescale_weight(const Rational& wt, long long d);

// Totality check shared by parsing and evaluation; throws incomplete_divisor.
void check_form_total(const DualComplex& dc, const PluricanonicalForm& form);

}  // namespace esskel
