#pragma once

#include <string>
#include <vector>

#include "core/fiber.hpp"
#include "core/weights.hpp"

namespace esskel {

// Blow-up center on a relative surface model: either a point in the interior
// of one component, or the point stratum where two components meet (an edge
// of the dual complex).
struct BlowupCenter {
  enum class Kind { interior, point_stratum };
  Kind kind = Kind::interior;
  std::string id;  // component id for interior, stratum id for point_stratum
};

struct BlowupResult {
  StratifiedFiber fiber;
  std::vector<PluricanonicalForm> forms;
  std::string new_component;
};

// Standard discrepancy bookkeeping for blowing up a point of a surface model.
//
// Interior of component c: the exceptional component E gets N_E = N_c and,
// per form of degree m, a_E = a_c + m; a pendant edge {c, E} is added.
// Point stratum e = {i, j}: E gets N_E = N_i + N_j and a_E = a_i + a_j + m;
// the edge e is replaced by {i, E} and {j, E}.
//
// Requires max |J| = 2 (unsupported_dimension otherwise), a valid fiber, and
// total forms. Unknown center ids raise not_found; pointing the point-stratum
// case at a vertex raises invalid_params.
BlowupResult blowup_surface_model(const StratifiedFiber& fiber,
                                  const std::vector<PluricanonicalForm>& forms,
                                  const BlowupCenter& center);

}  // namespace esskel
