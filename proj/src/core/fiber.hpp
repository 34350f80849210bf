#pragma once

#include <map>
#include <string>
#include <vector>

namespace esskel {

// One irreducible component of the reduced special fiber, together with its
// multiplicity N in the local equation of the uniformizer.
struct Component {
  std::string id;
  std::string name;
  long long multiplicity = 1;
};

// A stratum is a connected component of an intersection of fiber components.
// `components` is the index set J; `parents` maps each j in J (when |J| >= 2)
// to the stratum over J \ {j} that contains this one.
struct Stratum {
  std::string id;
  std::vector<std::string> components;
  std::map<std::string, std::string> parents;
};

// The combinatorial shadow of a degenerate fiber: components with
// multiplicities plus the stratification that glues them.
struct StratifiedFiber {
  std::vector<Component> components;
  std::vector<Stratum> strata;

  const Component* find_component(const std::string& id) const;
  const Stratum* find_stratum(const std::string& id) const;
};

struct Violation {
  std::string kind;               // stable machine-readable tag
  std::vector<std::string> ids;   // offending component/stratum ids
  std::string detail;
};

using ValidationReport = std::vector<Violation>;

// Checks every structural invariant and returns all violations found; an
// empty report means the fiber is coherent. Never throws.
//
// Invariants: positive multiplicities, unique ids, resolvable references,
// exactly one vertex stratum per component, parent maps total with the right
// component sets, and the diamond condition (the two ways of deleting a pair
// of components from a stratum land on the same stratum).
ValidationReport validate_fiber(const StratifiedFiber& fiber);

std::string format_report(const ValidationReport& report);

}  // namespace esskel
