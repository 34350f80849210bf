#include "core/fiber.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace esskel {

const Component* StratifiedFiber::find_component(const std::string& id) const {
  for (const auto& c : components) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

const Stratum* StratifiedFiber::find_stratum(const std::string& id) const {
  for (const auto& s : strata) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

namespace {

std::vector<std::string> sorted_components(const Stratum& s) {
  std::vector<std::string> v = s.components;
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

ValidationReport validate_fiber(const StratifiedFiber& fiber) {
  ValidationReport report;
  auto add = [&](std::string kind, std::vector<std::string> ids, std::string detail) {
    report.push_back({std::move(kind), std::move(ids), std::move(detail)});
  };

  std::set<std::string> comp_ids;
  for (const auto& c : fiber.components) {
    if (c.id.empty()) add("invalid_id", {c.id}, "component with empty id");
    if (!comp_ids.insert(c.id).second) {
      add("duplicate_component_id", {c.id}, "component id \"" + c.id + "\" occurs more than once");
    }
    if (c.multiplicity < 1) {
      add("component_multiplicity", {c.id},
          "component \"" + c.id + "\" has multiplicity " + std::to_string(c.multiplicity) +
              " (must be >= 1)");
    }
  }

  std::map<std::string, const Stratum*> strat_by_id;
  for (const auto& s : fiber.strata) {
    if (s.id.empty()) add("invalid_id", {s.id}, "stratum with empty id");
    if (!strat_by_id.emplace(s.id, &s).second) {
      add("duplicate_stratum_id", {s.id}, "stratum id \"" + s.id + "\" occurs more than once");
    }
  }

  for (const auto& s : fiber.strata) {
    if (s.components.empty()) {
      add("empty_stratum_components", {s.id}, "stratum \"" + s.id + "\" has no components");
      continue;
    }
    auto sorted = sorted_components(s);
    for (size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i] == sorted[i - 1]) {
        add("duplicate_component_in_stratum", {s.id, sorted[i]},
            "stratum \"" + s.id + "\" lists component \"" + sorted[i] + "\" twice");
      }
    }
    for (const auto& c : s.components) {
      if (!comp_ids.count(c)) {
        add("unknown_component", {s.id, c},
            "stratum \"" + s.id + "\" references unknown component \"" + c + "\"");
      }
    }
  }

  // Exactly one vertex stratum per component.
  std::map<std::string, std::vector<std::string>> vertex_strata;
  for (const auto& s : fiber.strata) {
    if (s.components.size() == 1 && comp_ids.count(s.components.front())) {
      vertex_strata[s.components.front()].push_back(s.id);
    }
  }
  for (const auto& c : fiber.components) {
    auto it = vertex_strata.find(c.id);
    if (it == vertex_strata.end()) {
      add("missing_vertex_stratum", {c.id},
          "component \"" + c.id + "\" has no stratum with components {" + c.id + "}");
    } else if (it->second.size() > 1) {
      auto ids = it->second;
      ids.insert(ids.begin(), c.id);
      add("duplicate_vertex_stratum", ids,
          "component \"" + c.id + "\" has " + std::to_string(it->second.size()) +
              " vertex strata");
    }
  }

  // Parent maps: totality, no stray keys, resolvable, right component sets.
  for (const auto& s : fiber.strata) {
    auto sorted = sorted_components(s);
    std::set<std::string> members(sorted.begin(), sorted.end());
    if (members.size() == 1) {
      if (!s.parents.empty()) {
        add("unexpected_parents", {s.id},
            "vertex stratum \"" + s.id + "\" must not carry parent pointers");
      }
      continue;
    }
    for (const auto& j : members) {
      if (!s.parents.count(j)) {
        add("missing_parent", {s.id, j},
            "stratum \"" + s.id + "\" lacks a parent for component \"" + j + "\"");
      }
    }
    for (const auto& [j, pid] : s.parents) {
      if (!members.count(j)) {
        add("extraneous_parent", {s.id, j},
            "stratum \"" + s.id + "\" has a parent keyed by \"" + j +
                "\" which is not one of its components");
        continue;
      }
      auto pit = strat_by_id.find(pid);
      if (pit == strat_by_id.end()) {
        add("unknown_parent_stratum", {s.id, j, pid},
            "stratum \"" + s.id + "\" parent for \"" + j + "\" references unknown stratum \"" +
                pid + "\"");
        continue;
      }
      std::vector<std::string> expected;
      for (const auto& m : sorted) {
        if (m != j) expected.push_back(m);
      }
      if (sorted_components(*pit->second) != expected) {
        add("parent_component_mismatch", {s.id, j, pid},
            "stratum \"" + s.id + "\" parent for \"" + j + "\" points at \"" + pid +
                "\" whose component set is not the expected one");
      }
    }
  }

  // Diamond condition. Only evaluated along parent pointers that passed the
  // checks above; broken pointers already have their own report entries.
  auto resolve = [&](const Stratum& s, const std::string& j) -> const Stratum* {
    auto it = s.parents.find(j);
    if (it == s.parents.end()) return nullptr;
    auto pit = strat_by_id.find(it->second);
    if (pit == strat_by_id.end()) return nullptr;
    auto sorted = sorted_components(s);
    std::vector<std::string> expected;
    for (const auto& m : sorted) {
      if (m != j) expected.push_back(m);
    }
    if (sorted_components(*pit->second) != expected) return nullptr;
    return pit->second;
  };
  for (const auto& s : fiber.strata) {
    auto sorted = sorted_components(s);
    if (sorted.size() < 3) continue;
    for (size_t a = 0; a < sorted.size(); ++a) {
      for (size_t b = a + 1; b < sorted.size(); ++b) {
        const Stratum* pa = resolve(s, sorted[a]);
        const Stratum* pb = resolve(s, sorted[b]);
        if (!pa || !pb) continue;
        const Stratum* qa = resolve(*pa, sorted[b]);
        const Stratum* qb = resolve(*pb, sorted[a]);
        if (qa && qb && qa != qb) {
          add("diamond_violation", {s.id, sorted[a], sorted[b]},
              "stratum \"" + s.id + "\": deleting \"" + sorted[a] + "\" then \"" + sorted[b] +
                  "\" reaches \"" + qa->id + "\" but the other order reaches \"" + qb->id + "\"");
        }
      }
    }
  }

  return report;
}

std::string format_report(const ValidationReport& report) {
  std::ostringstream out;
  for (size_t i = 0; i < report.size(); ++i) {
    if (i) out << "\n";
    out << report[i].kind << ": " << report[i].detail;
  }
  return out.str();
}

}  // namespace esskel
