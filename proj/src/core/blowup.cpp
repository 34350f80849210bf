#include "core/blowup.hpp"

#include <algorithm>
#include <set>

#include "core/errors.hpp"

namespace esskel {

namespace {

std::string fresh_id(const std::set<std::string>& taken, const std::string& base) {
  if (!taken.count(base)) return base;
  for (int i = 2;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!taken.count(candidate)) return candidate;
  }
}

const Stratum& vertex_stratum_of(const StratifiedFiber& fiber, const std::string& comp) {
  for (const auto& s : fiber.strata) {
    if (s.components.size() == 1 && s.components.front() == comp) return s;
  }
  throw Error(ErrorCode::internal, "no vertex stratum for component \"" + comp + "\"");
}

}  // namespace

BlowupResult blowup_surface_model(const StratifiedFiber& fiber,
                                  const std::vector<PluricanonicalForm>& forms,
                                  const BlowupCenter& center) {
  ValidationReport report = validate_fiber(fiber);
  if (!report.empty()) {
    throw Error(ErrorCode::validation, "invalid fiber:\n" + format_report(report));
  }
  for (const auto& s : fiber.strata) {
    if (s.components.size() > 2) {
      throw Error(ErrorCode::unsupported_dimension,
                  "blow-up supports relative surface models only, but stratum \"" + s.id +
                      "\" has dimension " + std::to_string(s.components.size() - 1));
    }
  }
  for (const auto& form : forms) {
    for (const auto& c : fiber.components) {
      if (!form.vertical_mults.count(c.id)) {
        throw Error(ErrorCode::incomplete_divisor,
                    "form \"" + form.name + "\" has no entry for component \"" + c.id + "\"");
      }
    }
  }

  std::set<std::string> comp_ids;
  for (const auto& c : fiber.components) comp_ids.insert(c.id);
  std::set<std::string> stratum_ids;
  for (const auto& s : fiber.strata) stratum_ids.insert(s.id);

  BlowupResult result;
  result.fiber = fiber;
  result.forms = forms;
  const std::string e_id = fresh_id(comp_ids, "E");
  result.new_component = e_id;
  const std::string ve_id = fresh_id(stratum_ids, "v_" + e_id);

  if (center.kind == BlowupCenter::Kind::interior) {
    const Component* c = fiber.find_component(center.id);
    if (!c) {
      throw Error(ErrorCode::not_found, "unknown component \"" + center.id + "\"");
    }
    result.fiber.components.push_back({e_id, e_id, c->multiplicity});
    result.fiber.strata.push_back({ve_id, {e_id}, {}});
    const std::string edge_id = fresh_id(stratum_ids, "e_" + c->id + "_" + e_id);
    result.fiber.strata.push_back(
        {edge_id, {c->id, e_id}, {{c->id, ve_id}, {e_id, vertex_stratum_of(fiber, c->id).id}}});
    for (auto& form : result.forms) {
      form.vertical_mults[e_id] = form.vertical_mults.at(c->id) + form.degree;
    }
  } else {
    const Stratum* e = fiber.find_stratum(center.id);
    if (!e) {
      throw Error(ErrorCode::not_found, "unknown stratum \"" + center.id + "\"");
    }
    if (e->components.size() != 2) {
      throw Error(ErrorCode::invalid_params,
                  "stratum \"" + center.id + "\" is not a point stratum of a surface model");
    }
    const Component* ci = fiber.find_component(e->components[0]);
    const Component* cj = fiber.find_component(e->components[1]);
    result.fiber.components.push_back({e_id, e_id, ci->multiplicity + cj->multiplicity});
    result.fiber.strata.push_back({ve_id, {e_id}, {}});
    // Replace {i, j} by {i, E} and {j, E}.
    auto& strata = result.fiber.strata;
    strata.erase(std::find_if(strata.begin(), strata.end(),
                              [&](const Stratum& s) { return s.id == e->id; }));
    for (const Component* c : {ci, cj}) {
      const std::string edge_id = fresh_id(stratum_ids, "e_" + c->id + "_" + e_id);
      stratum_ids.insert(edge_id);
      strata.push_back(
          {edge_id, {c->id, e_id}, {{c->id, ve_id}, {e_id, vertex_stratum_of(fiber, c->id).id}}});
    }
    for (auto& form : result.forms) {
      form.vertical_mults[e_id] = form.vertical_mults.at(ci->id) +
                                  form.vertical_mults.at(cj->id) + form.degree;
    }
  }
  return result;
}

}  // namespace esskel
