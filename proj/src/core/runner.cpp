#include "core/runner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "core/blowup.hpp"
#include "core/collapse.hpp"
#include "core/dual_complex.hpp"
#include "core/errors.hpp"
#include "core/topology.hpp"
#include "core/weights.hpp"

namespace esskel {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct Request {
  std::string command;
  std::string of = "essential";
  bool of_given = false;
  std::string form;
  bool form_given = false;
  std::string delta;
  bool delta_given = false;
  std::string target;
  std::string center;
  long long d = 1;
  bool d_given = false;
  long long budget = 1000000;
};

Request parse_request(const std::string& request_json) {
  json req;
  try {
    req = json::parse(request_json);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::invalid_request, std::string("malformed request: ") + e.what());
  }
  if (!req.is_object() || !req.contains("command") || !req["command"].is_string()) {
    throw Error(ErrorCode::invalid_request, "request must be an object with a \"command\" string");
  }
  Request r;
  r.command = req["command"].get<std::string>();

  static const std::map<std::string, std::set<std::string>> allowed = {
      {"validate", {}},
      {"dual-complex", {}},
      {"weights", {"form"}},
      {"ks-skeleton", {"form"}},
      {"essential", {}},
      {"lc-skeleton", {"delta"}},
      {"classify", {"of", "delta"}},
      {"homology", {"of", "delta"}},
      {"sphere-check", {"of", "delta"}},
      {"collapse", {"target", "delta", "budget"}},
      {"blowup", {"center"}},
      {"rescale", {"d", "form"}},
  };
  auto cmd = allowed.find(r.command);
  if (cmd == allowed.end()) {
    throw Error(ErrorCode::invalid_request, "unknown command \"" + r.command + "\"");
  }
  for (auto it = req.begin(); it != req.end(); ++it) {
    if (it.key() == "command") continue;
    if (!cmd->second.count(it.key())) {
      throw Error(ErrorCode::invalid_request,
                  "command \"" + r.command + "\" takes no flag \"" + it.key() + "\"");
    }
  }
  auto get_string = [&](const char* key, std::string* out, bool* flag) {
    if (!req.contains(key)) return;
    if (!req[key].is_string()) {
      throw Error(ErrorCode::invalid_request, std::string("flag \"") + key + "\" must be a string");
    }
    *out = req[key].get<std::string>();
    if (flag) *flag = true;
  };
  auto get_integer = [&](const char* key, long long* out, bool* flag) {
    if (!req.contains(key)) return;
    if (!req[key].is_number_integer()) {
      throw Error(ErrorCode::invalid_request,
                  std::string("flag \"") + key + "\" must be an integer");
    }
    *out = req[key].get<long long>();
    if (flag) *flag = true;
  };
  get_string("of", &r.of, &r.of_given);
  get_string("form", &r.form, &r.form_given);
  get_string("delta", &r.delta, &r.delta_given);
  get_string("target", &r.target, nullptr);
  get_string("center", &r.center, nullptr);
  get_integer("d", &r.d, &r.d_given);
  get_integer("budget", &r.budget, nullptr);
  return r;
}

ordered_json echo_request(const Request& r) {
  ordered_json echo;
  echo["command"] = r.command;
  if (r.of_given) echo["of"] = r.of;
  if (r.form_given) echo["form"] = r.form;
  if (r.delta_given) echo["delta"] = r.delta;
  if (!r.target.empty()) echo["target"] = r.target;
  if (!r.center.empty()) echo["center"] = r.center;
  if (r.d_given) echo["d"] = r.d;
  if (r.command == "collapse") echo["budget"] = r.budget;
  return echo;
}

ordered_json violations_json(const ValidationReport& report) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : report) {
    ordered_json jv;
    jv["kind"] = v.kind;
    jv["ids"] = v.ids;
    jv["detail"] = v.detail;
    arr.push_back(std::move(jv));
  }
  return arr;
}

ordered_json cell_id_list(const DualComplex& dc, const Subcomplex& sub) {
  ordered_json arr = ordered_json::array();
  for (int c : sub.cells) arr.push_back(dc.cells()[c].id);
  return arr;
}

ordered_json cells_by_dimension(const DualComplex& dc, const Subcomplex& sub) {
  std::vector<long long> counts;
  for (int c : sub.cells) {
    int d = dc.cells()[c].dim();
    if (static_cast<int>(counts.size()) <= d) counts.resize(d + 1, 0);
    ++counts[d];
  }
  return ordered_json(counts);
}

ordered_json chain_json(const DualComplex& dc, const std::vector<int>& chain) {
  ordered_json arr = ordered_json::array();
  for (int c : chain) arr.push_back(dc.cells()[c].id);
  return arr;
}

const PluricanonicalForm& find_form(const ModelDocument& doc, const std::string& name) {
  for (const auto& form : doc.forms) {
    if (form.name == name) return form;
  }
  throw Error(ErrorCode::not_found, "document has no form named \"" + name + "\"");
}

std::pair<std::string, const DeltaAssignment*> resolve_delta(const ModelDocument& doc,
                                                             const Request& r) {
  if (r.delta_given) {
    auto it = doc.deltas.find(r.delta);
    if (it == doc.deltas.end()) {
      throw Error(ErrorCode::not_found, "document has no delta assignment named \"" + r.delta + "\"");
    }
    return {it->first, &it->second};
  }
  if (doc.deltas.empty()) {
    throw Error(ErrorCode::not_found, "document carries no delta assignments");
  }
  if (doc.deltas.size() > 1) {
    throw Error(ErrorCode::invalid_request,
                "document has several delta assignments; select one with \"delta\"");
  }
  return {doc.deltas.begin()->first, &doc.deltas.begin()->second};
}

struct SelectedSubcomplex {
  Subcomplex sub;
  ordered_json description;
};

SelectedSubcomplex select_subcomplex(const ModelDocument& doc, const DualComplex& dc,
                                     const Request& r) {
  SelectedSubcomplex sel;
  sel.description["of"] = r.of;
  if (r.of == "full") {
    sel.sub = full_subcomplex(dc);
  } else if (r.of == "essential") {
    sel.sub = essential_skeleton(dc, doc.forms);
  } else if (r.of == "lc") {
    auto [name, delta] = resolve_delta(doc, r);
    sel.description["delta"] = name;
    sel.sub = lc_subcomplex(dc, *delta);
  } else {
    throw Error(ErrorCode::invalid_request,
                "\"of\" must be one of full, essential, lc; got \"" + r.of + "\"");
  }
  return sel;
}

ordered_json classification_json(const DualComplex& dc, const PseudoManifoldReport& report) {
  ordered_json out;
  out["dimension"] = report.dimension;
  out["classification"] = pseudo_manifold_class_name(report.classification);
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : report.witnesses) {
    ordered_json jw;
    jw["kind"] = w.kind;
    ordered_json simplices = ordered_json::array();
    for (const auto& chain : w.simplices) simplices.push_back(chain_json(dc, chain));
    jw["simplices"] = std::move(simplices);
    if (w.incidence) jw["incidence"] = w.incidence;
    witnesses.push_back(std::move(jw));
  }
  out["witnesses"] = std::move(witnesses);
  ordered_json boundary = ordered_json::array();
  for (const auto& chain : report.boundary) boundary.push_back(chain_json(dc, chain));
  out["boundary"] = std::move(boundary);
  return out;
}

ordered_json run_dispatch(const ModelDocument& doc, const ValidationReport& issues,
                          const Request& r) {
  if (r.command == "validate") {
    ordered_json result;
    result["valid"] = issues.empty();
    result["violations"] = violations_json(issues);
    return result;
  }
  if (!issues.empty()) {
    throw Error(ErrorCode::validation, "invalid document:\n" + format_report(issues));
  }
  DualComplex dc = DualComplex::build(doc.fiber);

  if (r.command == "dual-complex") {
    ordered_json result;
    result["max_dimension"] = dc.max_dimension();
    result["cell_count"] = dc.cells().size();
    result["cells_by_dimension"] = cells_by_dimension(dc, full_subcomplex(dc));
    ordered_json cells = ordered_json::array();
    for (const auto& cell : dc.cells()) {
      ordered_json jc;
      jc["id"] = cell.id;
      jc["dimension"] = cell.dim();
      ordered_json comps = ordered_json::array();
      ordered_json mults = ordered_json::array();
      for (int comp : cell.components) {
        comps.push_back(dc.component(comp).id);
        mults.push_back(dc.multiplicity(comp));
      }
      jc["components"] = std::move(comps);
      jc["multiplicities"] = std::move(mults);
      ordered_json faces = ordered_json::object();
      for (size_t k = 0; k < cell.facets.size(); ++k) {
        faces[dc.component(cell.components[k]).id] = dc.cells()[cell.facets[k]].id;
      }
      jc["faces"] = std::move(faces);
      cells.push_back(std::move(jc));
    }
    result["cells"] = std::move(cells);
    return result;
  }

  if (r.command == "weights") {
    ordered_json forms = ordered_json::array();
    for (const auto& form : doc.forms) {
      if (r.form_given && form.name != r.form) continue;
      check_form_total(dc, form);
      ordered_json jf;
      jf["name"] = form.name;
      jf["degree"] = form.degree;
      ordered_json vw = ordered_json::object();
      Rational lambda;
      bool first = true;
      for (const auto& comp : dc.components()) {
        Rational w = vertex_weight(comp, form);
        vw[comp.id] = to_fraction(w);
        if (first || w < lambda) lambda = w;
        first = false;
      }
      jf["vertex_weights"] = std::move(vw);
      jf["lambda"] = to_fraction(lambda);
      forms.push_back(std::move(jf));
    }
    if (r.form_given && forms.empty()) {
      throw Error(ErrorCode::not_found, "document has no form named \"" + r.form + "\"");
    }
    ordered_json result;
    result["forms"] = std::move(forms);
    return result;
  }

  if (r.command == "ks-skeleton") {
    if (!r.form_given) {
      throw Error(ErrorCode::invalid_request, "ks-skeleton requires a \"form\"");
    }
    MinimalityResult m = minimality_locus(dc, find_form(doc, r.form));
    ordered_json result;
    result["form"] = r.form;
    result["lambda"] = to_fraction(m.minimum);
    result["cell_count"] = m.locus.cells.size();
    result["cells_by_dimension"] = cells_by_dimension(dc, m.locus);
    result["cells"] = cell_id_list(dc, m.locus);
    return result;
  }

  if (r.command == "essential") {
    Subcomplex sk = essential_skeleton(dc, doc.forms);
    ordered_json per_form = ordered_json::array();
    for (const auto& form : doc.forms) {
      MinimalityResult m = minimality_locus(dc, form);
      ordered_json jf;
      jf["name"] = form.name;
      jf["lambda"] = to_fraction(m.minimum);
      per_form.push_back(std::move(jf));
    }
    ordered_json result;
    result["forms"] = std::move(per_form);
    result["cell_count"] = sk.cells.size();
    result["cells_by_dimension"] = cells_by_dimension(dc, sk);
    result["cells"] = cell_id_list(dc, sk);
    return result;
  }

  if (r.command == "lc-skeleton") {
    auto [name, delta] = resolve_delta(doc, r);
    Subcomplex sub = lc_subcomplex(dc, *delta);
    ordered_json result;
    result["delta"] = name;
    result["cell_count"] = sub.cells.size();
    result["cells_by_dimension"] = cells_by_dimension(dc, sub);
    result["cells"] = cell_id_list(dc, sub);
    return result;
  }

  if (r.command == "classify") {
    SelectedSubcomplex sel = select_subcomplex(doc, dc, r);
    PseudoManifoldReport report = classify_pseudo_manifold(dc, sel.sub);
    ordered_json result = sel.description;
    ordered_json cls = classification_json(dc, report);
    for (auto& [k, v] : cls.items()) result[k] = std::move(v);
    return result;
  }

  if (r.command == "homology") {
    SelectedSubcomplex sel = select_subcomplex(doc, dc, r);
    SimplicialComplex sc = barycentric_subdivision(dc, sel.sub);
    if (sc.empty()) {
      throw Error(ErrorCode::empty_complex, "cannot compute homology of an empty complex");
    }
    HomologyProfile profile = betti_numbers(sc);
    ordered_json result = sel.description;
    result["dimension"] = sc.dimension();
    result["betti"] = profile.betti;
    result["euler_characteristic"] = sc.euler_characteristic();
    return result;
  }

  if (r.command == "sphere-check") {
    SelectedSubcomplex sel = select_subcomplex(doc, dc, r);
    SimplicialComplex sc = barycentric_subdivision(dc, sel.sub);
    if (sc.empty()) {
      throw Error(ErrorCode::empty_complex, "cannot check an empty complex");
    }
    HomologyProfile profile = betti_numbers(sc);
    ordered_json result = sel.description;
    result["dimension"] = sc.dimension();
    result["betti"] = profile.betti;
    result["q_homology_sphere"] = is_q_homology_sphere(profile, sc.dimension());
    return result;
  }

  if (r.command == "collapse") {
    if (r.target != "essential" && r.target != "lc") {
      throw Error(ErrorCode::invalid_request,
                  "collapse requires \"target\" equal to essential or lc");
    }
    ordered_json result;
    result["target"] = r.target;
    Subcomplex target;
    if (r.target == "essential") {
      target = essential_skeleton(dc, doc.forms);
    } else {
      auto [name, delta] = resolve_delta(doc, r);
      result["delta"] = name;
      target = lc_subcomplex(dc, *delta);
    }
    Subcomplex start = full_subcomplex(dc);
    CollapseSearchResult search =
        find_collapse_sequence(dc, start, target, CollapseOptions{r.budget});
    result["found"] = search.sequence.has_value();
    result["steps_tried"] = search.steps_tried;
    result["budget"] = r.budget;
    result["budget_exhausted"] = search.budget_exhausted;
    if (search.sequence) {
      ordered_json steps = ordered_json::array();
      for (const auto& step : search.sequence->steps) {
        ordered_json js;
        js["free_face"] = dc.cells()[step.free_face].id;
        js["coface"] = dc.cells()[step.coface].id;
        steps.push_back(std::move(js));
      }
      result["steps"] = std::move(steps);
      result["verified"] = verify_collapse_sequence(dc, start, target, *search.sequence).ok;
    }
    return result;
  }

  if (r.command == "blowup") {
    auto eq = r.center.find('=');
    if (r.center.empty() || eq == std::string::npos) {
      throw Error(ErrorCode::invalid_request,
                  "blowup requires \"center\" of the form interior=COMPONENT or stratum=STRATUM");
    }
    std::string kind = r.center.substr(0, eq);
    std::string id = r.center.substr(eq + 1);
    BlowupCenter center;
    if (kind == "interior") {
      center.kind = BlowupCenter::Kind::interior;
    } else if (kind == "stratum") {
      center.kind = BlowupCenter::Kind::point_stratum;
    } else {
      throw Error(ErrorCode::invalid_request,
                  "blowup center kind must be interior or stratum, got \"" + kind + "\"");
    }
    center.id = id;
    BlowupResult blown = blowup_surface_model(doc.fiber, doc.forms, center);
    ModelDocument out;
    out.fiber = std::move(blown.fiber);
    out.forms = std::move(blown.forms);
    out.metadata = doc.metadata;  // deltas are dropped: the new component has no assigned value
    out.metadata["blowup_center"] = r.center;
    out.metadata["blowup_component"] = blown.new_component;
    ordered_json result;
    result["center"] = r.center;
    result["new_component"] = blown.new_component;
    result["document"] = ordered_json::parse(canonical_compact(out));
    return result;
  }

  if (r.command == "rescale") {
    if (!r.d_given) {
      throw Error(ErrorCode::invalid_request, "rescale requires \"d\"");
    }
    ordered_json forms = ordered_json::array();
    for (const auto& form : doc.forms) {
      if (r.form_given && form.name != r.form) continue;
      MinimalityResult m = minimality_locus(dc, form);
      ordered_json jf;
      jf["name"] = form.name;
      jf["lambda"] = to_fraction(m.minimum);
      jf["rescaled_lambda"] = to_fraction(rescale_weight(m.minimum, r.d));
      forms.push_back(std::move(jf));
    }
    if (r.form_given && forms.empty()) {
      throw Error(ErrorCode::not_found, "document has no form named \"" + r.form + "\"");
    }
    ordered_json result;
    result["d"] = r.d;
    result["forms"] = std::move(forms);
    return result;
  }

  throw Error(ErrorCode::invalid_request, "unknown command \"" + r.command + "\"");
}

}  // namespace

std::string run_command(const ModelDocument& doc, const ValidationReport& issues,
                        const std::string& request_json) {
  Request r = parse_request(request_json);
  ordered_json report;
  report["command"] = r.command;
  report["request"] = echo_request(r);
  report["input_digest"] = document_digest(doc);
  report["status"] = "ok";
  report["result"] = run_dispatch(doc, issues, r);
  return report.dump(2) + "\n";
}

namespace {

std::string join_ids(const json& arr) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += " ";
    out += v.get<std::string>();
  }
  return out;
}

std::string chain_text(const json& chain) {
  std::string out = "<";
  out += join_ids(chain);
  out += ">";
  return out;
}

}  // namespace

std::string render_report_text(const std::string& report_json) {
  json report = json::parse(report_json);
  const std::string command = report["command"].get<std::string>();
  const json& result = report["result"];
  std::ostringstream out;
  out << "command: " << command << "\n";
  out << "input: " << report["input_digest"].get<std::string>() << "\n";

  if (command == "validate") {
    out << "valid: " << (result["valid"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& v : result["violations"]) {
      out << "  " << v["kind"].get<std::string>() << ": " << v["detail"].get<std::string>()
          << "\n";
    }
  } else if (command == "dual-complex") {
    out << "max dimension: " << result["max_dimension"] << "\n";
    out << "cells: " << result["cell_count"] << " " << result["cells_by_dimension"].dump()
        << "\n";
    for (const auto& cell : result["cells"]) {
      out << "  " << cell["id"].get<std::string>() << " dim " << cell["dimension"]
          << " on {" << join_ids(cell["components"]) << "}\n";
    }
  } else if (command == "weights" || command == "rescale") {
    for (const auto& form : result["forms"]) {
      out << "form " << form["name"].get<std::string>();
      if (form.contains("degree")) out << " (degree " << form["degree"] << ")";
      out << ": lambda = " << form["lambda"].get<std::string>();
      if (form.contains("rescaled_lambda")) {
        out << ", rescaled = " << form["rescaled_lambda"].get<std::string>();
      }
      out << "\n";
      if (form.contains("vertex_weights")) {
        for (const auto& [comp, w] : form["vertex_weights"].items()) {
          out << "  " << comp << ": " << w.get<std::string>() << "\n";
        }
      }
    }
  } else if (command == "ks-skeleton" || command == "essential" || command == "lc-skeleton") {
    if (result.contains("lambda")) {
      out << "lambda: " << result["lambda"].get<std::string>() << "\n";
    }
    if (result.contains("forms")) {
      for (const auto& form : result["forms"]) {
        out << "lambda(" << form["name"].get<std::string>()
            << "): " << form["lambda"].get<std::string>() << "\n";
      }
    }
    if (result.contains("delta")) {
      out << "delta: " << result["delta"].get<std::string>() << "\n";
    }
    out << "cells (" << result["cell_count"] << "): " << join_ids(result["cells"]) << "\n";
  } else if (command == "classify") {
    out << "of: " << result["of"].get<std::string>() << "\n";
    out << "dimension: " << result["dimension"] << "\n";
    out << "classification: " << result["classification"].get<std::string>() << "\n";
    out << "boundary faces: " << result["boundary"].size() << "\n";
    for (const auto& chain : result["boundary"]) out << "  " << chain_text(chain) << "\n";
    for (const auto& w : result["witnesses"]) {
      out << "witness " << w["kind"].get<std::string>() << ":";
      for (const auto& chain : w["simplices"]) out << " " << chain_text(chain);
      if (w.contains("incidence")) out << " (incidence " << w["incidence"] << ")";
      out << "\n";
    }
  } else if (command == "homology" || command == "sphere-check") {
    out << "of: " << result["of"].get<std::string>() << "\n";
    out << "dimension: " << result["dimension"] << "\n";
    out << "betti: " << json(result["betti"]).dump() << "\n";
    if (result.contains("euler_characteristic")) {
      out << "euler characteristic: " << result["euler_characteristic"] << "\n";
    }
    if (result.contains("q_homology_sphere")) {
      out << "q-homology sphere: " << (result["q_homology_sphere"].get<bool>() ? "yes" : "no")
          << "\n";
    }
  } else if (command == "collapse") {
    out << "target: " << result["target"].get<std::string>() << "\n";
    out << "found: " << (result["found"].get<bool>() ? "yes" : "no") << "\n";
    if (result.contains("steps")) {
      for (const auto& step : result["steps"]) {
        out << "  collapse " << step["free_face"].get<std::string>() << " into "
            << step["coface"].get<std::string>() << "\n";
      }
      out << "verified: " << (result["verified"].get<bool>() ? "yes" : "no") << "\n";
    }
    out << "steps tried: " << result["steps_tried"] << " (budget " << result["budget"]
        << (result["budget_exhausted"].get<bool>() ? ", exhausted" : "") << ")\n";
  } else if (command == "blowup") {
    out << "center: " << result["center"].get<std::string>() << "\n";
    out << "new component: " << result["new_component"].get<std::string>() << "\n";
    out << result["document"].dump(2) << "\n";
  } else {
    out << result.dump(2) << "\n";
  }
  return out.str();
}

}  // namespace esskel
