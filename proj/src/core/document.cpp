#include "core/document.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace esskel {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::parse, path + ": " + what);
}

const json& member(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(path, std::string("missing required field \"") + key + "\"");
  return *it;
}

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) bad(path, "unknown field \"" + it.key() + "\"");
  }
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) bad(path, "expected a string");
  return v.get<std::string>();
}

long long as_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) bad(path, "expected an integer (floating point is not accepted)");
  return v.get<long long>();
}

Rational as_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return parse_fraction(v.get<std::string>());
    } catch (const Error& e) {
      bad(path, e.what());
    }
  }
  bad(path, "expected \"p/q\" or an integer (floating point is not accepted)");
}

StratifiedFiber parse_fiber(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  reject_unknown(j, path, {"components", "strata"});
  StratifiedFiber fiber;

  const json& comps = member(j, path, "components");
  if (!comps.is_array()) bad(path + ".components", "expected an array");
  for (size_t i = 0; i < comps.size(); ++i) {
    std::string cpath = path + ".components[" + std::to_string(i) + "]";
    const json& c = comps[i];
    if (!c.is_object()) bad(cpath, "expected an object");
    reject_unknown(c, cpath, {"id", "name", "multiplicity"});
    Component comp;
    comp.id = as_string(member(c, cpath, "id"), cpath + ".id");
    comp.name = c.contains("name") ? as_string(c["name"], cpath + ".name") : comp.id;
    comp.multiplicity = as_integer(member(c, cpath, "multiplicity"), cpath + ".multiplicity");
    fiber.components.push_back(std::move(comp));
  }

  const json& strata = member(j, path, "strata");
  if (!strata.is_array()) bad(path + ".strata", "expected an array");
  for (size_t i = 0; i < strata.size(); ++i) {
    std::string spath = path + ".strata[" + std::to_string(i) + "]";
    const json& s = strata[i];
    if (!s.is_object()) bad(spath, "expected an object");
    reject_unknown(s, spath, {"id", "components", "parents"});
    Stratum stratum;
    stratum.id = as_string(member(s, spath, "id"), spath + ".id");
    const json& sc = member(s, spath, "components");
    if (!sc.is_array()) bad(spath + ".components", "expected an array");
    for (const auto& entry : sc) {
      stratum.components.push_back(as_string(entry, spath + ".components[]"));
    }
    std::sort(stratum.components.begin(), stratum.components.end());
    if (s.contains("parents")) {
      const json& p = s["parents"];
      if (!p.is_object()) bad(spath + ".parents", "expected an object");
      for (auto it = p.begin(); it != p.end(); ++it) {
        stratum.parents[it.key()] = as_string(it.value(), spath + ".parents." + it.key());
      }
    }
    fiber.strata.push_back(std::move(stratum));
  }
  return fiber;
}

}  // namespace

std::pair<ModelDocument, ValidationReport> parse_model_lenient(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse, e.what());
  }
  if (!root.is_object()) bad("$", "expected a JSON object");
  reject_unknown(root, "$", {"schema_version", "fiber", "forms", "deltas", "metadata"});

  ModelDocument doc;
  doc.schema_version = as_string(member(root, "$", "schema_version"), "$.schema_version");
  doc.fiber = parse_fiber(member(root, "$", "fiber"), "$.fiber");

  if (root.contains("forms")) {
    const json& forms = root["forms"];
    if (!forms.is_array()) bad("$.forms", "expected an array");
    for (size_t i = 0; i < forms.size(); ++i) {
      std::string fpath = "$.forms[" + std::to_string(i) + "]";
      const json& f = forms[i];
      if (!f.is_object()) bad(fpath, "expected an object");
      reject_unknown(f, fpath, {"name", "degree", "vertical_mults"});
      PluricanonicalForm form;
      form.name = as_string(member(f, fpath, "name"), fpath + ".name");
      form.degree = as_integer(member(f, fpath, "degree"), fpath + ".degree");
      const json& vm = member(f, fpath, "vertical_mults");
      if (!vm.is_object()) bad(fpath + ".vertical_mults", "expected an object");
      for (auto it = vm.begin(); it != vm.end(); ++it) {
        form.vertical_mults[it.key()] =
            as_integer(it.value(), fpath + ".vertical_mults." + it.key());
      }
      doc.forms.push_back(std::move(form));
    }
  }

  if (root.contains("deltas")) {
    const json& deltas = root["deltas"];
    if (!deltas.is_object()) bad("$.deltas", "expected an object");
    for (auto it = deltas.begin(); it != deltas.end(); ++it) {
      std::string dpath = "$.deltas." + it.key();
      if (!it.value().is_object()) bad(dpath, "expected an object");
      DeltaAssignment delta;
      for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
        delta.mults[jt.key()] = as_rational(jt.value(), dpath + "." + jt.key());
      }
      doc.deltas[it.key()] = std::move(delta);
    }
  }

  if (root.contains("metadata")) {
    const json& metadata = root["metadata"];
    if (!metadata.is_object()) bad("$.metadata", "expected an object");
    for (auto it = metadata.begin(); it != metadata.end(); ++it) {
      const json& v = it.value();
      std::string mpath = "$.metadata." + it.key();
      if (v.is_string()) {
        doc.metadata[it.key()] = v.get<std::string>();
      } else if (v.is_number_integer()) {
        doc.metadata[it.key()] = std::to_string(v.get<long long>());
      } else if (v.is_boolean()) {
        doc.metadata[it.key()] = v.get<bool>() ? "true" : "false";
      } else {
        bad(mpath, "expected a string, integer or boolean");
      }
    }
  }

  // Semantic layer: fiber invariants plus document-level cross references.
  ValidationReport report = validate_fiber(doc.fiber);
  auto add = [&](std::string kind, std::vector<std::string> ids, std::string detail) {
    report.push_back({std::move(kind), std::move(ids), std::move(detail)});
  };
  if (doc.schema_version != kSchemaVersion) {
    add("unknown_schema_version", {doc.schema_version},
        "schema_version \"" + doc.schema_version + "\" is not recognized (expected \"" +
            kSchemaVersion + "\")");
  }
  std::set<std::string> comp_ids;
  for (const auto& c : doc.fiber.components) comp_ids.insert(c.id);
  std::set<std::string> form_names;
  for (const auto& form : doc.forms) {
    if (form.name.empty()) add("empty_form_name", {}, "form with empty name");
    if (!form_names.insert(form.name).second) {
      add("duplicate_form_name", {form.name}, "form name \"" + form.name + "\" occurs twice");
    }
    if (form.degree < 1) {
      add("form_degree", {form.name},
          "form \"" + form.name + "\" has degree " + std::to_string(form.degree) +
              " (must be >= 1)");
    }
    for (const auto& [cid, a] : form.vertical_mults) {
      (void)a;
      if (!comp_ids.count(cid)) {
        add("form_unknown_component", {form.name, cid},
            "form \"" + form.name + "\" references unknown component \"" + cid + "\"");
      }
    }
    for (const auto& cid : comp_ids) {
      if (!form.vertical_mults.count(cid)) {
        add("form_incomplete", {form.name, cid},
            "form \"" + form.name + "\" has no entry for component \"" + cid + "\"");
      }
    }
  }
  for (const auto& [dname, delta] : doc.deltas) {
    for (const auto& [cid, v] : delta.mults) {
      (void)v;
      if (!comp_ids.count(cid)) {
        add("delta_unknown_component", {dname, cid},
            "delta \"" + dname + "\" references unknown component \"" + cid + "\"");
      }
    }
  }
  return {std::move(doc), std::move(report)};
}

ModelDocument parse_model(const std::string& text) {
  auto [doc, report] = parse_model_lenient(text);
  if (!report.empty()) {
    throw Error(ErrorCode::validation, "invalid document:\n" + format_report(report));
  }
  return doc;
}

ModelDocument parse_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::io, "cannot open \"" + path + "\" for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

namespace {

ordered_json to_canonical_json(const ModelDocument& doc) {
  ordered_json out;
  out["schema_version"] = doc.schema_version;

  ordered_json fiber;
  std::vector<const Component*> comps;
  for (const auto& c : doc.fiber.components) comps.push_back(&c);
  std::sort(comps.begin(), comps.end(),
            [](const Component* a, const Component* b) { return a->id < b->id; });
  fiber["components"] = ordered_json::array();
  for (const Component* c : comps) {
    ordered_json jc;
    jc["id"] = c->id;
    jc["name"] = c->name;
    jc["multiplicity"] = c->multiplicity;
    fiber["components"].push_back(std::move(jc));
  }
  std::vector<const Stratum*> strata;
  for (const auto& s : doc.fiber.strata) strata.push_back(&s);
  std::sort(strata.begin(), strata.end(), [](const Stratum* a, const Stratum* b) {
    if (a->components.size() != b->components.size()) {
      return a->components.size() < b->components.size();
    }
    return a->id < b->id;
  });
  fiber["strata"] = ordered_json::array();
  for (const Stratum* s : strata) {
    ordered_json js;
    js["id"] = s->id;
    std::vector<std::string> sc = s->components;
    std::sort(sc.begin(), sc.end());
    js["components"] = sc;
    if (!s->parents.empty()) {
      ordered_json parents;
      for (const auto& [k, v] : s->parents) parents[k] = v;  // std::map is key-sorted
      js["parents"] = std::move(parents);
    }
    fiber["strata"].push_back(std::move(js));
  }
  out["fiber"] = std::move(fiber);

  std::vector<const PluricanonicalForm*> forms;
  for (const auto& f : doc.forms) forms.push_back(&f);
  std::sort(forms.begin(), forms.end(),
            [](const PluricanonicalForm* a, const PluricanonicalForm* b) {
              return a->name < b->name;
            });
  out["forms"] = ordered_json::array();
  for (const PluricanonicalForm* f : forms) {
    ordered_json jf;
    jf["name"] = f->name;
    jf["degree"] = f->degree;
    ordered_json vm;
    for (const auto& [k, v] : f->vertical_mults) vm[k] = v;
    jf["vertical_mults"] = std::move(vm);
    out["forms"].push_back(std::move(jf));
  }

  ordered_json deltas = ordered_json::object();
  for (const auto& [name, delta] : doc.deltas) {
    ordered_json jd;
    for (const auto& [k, v] : delta.mults) jd[k] = to_fraction(v);
    deltas[name] = std::move(jd);
  }
  out["deltas"] = std::move(deltas);

  ordered_json metadata = ordered_json::object();
  for (const auto& [k, v] : doc.metadata) metadata[k] = v;
  out["metadata"] = std::move(metadata);
  return out;
}

}  // namespace

std::string serialize_model(const ModelDocument& doc) {
  return to_canonical_json(doc).dump(2) + "\n";
}

std::string canonical_compact(const ModelDocument& doc) {
  return to_canonical_json(doc).dump();
}

std::string document_digest(const ModelDocument& doc) {
  const std::string bytes = canonical_compact(doc);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string digest = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) {
    digest.push_back(hex[(h >> shift) & 0xf]);
  }
  return digest;
}

bool documents_equal(const ModelDocument& a, const ModelDocument& b) {
  return canonical_compact(a) == canonical_compact(b);
}

}  // namespace esskel
