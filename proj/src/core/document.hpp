#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/fiber.hpp"
#include "core/weights.hpp"

namespace esskel {

inline constexpr const char* kSchemaVersion = "esskel/1";

// The on-disk unit of work: a stratified fiber plus the pluricanonical forms
// and optional named delta assignments that drive skeleton extraction.
// Rationals travel as "p/q" strings; there is no floating-point path.
struct ModelDocument {
  std::string schema_version = kSchemaVersion;
  StratifiedFiber fiber;
  std::vector<PluricanonicalForm> forms;
  std::map<std::string, DeltaAssignment> deltas;
  std::map<std::string, std::string> metadata;
};

// Lenient parse: syntax and shape problems throw Error(parse); semantic
// problems (fiber invariants, unresolved references, duplicate names) come
// back in the report so `validate` can present them.
std::pair<ModelDocument, ValidationReport> parse_model_lenient(const std::string& text);

// Strict parse: throws Error(validation) carrying the formatted report when
// the document is semantically broken.
ModelDocument parse_model(const std::string& text);
ModelDocument parse_model_file(const std::string& path);  // Error(io) on I/O failure

// Canonical serialization: components sorted by id, strata by (|J|, id), all
// maps key-sorted, rationals normalized. parse(serialize(d)) == d.
std::string serialize_model(const ModelDocument& doc);

// Compact canonical encoding used for hashing and equality.
std::string canonical_compact(const ModelDocument& doc);

// Content digest of the canonicalized document ("fnv1a64:" + 16 hex digits).
// Stable across runs and platforms; not cryptographic.
std::string document_digest(const ModelDocument& doc);

bool documents_equal(const ModelDocument& a, const ModelDocument& b);

}  // namespace esskel
