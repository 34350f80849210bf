#pragma once

#include <string>

#include "core/document.hpp"

namespace esskel {

// Dispatches one command against a parsed document and returns the report as
// canonical JSON (deterministic: identical inputs give byte-identical bytes).
//
// `request_json` is an object {"command": NAME, ...flags}; see the command
// table in runner.cpp. `issues` is the semantic report from lenient parsing:
// the `validate` command presents it, every other command refuses to run on
// a document with outstanding issues.
std::string run_command(const ModelDocument& doc, const ValidationReport& issues,
                        const std::string& request_json);

// Human-readable rendering of a report produced by run_command.
std::string render_report_text(const std::string& report_json);

}  // namespace esskel
