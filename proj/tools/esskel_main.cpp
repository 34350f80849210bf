// esskel command-line tool. Everything goes through the shared-library C API;
// this file only parses flags, moves bytes and maps statuses to exit codes.

#include <cstdio>
#include <future>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "esskel.h"

namespace {

using nlohmann::json;

struct Options {
  std::string output = "json";  // json | text
  long long jobs = 1;
  std::vector<std::string> inputs;

  std::optional<std::string> of;
  std::optional<std::string> form;
  std::optional<std::string> delta;
  std::optional<std::string> target;
  std::optional<std::string> center;
  std::optional<long long> d;
  std::optional<long long> budget;

  // corpus parameters
  std::string corpus_name;
  std::optional<long long> n, k, size, twist, tensor;
  std::optional<long long> seed;
  std::optional<std::string> base;
  bool emit_document = false;
};

struct DocHandle {
  esskel_document* doc = nullptr;
  ~DocHandle() { esskel_document_free(doc); }
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { esskel_string_free(s); }
};

int fail(esskel_status status) {
  std::cerr << "esskel: " << esskel_status_name(status) << ": " << esskel_last_error()
            << std::endl;
  return esskel_exit_code(status);
}

std::string read_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

esskel_status load_document(const std::string& input, esskel_document** out) {
  if (input == "-") {
    std::string text = read_stream(std::cin);
    return esskel_document_parse(text.data(), text.size(), out);
  }
  return esskel_document_parse_file(input.c_str(), out);
}

std::string build_request(const std::string& command, const Options& opt) {
  json req;
  req["command"] = command;
  if (opt.of) req["of"] = *opt.of;
  if (opt.form) req["form"] = *opt.form;
  if (opt.delta) req["delta"] = *opt.delta;
  if (opt.target) req["target"] = *opt.target;
  if (opt.center) req["center"] = *opt.center;
  if (opt.d) req["d"] = *opt.d;
  if (opt.budget) req["budget"] = *opt.budget;
  return req.dump();
}

struct JobResult {
  esskel_status status = ESSKEL_OK;
  std::string error;
  std::string output;
  int exit_code = 0;
};

JobResult run_one(const std::string& command, const Options& opt, const std::string& input) {
  JobResult r;
  DocHandle doc;
  r.status = load_document(input, &doc.doc);
  if (r.status != ESSKEL_OK) {
    r.error = esskel_last_error();
    r.exit_code = esskel_exit_code(r.status);
    return r;
  }
  StringHandle report;
  r.status = esskel_run(doc.doc, build_request(command, opt).c_str(), &report.s);
  if (r.status != ESSKEL_OK) {
    r.error = esskel_last_error();
    r.exit_code = esskel_exit_code(r.status);
    return r;
  }
  std::string body = report.s;
  if (command == "validate") {
    // An invalid document is a domain error even though the report succeeded.
    json parsed = json::parse(body);
    if (!parsed["result"]["valid"].get<bool>()) r.exit_code = 1;
  }
  if (command == "blowup" && opt.emit_document) {
    json parsed = json::parse(body);
    r.output = parsed["result"]["document"].dump(2) + "\n";
    return r;
  }
  if (opt.output == "text") {
    StringHandle text;
    r.status = esskel_report_render_text(body.c_str(), &text.s);
    if (r.status != ESSKEL_OK) {
      r.error = esskel_last_error();
      r.exit_code = esskel_exit_code(r.status);
      return r;
    }
    r.output = text.s;
  } else {
    r.output = body;
  }
  return r;
}

int run_corpus(const Options& opt) {
  json params = json::object();
  if (opt.n) params["n"] = *opt.n;
  if (opt.k) params["k"] = *opt.k;
  if (opt.seed) params["seed"] = *opt.seed;
  if (opt.size) params["size"] = *opt.size;
  if (opt.base) params["base"] = *opt.base;
  if (opt.twist) params["twist"] = *opt.twist;
  if (opt.tensor) params["tensor"] = *opt.tensor;
  DocHandle doc;
  esskel_status status = esskel_corpus(opt.corpus_name.c_str(), params.dump().c_str(), &doc.doc);
  if (status != ESSKEL_OK) return fail(status);
  StringHandle text;
  status = esskel_document_serialize(doc.doc, &text.s);
  if (status != ESSKEL_OK) return fail(status);
  std::cout << text.s;
  return 0;
}

int run_command(const std::string& command, const Options& opt) {
  std::vector<JobResult> results(opt.inputs.size());
  if (opt.jobs <= 1 || opt.inputs.size() <= 1) {
    for (size_t i = 0; i < opt.inputs.size(); ++i) {
      results[i] = run_one(command, opt, opt.inputs[i]);
    }
  } else {
    // Batched mode: each job owns its document; results print in input order.
    std::vector<std::future<JobResult>> futures;
    futures.reserve(opt.inputs.size());
    for (const auto& input : opt.inputs) {
      futures.push_back(std::async(std::launch::async,
                                   [&command, &opt, input] { return run_one(command, opt, input); }));
    }
    for (size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
  }
  int exit_code = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    const JobResult& r = results[i];
    if (r.status != ESSKEL_OK) {
      std::cerr << "esskel: " << opt.inputs[i] << ": " << esskel_status_name(r.status) << ": "
                << r.error << std::endl;
    } else {
      std::cout << r.output;
    }
    exit_code = std::max(exit_code, r.exit_code);
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dual complexes, weight functions and essential skeletons of degenerations"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--output", opt.output, "report format: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--jobs", opt.jobs, "process inputs with this many parallel jobs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto add_inputs = [&](CLI::App* cmd) {
    cmd->add_option("inputs", opt.inputs, "model document file(s), or - for stdin")
        ->required()
        ->expected(-1);
  };
  auto add_of = [&](CLI::App* cmd) {
    cmd->add_option("--of", opt.of, "subcomplex to analyze: full, essential or lc");
    cmd->add_option("--delta", opt.delta, "delta assignment name (with --of lc)");
  };

  add_inputs(app.add_subcommand("validate", "check every document invariant"));
  add_inputs(app.add_subcommand("dual-complex", "list the cells of the dual complex"));

  auto* weights = app.add_subcommand("weights", "vertex weight tables per form");
  weights->add_option("--form", opt.form, "only this form");
  add_inputs(weights);

  auto* ks = app.add_subcommand("ks-skeleton", "minimality locus of one form");
  ks->add_option("--form", opt.form, "form name")->required();
  add_inputs(ks);

  add_inputs(app.add_subcommand("essential", "essential skeleton: union of all form loci"));

  auto* lc = app.add_subcommand("lc-skeleton", "cells where the delta assignment equals one");
  lc->add_option("--delta", opt.delta, "delta assignment name");
  add_inputs(lc);

  auto* classify = app.add_subcommand("classify", "pseudo-manifold classification");
  add_of(classify);
  add_inputs(classify);

  auto* homology = app.add_subcommand("homology", "rational Betti numbers");
  add_of(homology);
  add_inputs(homology);

  auto* sphere = app.add_subcommand("sphere-check", "rational homology sphere test");
  add_of(sphere);
  add_inputs(sphere);

  auto* collapse = app.add_subcommand("collapse", "search for an elementary collapse sequence");
  collapse->add_option("--target", opt.target, "collapse down to: essential or lc")->required();
  collapse->add_option("--delta", opt.delta, "delta assignment name (with --target lc)");
  collapse->add_option("--budget", opt.budget, "search budget in attempted steps");
  add_inputs(collapse);

  auto* blowup = app.add_subcommand("blowup", "blow up a surface model");
  blowup->add_option("--center", opt.center, "interior=COMPONENT or stratum=STRATUM")->required();
  blowup->add_flag("--emit-document", opt.emit_document,
                   "print the transformed document instead of a report");
  add_inputs(blowup);

  auto* rescale = app.add_subcommand("rescale", "minimal weights after a degree-d base change");
  rescale->add_option("--d", opt.d, "ramification index")->required();
  rescale->add_option("--form", opt.form, "only this form");
  add_inputs(rescale);

  auto* corpus = app.add_subcommand("corpus", "emit a built-in degeneration document");
  corpus->add_option("name", opt.corpus_name,
                     "kodaira_In | kodaira_I0star | kodaira_Instar | chain | pinched_torus | "
                     "pendant_blowup_of | random")
      ->required();
  corpus->add_option("--n", opt.n, "cycle/chain length for the Kodaira families");
  corpus->add_option("--k", opt.k, "number of components for chain");
  corpus->add_option("--seed", opt.seed, "seed for random");
  corpus->add_option("--size", opt.size, "component count for random");
  corpus->add_option("--base", opt.base, "base entry for pendant_blowup_of");
  corpus->add_option("--twist", opt.twist, "add twist*N_j to every a_j");
  corpus->add_option("--tensor", opt.tensor, "replace (m, a) by (tensor*m, tensor*a)");

  CLI11_PARSE(app, argc, argv);

  CLI::App* sub = app.get_subcommands().front();
  if (sub->get_name() == "corpus") return run_corpus(opt);
  return run_command(sub->get_name(), opt);
}
