#include "esskel.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "core/corpus.hpp"
#include "core/document.hpp"
#include "core/errors.hpp"
#include "core/runner.hpp"

struct esskel_document {
  esskel::ModelDocument doc;
  esskel::ValidationReport issues;
};

namespace {

thread_local std::string g_last_error;

esskel_status status_of(esskel::ErrorCode code) {
  using esskel::ErrorCode;
  switch (code) {
    case ErrorCode::io: return ESSKEL_E_IO;
    case ErrorCode::parse: return ESSKEL_E_PARSE;
    case ErrorCode::validation: return ESSKEL_E_VALIDATION;
    case ErrorCode::not_found: return ESSKEL_E_NOT_FOUND;
    case ErrorCode::invalid_params: return ESSKEL_E_INVALID_PARAMS;
    case ErrorCode::invalid_request: return ESSKEL_E_INVALID_REQUEST;
    case ErrorCode::missing_forms: return ESSKEL_E_MISSING_FORMS;
    case ErrorCode::incomplete_divisor: return ESSKEL_E_INCOMPLETE_DIVISOR;
    case ErrorCode::incomplete_delta: return ESSKEL_E_INCOMPLETE_DELTA;
    case ErrorCode::dlt_violation: return ESSKEL_E_DLT_VIOLATION;
    case ErrorCode::unsupported_dimension: return ESSKEL_E_UNSUPPORTED_DIMENSION;
    case ErrorCode::empty_complex: return ESSKEL_E_EMPTY_COMPLEX;
    case ErrorCode::containment: return ESSKEL_E_CONTAINMENT;
    case ErrorCode::internal: return ESSKEL_E_INTERNAL;
  }
  return ESSKEL_E_INTERNAL;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
esskel_status guarded(Fn&& fn) {
  try {
    fn();
    return ESSKEL_OK;
  } catch (const esskel::Error& e) {
    g_last_error = e.what();
    return status_of(e.code);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ESSKEL_E_INTERNAL;
  }
}

esskel::CorpusParams parse_corpus_params(const char* params_json) {
  esskel::CorpusParams params;
  if (!params_json || !*params_json) return params;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(params_json);
  } catch (const nlohmann::json::parse_error& e) {
    throw esskel::Error(esskel::ErrorCode::invalid_params,
                        std::string("malformed corpus params: ") + e.what());
  }
  if (!j.is_object()) {
    throw esskel::Error(esskel::ErrorCode::invalid_params, "corpus params must be an object");
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const auto& v = it.value();
    auto want_integer = [&]() -> long long {
      if (!v.is_number_integer()) {
        throw esskel::Error(esskel::ErrorCode::invalid_params,
                            "corpus param \"" + key + "\" must be an integer");
      }
      return v.get<long long>();
    };
    if (key == "n") {
      params.n = want_integer();
    } else if (key == "k") {
      params.k = want_integer();
    } else if (key == "seed") {
      params.seed = static_cast<std::uint64_t>(want_integer());
    } else if (key == "size") {
      params.size = want_integer();
    } else if (key == "twist") {
      params.twist = want_integer();
    } else if (key == "tensor") {
      params.tensor = want_integer();
    } else if (key == "base") {
      if (!v.is_string()) {
        throw esskel::Error(esskel::ErrorCode::invalid_params,
                            "corpus param \"base\" must be a string");
      }
      params.base = v.get<std::string>();
    } else {
      throw esskel::Error(esskel::ErrorCode::invalid_params,
                          "unknown corpus param \"" + key + "\"");
    }
  }
  return params;
}

}  // namespace

extern "C" {

const char* esskel_version(void) { return "0.1.0"; }

const char* esskel_status_name(esskel_status status) {
  switch (status) {
    case ESSKEL_OK: return "ok";
    case ESSKEL_E_IO: return "io_error";
    case ESSKEL_E_PARSE: return "parse_error";
    case ESSKEL_E_VALIDATION: return "validation_error";
    case ESSKEL_E_NOT_FOUND: return "not_found";
    case ESSKEL_E_INVALID_PARAMS: return "invalid_params";
    case ESSKEL_E_INVALID_REQUEST: return "invalid_request";
    case ESSKEL_E_MISSING_FORMS: return "missing_forms";
    case ESSKEL_E_INCOMPLETE_DIVISOR: return "incomplete_divisor";
    case ESSKEL_E_INCOMPLETE_DELTA: return "incomplete_delta";
    case ESSKEL_E_DLT_VIOLATION: return "dlt_violation";
    case ESSKEL_E_UNSUPPORTED_DIMENSION: return "unsupported_dimension";
    case ESSKEL_E_EMPTY_COMPLEX: return "empty_complex";
    case ESSKEL_E_CONTAINMENT: return "containment_error";
    case ESSKEL_E_INTERNAL: return "internal_error";
  }
  return "unknown";
}

int esskel_exit_code(esskel_status status) {
  switch (status) {
    case ESSKEL_OK: return 0;
    case ESSKEL_E_IO:
    case ESSKEL_E_PARSE:
      return 2;
    default:
      return 1;
  }
}

const char* esskel_last_error(void) { return g_last_error.c_str(); }

esskel_status esskel_document_parse(const char* bytes, size_t len, esskel_document** out) {
  return guarded([&] {
    if (!bytes || !out) {
      throw esskel::Error(esskel::ErrorCode::invalid_params, "NULL argument");
    }
    auto [doc, issues] = esskel::parse_model_lenient(std::string(bytes, len));
    *out = new esskel_document{std::move(doc), std::move(issues)};
  });
}

esskel_status esskel_document_parse_file(const char* path, esskel_document** out) {
  return guarded([&] {
    if (!path || !out) {
      throw esskel::Error(esskel::ErrorCode::invalid_params, "NULL argument");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw esskel::Error(esskel::ErrorCode::io, "cannot open \"" + std::string(path) +
                                                     "\" for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    auto [doc, issues] = esskel::parse_model_lenient(buffer.str());
    *out = new esskel_document{std::move(doc), std::move(issues)};
  });
}

esskel_status esskel_corpus(const char* name, const char* params_json, esskel_document** out) {
  return guarded([&] {
    if (!name || !out) {
      throw esskel::Error(esskel::ErrorCode::invalid_params, "NULL argument");
    }
    esskel::ModelDocument doc = esskel::corpus(name, parse_corpus_params(params_json));
    *out = new esskel_document{std::move(doc), {}};
  });
}

esskel_status esskel_document_serialize(const esskel_document* doc, char** json_out) {
  return guarded([&] {
    if (!doc || !json_out) {
      throw esskel::Error(esskel::ErrorCode::invalid_params, "NULL argument");
    }
    *json_out = copy_string(esskel::serialize_model(doc->doc));
  });
}

esskel_status esskel_document_digest(const esskel_document* doc, char** digest_out) {
  return guarded([&] {
    if (!doc || !digest_out) {
      throw esskel::Error(esskel::ErrorCode::invalid_params, "NULL argument");
    }
    *digest_out = copy_string(esskel::document_digest(doc->doc));
  });
}

esskel_status esskel_run(const esskel_document* doc, const char* request_json,
                         char** report_json_out) {
  return guarded([&] {
    if (!doc || !request_json || !report_json_out) {
      throw esskel::Error(esskel::ErrorCode::invalid_params, "NULL argument");
    }
    *report_json_out = copy_string(esskel::run_command(doc->doc, doc->issues, request_json));
  });
}

esskel_status esskel_report_render_text(const char* report_json, char** text_out) {
  return guarded([&] {
    if (!report_json || !text_out) {
      throw esskel::Error(esskel::ErrorCode::invalid_params, "NULL argument");
    }
    try {
      *text_out = copy_string(esskel::render_report_text(report_json));
    } catch (const nlohmann::json::exception& e) {
      throw esskel::Error(esskel::ErrorCode::invalid_request,
                          std::string("not a report: ") + e.what());
    }
  });
}

void esskel_document_free(esskel_document* doc) { delete doc; }

void esskel_string_free(char* s) { std::free(s); }

}  // extern "C"
