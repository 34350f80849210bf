#include <doctest.h>

#include <json.hpp>

#include "core/corpus.hpp"
#include "core/errors.hpp"
#include "core/runner.hpp"

using namespace esskel;
using nlohmann::json;

namespace {

json run_ok(const ModelDocument& doc, const std::string& request) {
  std::string report = run_command(doc, {}, request);
  json parsed = json::parse(report);
  REQUIRE(parsed["status"] == "ok");
  return parsed;
}

ModelDocument in_doc(long long n) {
  CorpusParams p;
  p.n = n;
  return corpus("kodaira_In", p);
}

}  // namespace

TEST_CASE("essential report on the two-edge circle lists all four cells") {
  json report = run_ok(in_doc(2), R"({"command": "essential"})");
  const json& result = report["result"];
  CHECK(result["cell_count"] == 4);
  CHECK(result["cells"] == json::array({"v_C0", "v_C1", "e0", "e1"}));
  CHECK(result["forms"][0]["lambda"] == "1/1");
  CHECK(report["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
}

TEST_CASE("full pipeline over the cycle family") {
  for (long long n = 2; n <= 12; ++n) {
    ModelDocument doc = in_doc(n);
    json essential = run_ok(doc, R"({"command": "essential"})");
    CHECK(essential["result"]["cells_by_dimension"] == json::array({n, n}));

    json classify = run_ok(doc, R"({"command": "classify", "of": "essential"})");
    CHECK(classify["result"]["classification"] == "closed_pseudo_manifold");
    CHECK(classify["result"]["dimension"] == 1);

    json homology = run_ok(doc, R"({"command": "homology"})");
    CHECK(homology["result"]["betti"] == json::array({1, 1}));

    json sphere = run_ok(doc, R"({"command": "sphere-check"})");
    CHECK(sphere["result"]["q_homology_sphere"] == true);
  }
}

TEST_CASE("classify on the contracted star skeleton uses the point convention") {
  ModelDocument doc = corpus("kodaira_I0star");
  json report = run_ok(doc, R"({"command": "classify", "of": "essential"})");
  CHECK(report["result"]["dimension"] == 0);
  CHECK(report["result"]["classification"] == "closed_pseudo_manifold");
}

TEST_CASE("weights and rescale reports") {
  ModelDocument doc = corpus("kodaira_I0star");
  json weights = run_ok(doc, R"({"command": "weights"})");
  CHECK(weights["result"]["forms"][0]["vertex_weights"]["C"] == "1/2");
  CHECK(weights["result"]["forms"][0]["vertex_weights"]["T1"] == "1/1");
  CHECK(weights["result"]["forms"][0]["lambda"] == "1/2");

  json rescale = run_ok(doc, R"({"command": "rescale", "d": 2})");
  CHECK(rescale["result"]["forms"][0]["lambda"] == "1/2");
  CHECK(rescale["result"]["forms"][0]["rescaled_lambda"] == "0/1");
}

TEST_CASE("ks-skeleton requires a known form") {
  ModelDocument doc = in_doc(2);
  json report = run_ok(doc, R"({"command": "ks-skeleton", "form": "omega"})");
  CHECK(report["result"]["lambda"] == "1/1");
  CHECK_THROWS_AS(static_cast<void>(run_command(doc, {}, R"({"command": "ks-skeleton"})")), Error);
  try {
    static_cast<void>(run_command(doc, {}, R"({"command": "ks-skeleton", "form": "nope"})"));
    FAIL("expected not_found");
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::not_found);
  }
}

TEST_CASE("lc-skeleton resolves deltas and enforces the dlt bound") {
  ModelDocument doc = in_doc(2);
  DeltaAssignment crepant;
  crepant.mults["C0"] = 1;
  crepant.mults["C1"] = 1;
  doc.deltas["crepant"] = crepant;
  DeltaAssignment off;
  off.mults["C0"] = 1;
  off.mults["C1"] = 0;
  doc.deltas["off"] = off;

  json report = run_ok(doc, R"({"command": "lc-skeleton", "delta": "crepant"})");
  CHECK(report["result"]["cell_count"] == 4);
  report = run_ok(doc, R"({"command": "lc-skeleton", "delta": "off"})");
  CHECK(report["result"]["cells"] == json::array({"v_C0"}));

  // Two deltas and no name: ambiguous.
  CHECK_THROWS_AS(static_cast<void>(run_command(doc, {}, R"({"command": "lc-skeleton"})")), Error);

  DeltaAssignment bad;
  bad.mults["C0"] = 2;
  bad.mults["C1"] = 1;
  doc.deltas["bad"] = bad;
  try {
    static_cast<void>(run_command(doc, {}, R"({"command": "lc-skeleton", "delta": "bad"})"));
    FAIL("expected dlt_violation");
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::dlt_violation);
  }
}

TEST_CASE("collapse command verifies its own sequence") {
  CorpusParams p;
  p.base = "kodaira_In";
  p.n = 2;
  ModelDocument doc = corpus("pendant_blowup_of", p);
  json report = run_ok(doc, R"({"command": "collapse", "target": "essential"})");
  CHECK(report["result"]["found"] == true);
  CHECK(report["result"]["verified"] == true);
  REQUIRE(report["result"]["steps"].size() == 1);
  CHECK(report["result"]["steps"][0]["free_face"] == "v_E");
}

TEST_CASE("blowup command emits a loadable document") {
  ModelDocument doc = in_doc(2);
  json report = run_ok(doc, R"({"command": "blowup", "center": "interior=C0"})");
  CHECK(report["result"]["new_component"] == "E");
  ModelDocument blown = parse_model(report["result"]["document"].dump());
  CHECK(blown.fiber.components.size() == 3);
  CHECK(blown.metadata.at("blowup_center") == "interior=C0");
}

TEST_CASE("validate reports issues instead of failing") {
  std::string text = R"({
    "schema_version": "esskel/1",
    "fiber": {
      "components": [{"id": "A", "multiplicity": 0}],
      "strata": [{"id": "vA", "components": ["A"]}]
    }
  })";
  auto [doc, issues] = parse_model_lenient(text);
  json report = json::parse(run_command(doc, issues, R"({"command": "validate"})"));
  CHECK(report["result"]["valid"] == false);
  CHECK(report["result"]["violations"][0]["kind"] == "component_multiplicity");

  // Any other command refuses to run.
  try {
    static_cast<void>(run_command(doc, issues, R"({"command": "essential"})"));
    FAIL("expected validation error");
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::validation);
  }
}

TEST_CASE("unknown commands and stray flags are invalid requests") {
  ModelDocument doc = in_doc(2);
  try {
    static_cast<void>(run_command(doc, {}, R"({"command": "frobnicate"})"));
    FAIL("expected invalid_request");
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::invalid_request);
  }
  CHECK_THROWS_AS(static_cast<void>(run_command(doc, {}, R"({"command": "essential", "of": "x"})")),
                  Error);
  CHECK_THROWS_AS(static_cast<void>(run_command(doc, {}, "not json")), Error);
}

TEST_CASE("reports are byte-identical across repeated runs") {
  ModelDocument doc = corpus("pinched_torus");
  for (const char* request : {R"({"command": "essential"})",
                              R"({"command": "classify", "of": "full"})",
                              R"({"command": "homology"})",
                              R"({"command": "dual-complex"})"}) {
    CHECK(run_command(doc, {}, request) == run_command(doc, {}, request));
  }
}

TEST_CASE("text rendering covers every command") {
  ModelDocument doc = in_doc(2);
  for (const char* request : {R"({"command": "essential"})",
                              R"({"command": "weights"})",
                              R"({"command": "classify"})",
                              R"({"command": "homology"})",
                              R"({"command": "sphere-check"})",
                              R"({"command": "dual-complex"})",
                              R"({"command": "rescale", "d": 3})",
                              R"({"command": "blowup", "center": "interior=C0"})"}) {
    std::string text = render_report_text(run_command(doc, {}, request));
    CHECK(!text.empty());
    CHECK(text.find("command:") != std::string::npos);
  }
}
