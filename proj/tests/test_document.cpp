#include <doctest.h>

#include <fstream>
#include <sstream>

#include "core/corpus.hpp"
#include "core/document.hpp"
#include "core/errors.hpp"

using namespace esskel;

namespace {

std::string data_path(const std::string& name) {
  return std::string(ESSKEL_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("the bundled two-component cycle document parses") {
  ModelDocument doc = parse_model_file(data_path("i2.json"));
  CHECK(doc.fiber.components.size() == 2);
  CHECK(doc.fiber.strata.size() == 4);
  CHECK(doc.forms.size() == 1);
  CorpusParams p;
  p.n = 2;
  CHECK(documents_equal(doc, corpus("kodaira_In", p)));
}

TEST_CASE("bundled documents match their corpus generators byte for byte") {
  CorpusParams p;
  p.base = "kodaira_In";
  p.n = 2;
  CHECK(slurp(data_path("pendant.json")) == serialize_model(corpus("pendant_blowup_of", p)));
  CHECK(slurp(data_path("i0star.json")) == serialize_model(corpus("kodaira_I0star")));
  CHECK(slurp(data_path("pinched_torus.json")) == serialize_model(corpus("pinched_torus")));
  CorpusParams pk;
  pk.k = 3;
  CHECK(slurp(data_path("chain3.json")) == serialize_model(corpus("chain", pk)));
}

TEST_CASE("a form missing a component entry is a semantic error naming it") {
  std::string text = R"({
    "schema_version": "esskel/1",
    "fiber": {
      "components": [
        {"id": "A", "multiplicity": 1},
        {"id": "B", "multiplicity": 1}
      ],
      "strata": [
        {"id": "vA", "components": ["A"]},
        {"id": "vB", "components": ["B"]},
        {"id": "e", "components": ["A", "B"], "parents": {"A": "vB", "B": "vA"}}
      ]
    },
    "forms": [{"name": "omega", "degree": 1, "vertical_mults": {"A": 0}}]
  })";
  auto [doc, report] = parse_model_lenient(text);
  REQUIRE(report.size() == 1);
  CHECK(report[0].kind == "form_incomplete");
  CHECK(report[0].ids == std::vector<std::string>{"omega", "B"});
  CHECK_THROWS_AS(static_cast<void>(parse_model(text)), Error);
  try {
    static_cast<void>(parse_model(text));
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::validation);
    CHECK(std::string(e.what()).find("\"B\"") != std::string::npos);
  }
}

TEST_CASE("delta entries above one are accepted at parse time") {
  std::string text = R"({
    "schema_version": "esskel/1",
    "fiber": {
      "components": [{"id": "A", "multiplicity": 1}],
      "strata": [{"id": "vA", "components": ["A"]}]
    },
    "forms": [{"name": "omega", "degree": 1, "vertical_mults": {"A": 0}}],
    "deltas": {"bad": {"A": 2}}
  })";
  ModelDocument doc = parse_model(text);
  CHECK(doc.deltas.at("bad").mults.at("A") == Rational(2));
}

TEST_CASE("syntax errors carry position information") {
  try {
    static_cast<void>(parse_model("{\"schema_version\": }"));
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::parse);
    CHECK(std::string(e.what()).find("20") != std::string::npos);
  }
}

TEST_CASE("shape problems are parse errors") {
  CHECK_THROWS_AS(static_cast<void>(parse_model("[]")), Error);
  CHECK_THROWS_AS(static_cast<void>(parse_model("{}")), Error);
  // Unknown field.
  CHECK_THROWS_AS(
      static_cast<void>(parse_model(
          R"({"schema_version": "esskel/1", "fiber": {"components": [], "strata": []}, "bogus": 1})")),
      Error);
  // Floating-point multiplicity.
  CHECK_THROWS_AS(
      static_cast<void>(parse_model(
          R"({"schema_version": "esskel/1", "fiber": {"components": [{"id": "A", "multiplicity": 1.5}], "strata": []}})")),
      Error);
}

TEST_CASE("unrecognized schema versions are semantic errors") {
  std::string text = R"({
    "schema_version": "esskel/999",
    "fiber": {
      "components": [{"id": "A", "multiplicity": 1}],
      "strata": [{"id": "vA", "components": ["A"]}]
    }
  })";
  auto [doc, report] = parse_model_lenient(text);
  REQUIRE(report.size() == 1);
  CHECK(report[0].kind == "unknown_schema_version");
}

TEST_CASE("serialize/parse round trip on every corpus family") {
  std::vector<ModelDocument> docs;
  CorpusParams p;
  p.n = 3;
  docs.push_back(corpus("kodaira_In", p));
  docs.push_back(corpus("kodaira_Instar", p));
  docs.push_back(corpus("kodaira_I0star"));
  docs.push_back(corpus("pinched_torus"));
  CorpusParams pk;
  pk.k = 5;
  docs.push_back(corpus("chain", pk));
  CorpusParams pb;
  pb.base = "kodaira_In";
  pb.n = 2;
  docs.push_back(corpus("pendant_blowup_of", pb));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CorpusParams pr;
    pr.seed = seed;
    pr.size = 2 + static_cast<long long>(seed % 5);
    docs.push_back(corpus("random", pr));
  }
  // Deltas and metadata survive too.
  DeltaAssignment d;
  d.mults["C0"] = 1;
  d.mults["C1"] = Rational(-1, 3);
  docs[0].deltas["crepant"] = d;
  docs[0].metadata["note"] = "hand added";

  for (const ModelDocument& doc : docs) {
    std::string text = serialize_model(doc);
    ModelDocument reparsed = parse_model(text);
    CHECK(documents_equal(doc, reparsed));
    CHECK(serialize_model(reparsed) == text);
    CHECK(document_digest(reparsed) == document_digest(doc));
  }
}

TEST_CASE("digests see every part of the document") {
  CorpusParams p;
  p.n = 2;
  ModelDocument doc = corpus("kodaira_In", p);
  std::string base = document_digest(doc);
  CHECK(base.rfind("fnv1a64:", 0) == 0);
  CHECK(base.size() == 8 + 16);

  ModelDocument tweaked = doc;
  tweaked.fiber.components[0].multiplicity = 2;
  CHECK(document_digest(tweaked) != base);

  tweaked = doc;
  tweaked.forms[0].vertical_mults["C0"] = 1;
  CHECK(document_digest(tweaked) != base);

  tweaked = doc;
  tweaked.metadata["extra"] = "x";
  CHECK(document_digest(tweaked) != base);
}
