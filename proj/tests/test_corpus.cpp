#include <doctest.h>

#include "core/corpus.hpp"
#include "core/dual_complex.hpp"
#include "core/errors.hpp"

using namespace esskel;

namespace {

long long count_dim(const DualComplex& dc, int dim) {
  long long n = 0;
  for (const auto& cell : dc.cells()) {
    if (cell.dim() == dim) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("cycle family counts") {
  for (long long n = 2; n <= 6; ++n) {
    CorpusParams p;
    p.n = n;
    DualComplex dc = DualComplex::build(corpus("kodaira_In", p).fiber);
    CHECK(count_dim(dc, 0) == n);
    CHECK(count_dim(dc, 1) == n);
    CHECK(dc.max_dimension() == 1);
  }
}

TEST_CASE("star and extended star families") {
  DualComplex star = DualComplex::build(corpus("kodaira_I0star").fiber);
  CHECK(count_dim(star, 0) == 5);
  CHECK(count_dim(star, 1) == 4);
  CHECK(star.multiplicity(star.component_index("C")) == 2);

  for (long long n = 1; n <= 3; ++n) {
    CorpusParams p;
    p.n = n;
    DualComplex dc = DualComplex::build(corpus("kodaira_Instar", p).fiber);
    CHECK(count_dim(dc, 0) == n + 5);
    CHECK(count_dim(dc, 1) == n + 4);
    for (long long i = 0; i <= n; ++i) {
      CHECK(dc.multiplicity(dc.component_index("C" + std::to_string(i))) == 2);
    }
  }
}

TEST_CASE("chain family counts") {
  for (long long k = 2; k <= 6; ++k) {
    CorpusParams p;
    p.k = k;
    DualComplex dc = DualComplex::build(corpus("chain", p).fiber);
    CHECK(count_dim(dc, 0) == k);
    CHECK(count_dim(dc, 1) == k - 1);
  }
}

TEST_CASE("pinched torus counts") {
  DualComplex dc = DualComplex::build(corpus("pinched_torus").fiber);
  CHECK(count_dim(dc, 0) == 5);
  CHECK(count_dim(dc, 1) == 12);
  CHECK(count_dim(dc, 2) == 8);
}

TEST_CASE("parameter validation") {
  CorpusParams p;
  p.n = 1;
  CHECK_THROWS_AS(static_cast<void>(corpus("kodaira_In", p)), Error);
  try {
    static_cast<void>(corpus("kodaira_In", p));
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::invalid_params);
  }
  CorpusParams missing;
  CHECK_THROWS_AS(static_cast<void>(corpus("kodaira_In", missing)), Error);
  CorpusParams k1;
  k1.k = 1;
  CHECK_THROWS_AS(static_cast<void>(corpus("chain", k1)), Error);
  CHECK_THROWS_AS(static_cast<void>(corpus("nonesuch")), Error);
  try {
    static_cast<void>(corpus("nonesuch"));
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::not_found);
  }
  CorpusParams stray;
  stray.n = 4;
  CHECK_THROWS_AS(static_cast<void>(corpus("pinched_torus", stray)), Error);
  CorpusParams huge;
  huge.size = 9;
  CHECK_THROWS_AS(static_cast<void>(corpus("random", huge)), Error);
}

TEST_CASE("random entries are reproducible and seed-sensitive") {
  CorpusParams p;
  p.seed = 42;
  p.size = 5;
  CHECK(documents_equal(corpus("random", p), corpus("random", p)));
  CorpusParams q = p;
  q.seed = 43;
  CHECK(!documents_equal(corpus("random", p), corpus("random", q)));
}

TEST_CASE("pendant entries record their construction") {
  CorpusParams p;
  p.base = "kodaira_I0star";
  ModelDocument doc = corpus("pendant_blowup_of", p);
  CHECK(doc.metadata.at("corpus") == "pendant_blowup_of");
  CHECK(doc.metadata.at("base") == "kodaira_I0star");
  CHECK(doc.metadata.at("pendant_center") == "C");
  CHECK(doc.fiber.find_component(doc.metadata.at("pendant_component")) != nullptr);
  // The pendant inherits the center's multiplicity (here the double fiber).
  CHECK(doc.fiber.find_component("E")->multiplicity == 2);
  CHECK(doc.forms.front().vertical_mults.at("E") == 1);
}

TEST_CASE("twist and tensor flags transform the forms") {
  CorpusParams p;
  p.n = 2;
  p.twist = 2;
  ModelDocument doc = corpus("kodaira_In", p);
  CHECK(doc.forms.front().vertical_mults.at("C0") == 2);

  CorpusParams q;
  q.n = 2;
  q.tensor = 3;
  doc = corpus("kodaira_In", q);
  CHECK(doc.forms.front().degree == 3);
  CHECK(doc.forms.front().vertical_mults.at("C0") == 0);

  // I0star has N_C = 2, so a twist adds 2c there and c on the tails.
  CorpusParams r;
  r.twist = -1;
  doc = corpus("kodaira_I0star", r);
  CHECK(doc.forms.front().vertical_mults.at("C") == -2);
  CHECK(doc.forms.front().vertical_mults.at("T1") == -1);
}
