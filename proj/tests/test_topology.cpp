#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "core/corpus.hpp"
#include "core/errors.hpp"
#include "core/topology.hpp"
#include "core/weights.hpp"
#include "oracles.hpp"

using namespace esskel;
using namespace esskel::testing;

namespace {

DualComplex from_corpus(const std::string& name, CorpusParams p = {}) {
  return DualComplex::build(corpus(name, p).fiber);
}

// Two triangles glued at one vertex: homogeneous and non-branching, but the
// dual graph on top simplices is disconnected.
DualComplex wedge_of_triangles() {
  StratifiedFiber f;
  for (const char* c : {"A", "B", "C", "D", "E"}) f.components.push_back(comp(c));
  for (const char* c : {"A", "B", "C", "D", "E"}) f.strata.push_back(vertex(c));
  f.strata.push_back(edge("e_AB", "A", "B"));
  f.strata.push_back(edge("e_AC", "A", "C"));
  f.strata.push_back(edge("e_BC", "B", "C"));
  f.strata.push_back(edge("e_CD", "C", "D"));
  f.strata.push_back(edge("e_CE", "C", "E"));
  f.strata.push_back(edge("e_DE", "D", "E"));
  f.strata.push_back(triangle("t1", "A", "B", "C", "e_AB", "e_AC", "e_BC"));
  f.strata.push_back(triangle("t2", "C", "D", "E", "e_CD", "e_CE", "e_DE"));
  return DualComplex::build(f);
}

}  // namespace

TEST_CASE("the circle closes up") {
  CorpusParams p;
  p.n = 2;
  PseudoManifoldReport r = classify_pseudo_manifold(from_corpus("kodaira_In", p));
  CHECK(r.dimension == 1);
  CHECK(r.classification == PseudoManifoldClass::closed);
  CHECK(r.boundary.empty());
  CHECK(r.witnesses.empty());
}

TEST_CASE("a chain is a pseudo-manifold with two boundary vertices") {
  CorpusParams p;
  p.k = 3;
  DualComplex dc = from_corpus("chain", p);
  PseudoManifoldReport r = classify_pseudo_manifold(dc);
  CHECK(r.dimension == 1);
  CHECK(r.classification == PseudoManifoldClass::with_boundary);
  REQUIRE(r.boundary.size() == 2);
  // Boundary vertices are the chains consisting of the two end vertices.
  std::vector<std::string> ids;
  for (const auto& chain : r.boundary) {
    REQUIRE(chain.size() == 1);
    ids.push_back(dc.cells()[chain[0]].id);
  }
  std::sort(ids.begin(), ids.end());
  CHECK(ids == std::vector<std::string>{"v_C0", "v_C2"});
}

TEST_CASE("two triangles sharing only a vertex are not strongly connected") {
  PseudoManifoldReport r = classify_pseudo_manifold(wedge_of_triangles());
  CHECK(r.dimension == 2);
  CHECK(r.classification == PseudoManifoldClass::not_pseudo_manifold);
  REQUIRE(!r.witnesses.empty());
  bool found = std::any_of(r.witnesses.begin(), r.witnesses.end(), [](const auto& w) {
    return w.kind == "disconnected_top_pair";
  });
  CHECK(found);
}

TEST_CASE("a pendant edge on a triangle breaks homogeneity") {
  StratifiedFiber f;
  for (const char* c : {"A", "B", "C", "D"}) f.components.push_back(comp(c));
  for (const char* c : {"A", "B", "C", "D"}) f.strata.push_back(vertex(c));
  f.strata.push_back(edge("e_AB", "A", "B"));
  f.strata.push_back(edge("e_AC", "A", "C"));
  f.strata.push_back(edge("e_BC", "B", "C"));
  f.strata.push_back(edge("e_AD", "A", "D"));
  f.strata.push_back(triangle("t", "A", "B", "C", "e_AB", "e_AC", "e_BC"));
  PseudoManifoldReport r = classify_pseudo_manifold(DualComplex::build(f));
  CHECK(r.classification == PseudoManifoldClass::not_pseudo_manifold);
  bool found = std::any_of(r.witnesses.begin(), r.witnesses.end(), [](const auto& w) {
    return w.kind == "non_homogeneous_simplex";
  });
  CHECK(found);
}

TEST_CASE("three edges through one vertex pair branch") {
  StratifiedFiber f;
  f.components = {comp("A"), comp("B")};
  f.strata = {vertex("A"), vertex("B"), edge("e1", "A", "B"), edge("e2", "A", "B"),
              edge("e3", "A", "B")};
  PseudoManifoldReport r = classify_pseudo_manifold(DualComplex::build(f));
  CHECK(r.classification == PseudoManifoldClass::not_pseudo_manifold);
  bool found = false;
  for (const auto& w : r.witnesses) {
    if (w.kind == "branching_face") {
      found = true;
      CHECK(w.incidence == 3);
    }
  }
  CHECK(found);
}

TEST_CASE("the pinched torus is a closed pseudo-manifold") {
  PseudoManifoldReport r = classify_pseudo_manifold(from_corpus("pinched_torus"));
  CHECK(r.dimension == 2);
  CHECK(r.classification == PseudoManifoldClass::closed);
}

TEST_CASE("zero-dimensional conventions") {
  StratifiedFiber f;
  f.components = {comp("A")};
  f.strata = {vertex("A")};
  PseudoManifoldReport r = classify_pseudo_manifold(DualComplex::build(f));
  CHECK(r.dimension == 0);
  CHECK(r.classification == PseudoManifoldClass::closed);

  f.components.push_back(comp("B"));
  f.strata.push_back(vertex("B"));
  r = classify_pseudo_manifold(DualComplex::build(f));
  CHECK(r.classification == PseudoManifoldClass::not_pseudo_manifold);
}

TEST_CASE("empty complexes are rejected") {
  DualComplex dc = from_corpus("pinched_torus");
  Subcomplex empty;
  CHECK_THROWS_AS(static_cast<void>(classify_pseudo_manifold(dc, empty)), Error);
  CHECK_THROWS_AS(static_cast<void>(betti_numbers(dc, empty)), Error);
}

TEST_CASE("Betti numbers of the named complexes") {
  CorpusParams p;
  p.n = 2;
  CHECK(betti_numbers(from_corpus("kodaira_In", p)).betti == std::vector<long long>{1, 1});
  CorpusParams pk;
  pk.k = 4;
  CHECK(betti_numbers(from_corpus("chain", pk)).betti == std::vector<long long>{1, 0});
  CHECK(betti_numbers(from_corpus("pinched_torus")).betti == std::vector<long long>{1, 1, 1});

  StratifiedFiber f;
  f.components = {comp("A")};
  f.strata = {vertex("A")};
  CHECK(betti_numbers(DualComplex::build(f)).betti == std::vector<long long>{1});
}

TEST_CASE("alternating Betti sums reproduce the Euler characteristic") {
  std::vector<DualComplex> complexes;
  for (long long n : {2, 4, 6}) {
    CorpusParams p;
    p.n = n;
    complexes.push_back(from_corpus("kodaira_In", p));
  }
  complexes.push_back(from_corpus("kodaira_I0star"));
  complexes.push_back(from_corpus("pinched_torus"));
  complexes.push_back(wedge_of_triangles());
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    CorpusParams pr;
    pr.seed = seed;
    pr.size = 2 + static_cast<long long>(seed % 4);
    complexes.push_back(from_corpus("random", pr));
  }
  for (const DualComplex& dc : complexes) {
    HomologyProfile profile = betti_numbers(dc);
    long long alternating = 0;
    for (size_t k = 0; k < profile.betti.size(); ++k) {
      alternating += (k % 2 == 0) ? profile.betti[k] : -profile.betti[k];
    }
    CHECK(alternating == delta_euler(dc, full_subcomplex(dc)));
    CHECK(profile.betti[0] >= 1);
  }
}

TEST_CASE("fraction-free ranks agree with rational elimination") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    size_t rows = 1 + rng() % 8;
    size_t cols = 1 + rng() % 8;
    std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
    for (auto& row : m) {
      for (auto& x : row) x = static_cast<long long>(rng() % 7) - 3;
    }
    CHECK(integer_matrix_rank(m) == rational_rank(m));
  }
  // And on an actual boundary matrix workload.
  DualComplex dc = from_corpus("pinched_torus");
  SimplicialComplex sc = barycentric_subdivision(dc);
  HomologyProfile profile = betti_numbers(sc);
  CHECK(profile.betti == std::vector<long long>{1, 1, 1});
}

TEST_CASE("classification is invariant under relabeling") {
  std::mt19937_64 rng(13);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CorpusParams pr;
    pr.seed = seed;
    pr.size = 2 + static_cast<long long>(seed % 4);
    ModelDocument doc = corpus("random", pr);
    PseudoManifoldReport before = classify_pseudo_manifold(DualComplex::build(doc.fiber));

    // Relabel components and strata with random fresh names.
    std::map<std::string, std::string> comp_names;
    int counter = 0;
    for (auto& c : doc.fiber.components) {
      std::string fresh = "X" + std::to_string(rng() % 1000) + "_" + std::to_string(counter++);
      comp_names[c.id] = fresh;
      c.id = fresh;
      c.name = fresh;
    }
    std::map<std::string, std::string> stratum_names;
    for (auto& s : doc.fiber.strata) {
      std::string fresh = "S" + std::to_string(rng() % 1000) + "_" + std::to_string(counter++);
      stratum_names[s.id] = fresh;
      s.id = fresh;
    }
    for (auto& s : doc.fiber.strata) {
      for (auto& cid : s.components) cid = comp_names.at(cid);
      std::map<std::string, std::string> parents;
      for (const auto& [j, pid] : s.parents) parents[comp_names.at(j)] = stratum_names.at(pid);
      s.parents = std::move(parents);
    }
    PseudoManifoldReport after = classify_pseudo_manifold(DualComplex::build(doc.fiber));
    CHECK(before.classification == after.classification);
    CHECK(before.dimension == after.dimension);
    CHECK(before.boundary.size() == after.boundary.size());
  }
}

TEST_CASE("semistable reduced entries have pseudo-manifold skeleta") {
  // Every corpus degeneration with all N = 1 and a = 0.
  std::vector<DualComplex> complexes;
  for (long long n = 2; n <= 8; ++n) {
    CorpusParams p;
    p.n = n;
    complexes.push_back(from_corpus("kodaira_In", p));
  }
  for (long long k = 2; k <= 8; ++k) {
    CorpusParams p;
    p.k = k;
    complexes.push_back(from_corpus("chain", p));
  }
  complexes.push_back(from_corpus("pinched_torus"));
  for (const DualComplex& dc : complexes) {
    PluricanonicalForm form;
    form.name = "omega";
    form.degree = 1;
    for (const auto& c : dc.components()) form.vertical_mults[c.id] = 0;
    Subcomplex sk = essential_skeleton(dc, {form});
    PseudoManifoldReport r = classify_pseudo_manifold(dc, sk);
    CHECK(r.classification != PseudoManifoldClass::not_pseudo_manifold);
  }
}

TEST_CASE("report structure invariants") {
  std::vector<DualComplex> complexes = {from_corpus("pinched_torus"), wedge_of_triangles()};
  CorpusParams p;
  p.k = 5;
  complexes.push_back(from_corpus("chain", p));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CorpusParams pr;
    pr.seed = seed;
    pr.size = 2 + static_cast<long long>(seed % 4);
    complexes.push_back(from_corpus("random", pr));
  }
  for (const DualComplex& dc : complexes) {
    PseudoManifoldReport r = classify_pseudo_manifold(dc);
    if (r.classification == PseudoManifoldClass::closed) CHECK(r.boundary.empty());
    if (r.classification == PseudoManifoldClass::not_pseudo_manifold) {
      CHECK(!r.witnesses.empty());
    }
  }
}

TEST_CASE("rational homology sphere detection") {
  CHECK(is_q_homology_sphere(HomologyProfile{{1, 1}}, 1));
  CHECK(!is_q_homology_sphere(HomologyProfile{{1, 0}}, 1));
  CHECK(!is_q_homology_sphere(HomologyProfile{{1, 1, 1}}, 2));
  CHECK(is_q_homology_sphere(HomologyProfile{{1, 0, 1}}, 2));
  CHECK(is_q_homology_sphere(HomologyProfile{{1}}, 0));
  // Shorter profiles are padded with zeros.
  CHECK(!is_q_homology_sphere(HomologyProfile{{1}}, 1));
  CHECK(!is_q_homology_sphere(HomologyProfile{{2, 1}}, 1));
}
