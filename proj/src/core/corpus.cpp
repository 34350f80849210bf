#include "core/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "core/blowup.hpp"
#include "core/errors.hpp"

namespace esskel {

namespace {

PluricanonicalForm standard_form(const StratifiedFiber& fiber) {
  PluricanonicalForm form;
  form.name = "omega";
  form.degree = 1;
  for (const auto& c : fiber.components) form.vertical_mults[c.id] = 0;
  return form;
}

void add_vertex(StratifiedFiber& fiber, const std::string& comp) {
  fiber.strata.push_back({"v_" + comp, {comp}, {}});
}

void add_edge(StratifiedFiber& fiber, const std::string& id, const std::string& a,
              const std::string& b) {
  fiber.strata.push_back({id, {a, b}, {{a, "v_" + b}, {b, "v_" + a}}});
}

long long require(const std::optional<long long>& v, const char* what, long long least) {
  if (!v) {
    throw Error(ErrorCode::invalid_params, std::string("missing parameter \"") + what + "\"");
  }
  if (*v < least) {
    throw Error(ErrorCode::invalid_params,
                std::string("parameter \"") + what + "\" must be >= " + std::to_string(least) +
                    ", got " + std::to_string(*v));
  }
  return *v;
}

ModelDocument kodaira_in(long long n) {
  StratifiedFiber fiber;
  for (long long i = 0; i < n; ++i) {
    std::string c = "C" + std::to_string(i);
    fiber.components.push_back({c, c, 1});
    add_vertex(fiber, c);
  }
  for (long long i = 0; i < n; ++i) {
    add_edge(fiber, "e" + std::to_string(i), "C" + std::to_string(i),
             "C" + std::to_string((i + 1) % n));
  }
  ModelDocument doc;
  doc.fiber = std::move(fiber);
  doc.forms.push_back(standard_form(doc.fiber));
  return doc;
}

ModelDocument kodaira_i0star() {
  StratifiedFiber fiber;
  fiber.components.push_back({"C", "C", 2});
  add_vertex(fiber, "C");
  for (int i = 1; i <= 4; ++i) {
    std::string t = "T" + std::to_string(i);
    fiber.components.push_back({t, t, 1});
    add_vertex(fiber, t);
    add_edge(fiber, "e" + t, "C", t);
  }
  ModelDocument doc;
  doc.fiber = std::move(fiber);
  doc.forms.push_back(standard_form(doc.fiber));
  return doc;
}

ModelDocument kodaira_instar(long long n) {
  StratifiedFiber fiber;
  for (long long i = 0; i <= n; ++i) {
    std::string c = "C" + std::to_string(i);
    fiber.components.push_back({c, c, 2});
    add_vertex(fiber, c);
  }
  for (long long i = 0; i < n; ++i) {
    add_edge(fiber, "c" + std::to_string(i), "C" + std::to_string(i),
             "C" + std::to_string(i + 1));
  }
  const std::string ends[4][2] = {
      {"T1", "C0"}, {"T2", "C0"}, {"T3", "C" + std::to_string(n)}, {"T4", "C" + std::to_string(n)}};
  for (const auto& [tail, anchor] : ends) {
    fiber.components.push_back({tail, tail, 1});
    add_vertex(fiber, tail);
    add_edge(fiber, "e" + tail, anchor, tail);
  }
  ModelDocument doc;
  doc.fiber = std::move(fiber);
  doc.forms.push_back(standard_form(doc.fiber));
  return doc;
}

ModelDocument chain(long long k) {
  StratifiedFiber fiber;
  for (long long i = 0; i < k; ++i) {
    std::string c = "C" + std::to_string(i);
    fiber.components.push_back({c, c, 1});
    add_vertex(fiber, c);
  }
  for (long long i = 0; i + 1 < k; ++i) {
    add_edge(fiber, "e" + std::to_string(i), "C" + std::to_string(i),
             "C" + std::to_string(i + 1));
  }
  ModelDocument doc;
  doc.fiber = std::move(fiber);
  doc.forms.push_back(standard_form(doc.fiber));
  return doc;
}

// Octahedron with its two poles identified: five components, twelve edges
// (two parallel spokes per equator vertex), eight triangles in parallel
// pairs. A closed 2-pseudo-manifold that is not a manifold at the pole.
ModelDocument pinched_torus() {
  StratifiedFiber fiber;
  fiber.components.push_back({"P", "P", 1});
  add_vertex(fiber, "P");
  for (int i = 0; i < 4; ++i) {
    std::string q = "Q" + std::to_string(i);
    fiber.components.push_back({q, q, 1});
    add_vertex(fiber, q);
  }
  auto q = [](int i) { return "Q" + std::to_string(((i % 4) + 4) % 4); };
  for (int i = 0; i < 4; ++i) {
    add_edge(fiber, "eq" + std::to_string(i), q(i), q(i + 1));
  }
  for (const char* half : {"N", "S"}) {
    for (int i = 0; i < 4; ++i) {
      add_edge(fiber, std::string("sp") + half + std::to_string(i), "P", q(i));
    }
  }
  for (const char* half : {"N", "S"}) {
    for (int i = 0; i < 4; ++i) {
      std::string spoke_here = std::string("sp") + half + std::to_string(i);
      std::string spoke_next = std::string("sp") + half + std::to_string((i + 1) % 4);
      fiber.strata.push_back({std::string("t") + half + std::to_string(i),
                              {"P", q(i), q(i + 1)},
                              {{"P", "eq" + std::to_string(i)},
                               {q(i), spoke_next},
                               {q(i + 1), spoke_here}}});
    }
  }
  ModelDocument doc;
  doc.fiber = std::move(fiber);
  doc.forms.push_back(standard_form(doc.fiber));
  return doc;
}

// Reproducible random fiber: a downward-closed family of component subsets
// (a simplicial complex) with some non-vertex strata duplicated to create
// parallel cells. Only raw engine output is used, so the stream is fixed by
// the standard and identical everywhere.
ModelDocument random_fiber(std::uint64_t seed, long long size) {
  std::mt19937_64 rng(seed);
  auto pick = [&rng](long long bound) { return static_cast<long long>(rng() % bound); };

  StratifiedFiber fiber;
  for (long long i = 0; i < size; ++i) {
    std::string c = "C" + std::to_string(i);
    fiber.components.push_back({c, c, 1 + pick(4)});
  }

  std::set<std::vector<long long>> family;
  for (long long i = 0; i < size; ++i) family.insert({i});
  if (size >= 2) {
    long long picks = 1 + pick(3);
    for (long long p = 0; p < picks; ++p) {
      long long want = 2 + pick(size - 1);  // 2..size
      std::vector<long long> pool(size);
      for (long long i = 0; i < size; ++i) pool[i] = i;
      std::vector<long long> subset;
      for (long long i = 0; i < want; ++i) {
        long long at = pick(static_cast<long long>(pool.size()));
        subset.push_back(pool[at]);
        pool.erase(pool.begin() + at);
      }
      std::sort(subset.begin(), subset.end());
      // Downward closure keeps parent pointers resolvable.
      for (unsigned mask = 1; mask < (1u << subset.size()); ++mask) {
        std::vector<long long> sub;
        for (size_t i = 0; i < subset.size(); ++i) {
          if (mask & (1u << i)) sub.push_back(subset[i]);
        }
        family.insert(sub);
      }
    }
  }

  auto stratum_id = [](const std::vector<long long>& subset, const char* suffix) {
    std::string id = subset.size() == 1 ? "v" : "s";
    for (long long j : subset) id += "_C" + std::to_string(j);
    return id + suffix;
  };
  for (const auto& subset : family) {
    Stratum s;
    s.id = stratum_id(subset, "");
    for (long long j : subset) s.components.push_back("C" + std::to_string(j));
    if (subset.size() >= 2) {
      for (long long j : subset) {
        std::vector<long long> rest;
        for (long long m : subset) {
          if (m != j) rest.push_back(m);
        }
        s.parents["C" + std::to_string(j)] = stratum_id(rest, "");
      }
    }
    fiber.strata.push_back(s);
    // Occasional parallel copy with the same parents.
    if (subset.size() >= 2 && pick(4) == 0) {
      Stratum copy = fiber.strata.back();
      copy.id = stratum_id(subset, "_b");
      fiber.strata.push_back(copy);
    }
  }

  ModelDocument doc;
  doc.fiber = std::move(fiber);
  long long nforms = 1 + pick(2);
  for (long long f = 0; f < nforms; ++f) {
    PluricanonicalForm form;
    form.name = f == 0 ? "omega" : "omega" + std::to_string(f + 1);
    form.degree = 1 + pick(3);
    for (const auto& c : doc.fiber.components) {
      form.vertical_mults[c.id] = pick(11) - 5;
    }
    doc.forms.push_back(std::move(form));
  }
  return doc;
}

void apply_tensor(ModelDocument& doc, long long d) {
  if (d < 1) {
    throw Error(ErrorCode::invalid_params, "parameter \"tensor\" must be >= 1");
  }
  for (auto& form : doc.forms) {
    form.degree *= d;
    for (auto& [id, a] : form.vertical_mults) a *= d;
  }
}

void apply_twist(ModelDocument& doc, long long c) {
  std::map<std::string, long long> mult;
  for (const auto& comp : doc.fiber.components) mult[comp.id] = comp.multiplicity;
  for (auto& form : doc.forms) {
    for (auto& [id, a] : form.vertical_mults) a += c * mult.at(id);
  }
}

}  // namespace

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {
      "kodaira_In", "kodaira_I0star", "kodaira_Instar", "chain",
      "pinched_torus", "pendant_blowup_of", "random",
  };
  return names;
}

ModelDocument corpus(const std::string& name, const CorpusParams& params) {
  ModelDocument doc;
  std::map<std::string, std::string> meta;
  meta["corpus"] = name;

  // Parameters that no generator in the dispatch below will consume are
  // rejected instead of silently ignored.
  auto reject_stray = [&](bool allow_n, bool allow_k, bool allow_random, bool allow_base) {
    if (params.n && !allow_n) {
      throw Error(ErrorCode::invalid_params, "\"" + name + "\" takes no parameter \"n\"");
    }
    if (params.k && !allow_k) {
      throw Error(ErrorCode::invalid_params, "\"" + name + "\" takes no parameter \"k\"");
    }
    if ((params.seed || params.size) && !allow_random) {
      throw Error(ErrorCode::invalid_params,
                  "\"" + name + "\" takes no parameter \"seed\"/\"size\"");
    }
    if (params.base && !allow_base) {
      throw Error(ErrorCode::invalid_params, "\"" + name + "\" takes no parameter \"base\"");
    }
  };

  if (name == "kodaira_In") {
    reject_stray(true, false, false, false);
    long long n = require(params.n, "n", 2);
    doc = kodaira_in(n);
    meta["n"] = std::to_string(n);
  } else if (name == "kodaira_I0star") {
    reject_stray(false, false, false, false);
    doc = kodaira_i0star();
  } else if (name == "kodaira_Instar") {
    reject_stray(true, false, false, false);
    long long n = require(params.n, "n", 1);
    doc = kodaira_instar(n);
    meta["n"] = std::to_string(n);
  } else if (name == "chain") {
    reject_stray(false, true, false, false);
    long long k = require(params.k, "k", 2);
    doc = chain(k);
    meta["k"] = std::to_string(k);
  } else if (name == "pinched_torus") {
    reject_stray(false, false, false, false);
    doc = pinched_torus();
  } else if (name == "pendant_blowup_of") {
    if (!params.base) {
      throw Error(ErrorCode::invalid_params, "missing parameter \"base\"");
    }
    CorpusParams base_params = params;
    base_params.base.reset();
    base_params.twist.reset();
    base_params.tensor.reset();
    ModelDocument base = corpus(*params.base, base_params);
    std::string first = base.fiber.components.front().id;
    for (const auto& c : base.fiber.components) first = std::min(first, c.id);
    BlowupResult blown =
        blowup_surface_model(base.fiber, base.forms, {BlowupCenter::Kind::interior, first});
    doc.fiber = std::move(blown.fiber);
    doc.forms = std::move(blown.forms);
    meta = base.metadata;
    meta["corpus"] = name;
    meta["base"] = *params.base;
    meta["pendant_center"] = first;
    meta["pendant_component"] = blown.new_component;
  } else if (name == "random") {
    reject_stray(false, false, true, false);
    std::uint64_t seed = params.seed.value_or(0);
    long long size = params.size.value_or(4);
    if (size < 1 || size > 8) {
      throw Error(ErrorCode::invalid_params, "parameter \"size\" must be in 1..8");
    }
    doc = random_fiber(seed, size);
    meta["seed"] = std::to_string(seed);
    meta["size"] = std::to_string(size);
  } else {
    throw Error(ErrorCode::not_found, "unknown corpus entry \"" + name + "\"");
  }

  if (params.tensor) {
    apply_tensor(doc, *params.tensor);
    meta["tensor"] = std::to_string(*params.tensor);
  }
  if (params.twist) {
    apply_twist(doc, *params.twist);
    meta["twist"] = std::to_string(*params.twist);
  }
  for (auto& [k, v] : meta) doc.metadata[k] = v;
  return doc;
}

}  // namespace esskel
