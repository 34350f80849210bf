#include "core/topology.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "core/errors.hpp"

namespace esskel {

const char* pseudo_manifold_class_name(PseudoManifoldClass c) {
  switch (c) {
    case PseudoManifoldClass::closed: return "closed_pseudo_manifold";
    case PseudoManifoldClass::with_boundary: return "pseudo_manifold_with_boundary";
    case PseudoManifoldClass::not_pseudo_manifold: return "not_pseudo_manifold";
  }
  return "unknown";
}

PseudoManifoldReport classify_pseudo_manifold(const SimplicialComplex& sc) {
  if (sc.empty() || sc.simplices[0].empty()) {
    throw Error(ErrorCode::empty_complex, "cannot classify an empty complex");
  }
  PseudoManifoldReport report;
  const int n = sc.dimension();
  report.dimension = n;
  const auto& top = sc.simplices[n];

  // (1) Dimensional homogeneity: mark every subchain of every top simplex.
  std::vector<std::map<std::vector<int>, int>> marked(n + 1);
  for (const auto& simplex : top) {
    const size_t len = simplex.size();
    for (unsigned mask = 1; mask < (1u << len); ++mask) {
      std::vector<int> sub;
      for (size_t i = 0; i < len; ++i) {
        if (mask & (1u << i)) sub.push_back(simplex[i]);
      }
      marked[sub.size() - 1][sub] = 1;
    }
  }
  bool homogeneous = true;
  for (int k = 0; k <= n; ++k) {
    for (const auto& simplex : sc.simplices[k]) {
      if (!marked[k].count(simplex)) {
        homogeneous = false;
        report.witnesses.push_back({"non_homogeneous_simplex", {simplex}, 0});
      }
    }
  }

  // (2) Non-branching: count top simplices per (n-1)-face.
  bool non_branching = true;
  std::map<std::vector<int>, std::vector<int>> incident;  // (n-1)-chain -> top indices
  if (n >= 1) {
    for (size_t t = 0; t < top.size(); ++t) {
      for (size_t omit = 0; omit < top[t].size(); ++omit) {
        std::vector<int> facet;
        for (size_t i = 0; i < top[t].size(); ++i) {
          if (i != omit) facet.push_back(top[t][i]);
        }
        incident[facet].push_back(static_cast<int>(t));
      }
    }
    for (const auto& [facet, tops] : incident) {
      if (tops.size() == 1) {
        report.boundary.push_back(facet);
      } else if (tops.size() > 2) {
        non_branching = false;
        PseudoManifoldWitness w{"branching_face", {facet}, static_cast<int>(tops.size())};
        for (int t : tops) w.simplices.push_back(top[t]);
        report.witnesses.push_back(std::move(w));
      }
    }
  }

  // (3) Strong connectedness of the dual graph on top simplices.
  bool strongly_connected = true;
  if (top.size() > 1) {
    std::vector<int> comp(top.size(), -1);
    std::vector<size_t> stack;
    comp[0] = 0;
    stack.push_back(0);
    if (n >= 1) {
      std::vector<std::vector<int>> adj(top.size());
      for (const auto& [facet, tops] : incident) {
        for (size_t a = 0; a < tops.size(); ++a) {
          for (size_t b = a + 1; b < tops.size(); ++b) {
            adj[tops[a]].push_back(tops[b]);
            adj[tops[b]].push_back(tops[a]);
          }
        }
      }
      while (!stack.empty()) {
        size_t cur = stack.back();
        stack.pop_back();
        for (int next : adj[cur]) {
          if (comp[next] < 0) {
            comp[next] = 0;
            stack.push_back(static_cast<size_t>(next));
          }
        }
      }
    }
    for (size_t t = 0; t < top.size(); ++t) {
      if (comp[t] < 0) {
        strongly_connected = false;
        report.witnesses.push_back({"disconnected_top_pair", {top[0], top[t]}, 0});
        break;
      }
    }
  }

  if (!homogeneous || !non_branching || !strongly_connected) {
    report.classification = PseudoManifoldClass::not_pseudo_manifold;
  } else if (report.boundary.empty()) {
    report.classification = PseudoManifoldClass::closed;
  } else {
    report.classification = PseudoManifoldClass::with_boundary;
  }
  return report;
}

PseudoManifoldReport classify_pseudo_manifold(const DualComplex& dc, const Subcomplex& sub) {
  if (sub.empty()) {
    throw Error(ErrorCode::empty_complex, "cannot classify an empty complex");
  }
  return classify_pseudo_manifold(barycentric_subdivision(dc, sub));
}

PseudoManifoldReport classify_pseudo_manifold(const DualComplex& dc) {
  return classify_pseudo_manifold(dc, full_subcomplex(dc));
}

// Fraction-free (Bareiss) elimination with row pivoting; every intermediate
// entry is a minor of the input so the divisions are exact.
long long integer_matrix_rank(std::vector<std::vector<BigInt>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const size_t rows = m.size();
  const size_t cols = m[0].size();
  BigInt prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<long long>(r);
}

namespace {

std::vector<std::vector<BigInt>> boundary_matrix(const SimplicialComplex& sc, int k) {
  const auto& lower = sc.simplices[k - 1];
  const auto& upper = sc.simplices[k];
  std::map<std::vector<int>, size_t> row_of;
  for (size_t i = 0; i < lower.size(); ++i) row_of[lower[i]] = i;

  std::vector<std::vector<BigInt>> m(lower.size(), std::vector<BigInt>(upper.size(), 0));
  for (size_t j = 0; j < upper.size(); ++j) {
    const auto& simplex = upper[j];
    for (size_t omit = 0; omit < simplex.size(); ++omit) {
      std::vector<int> facet;
      for (size_t i = 0; i < simplex.size(); ++i) {
        if (i != omit) facet.push_back(simplex[i]);
      }
      m[row_of.at(facet)][j] += (omit % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

}  // namespace

HomologyProfile betti_numbers(const SimplicialComplex& sc) {
  if (sc.empty() || sc.simplices[0].empty()) {
    throw Error(ErrorCode::empty_complex, "cannot compute homology of an empty complex");
  }
  const int n = sc.dimension();
  std::vector<long long> rank(n + 2, 0);  // rank[k] = rank of boundary map C_k -> C_{k-1}
  for (int k = 1; k <= n; ++k) {
    rank[k] = integer_matrix_rank(boundary_matrix(sc, k));
  }
  HomologyProfile profile;
  for (int k = 0; k <= n; ++k) {
    long long kernel = sc.simplex_count(k) - rank[k];
    profile.betti.push_back(kernel - rank[k + 1]);
  }
  return profile;
}

HomologyProfile betti_numbers(const DualComplex& dc, const Subcomplex& sub) {
  if (sub.empty()) {
    throw Error(ErrorCode::empty_complex, "cannot compute homology of an empty complex");
  }
  return betti_numbers(barycentric_subdivision(dc, sub));
}

HomologyProfile betti_numbers(const DualComplex& dc) {
  return betti_numbers(dc, full_subcomplex(dc));
}

bool is_q_homology_sphere(const HomologyProfile& profile, int n) {
  if (n < 0) return false;
  auto b = [&](int k) -> long long {
    return k < static_cast<int>(profile.betti.size()) ? profile.betti[k] : 0;
  };
  if (b(0) != 1 || b(n) != 1) return false;
  for (int k = 1; k < n; ++k) {
    if (b(k) != 0) return false;
  }
  return true;
}

}  // namespace esskel
