#include "core/subdivision.hpp"

#include <algorithm>
#include <map>

namespace esskel {

long long SimplicialComplex::simplex_count(int k) const {
  if (k < 0 || k >= static_cast<int>(simplices.size())) return 0;
  return static_cast<long long>(simplices[k].size());
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (size_t k = 0; k < simplices.size(); ++k) {
    long long n = static_cast<long long>(simplices[k].size());
    chi += (k % 2 == 0) ? n : -n;
  }
  return chi;
}

SimplicialComplex barycentric_subdivision(const DualComplex& dc, const Subcomplex& sub) {
  // chains_to[c] = every strictly increasing chain whose maximum is c. A
  // face-closed cell set contains all faces of its members, so chains through
  // a live maximum stay inside the subcomplex automatically.
  std::map<int, std::vector<std::vector<int>>> chains_to;
  SimplicialComplex sc;
  for (int c : sub.cells) {
    auto& own = chains_to[c];
    own.push_back({c});
    for (int f : dc.proper_faces(c)) {
      for (const auto& chain : chains_to.at(f)) {
        std::vector<int> extended = chain;
        extended.push_back(c);
        own.push_back(std::move(extended));
      }
    }
    for (const auto& chain : own) {
      size_t k = chain.size() - 1;
      if (sc.simplices.size() <= k) sc.simplices.resize(k + 1);
      sc.simplices[k].push_back(chain);
    }
  }
  for (auto& level : sc.simplices) {
    std::sort(level.begin(), level.end());
  }
  return sc;
}

SimplicialComplex barycentric_subdivision(const DualComplex& dc) {
  return barycentric_subdivision(dc, full_subcomplex(dc));
}

}  // namespace esskel
