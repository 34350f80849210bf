#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/document.hpp"

namespace esskel {

// Parameters shared by the corpus generators. Unused fields for a given
// entry are rejected with invalid_params.
struct CorpusParams {
  std::optional<long long> n;        // kodaira_In (n >= 2), kodaira_Instar (n >= 1)
  std::optional<long long> k;        // chain (k >= 2)
  std::optional<std::uint64_t> seed; // random
  std::optional<long long> size;     // random: number of components (1..8)
  std::optional<std::string> base;   // pendant_blowup_of
  std::optional<long long> twist;    // a_j += twist * N_j on every form
  std::optional<long long> tensor;   // (m, a) -> (tensor * m, tensor * a)
};

// Deterministic built-in degenerations:
//   kodaira_In        n components of multiplicity 1 in a cycle
//   kodaira_I0star    central multiplicity-2 component with four tails
//   kodaira_Instar    chain of n+1 multiplicity-2 components, two tails per end
//   chain             path of k reduced components
//   pinched_torus     quotient of the octahedron identifying the two poles
//   pendant_blowup_of interior blow-up of another entry at its first component
//   random            pseudo-random valid fiber, reproducible from the seed
//
// Every entry carries the degree-1 form with a = 0 unless twisted/tensored.
ModelDocument corpus(const std::string& name, const CorpusParams& params = {});

const std::vector<std::string>& corpus_names();

}  // namespace esskel
