#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/dual_complex.hpp"

namespace esskel {

// One elementary collapse: a free face together with its unique proper
// coface. Removing the pair preserves the homotopy type.
struct CollapseStep {
  int free_face = -1;
  int coface = -1;
};

struct CollapseSequence {
  std::vector<CollapseStep> steps;
};

struct CollapseOptions {
  long long budget = 1000000;  // counts attempted pair removals
};

struct CollapseSearchResult {
  std::optional<CollapseSequence> sequence;
  bool budget_exhausted = false;
  long long steps_tried = 0;
};

// Deterministic depth-first search with backtracking for a sequence of
// elementary collapses from `start` down to exactly `target`. Candidate free
// faces are scanned in canonical cell order; visited states are pruned. A
// free face is a live cell outside the target whose set of live proper
// cofaces is a single cell, itself outside the target (uniqueness of the
// coface forces it to be maximal of one dimension higher).
//
// An empty result means the bounded search failed; it is not a proof that no
// collapse sequence exists. Throws containment_error if target is not
// contained in start.
CollapseSearchResult find_collapse_sequence(const DualComplex& dc, const Subcomplex& start,
                                            const Subcomplex& target,
                                            const CollapseOptions& options = {});

struct CollapseVerification {
  bool ok = false;
  long long first_bad_step = -1;  // -1 when the replay itself is fine
  std::string reason;
  std::vector<int> residual;  // live \ target cells after a full replay
};

// Independent checker: replays the sequence from `start`, validating the
// free-face condition at every step, and requires the final state to equal
// `target`. Never throws; the verdict carries diagnostics.
CollapseVerification verify_collapse_sequence(const DualComplex& dc, const Subcomplex& start,
                                              const Subcomplex& target,
                                              const CollapseSequence& sequence);

}  // namespace esskel
