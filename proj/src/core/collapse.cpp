#include "core/collapse.hpp"

#include <algorithm>
#include <unordered_set>

#include "core/errors.hpp"

namespace esskel {

namespace {

struct Search {
  const DualComplex& dc;
  std::vector<char> live;
  std::vector<char> in_target;
  long long target_size;
  long long live_size;
  long long budget;
  long long tried = 0;
  bool exhausted = false;
  std::vector<CollapseStep> steps;
  std::unordered_set<std::string> visited;

  std::string state_key() const {
    std::string key((live.size() + 7) / 8, '\0');
    for (size_t i = 0; i < live.size(); ++i) {
      if (live[i]) key[i / 8] = static_cast<char>(key[i / 8] | (1 << (i % 8)));
    }
    return key;
  }

  // The unique live proper coface, or -1 when the count is not exactly one.
  int unique_live_coface(int cell) const {
    int found = -1;
    for (int cof : dc.proper_cofaces(cell)) {
      if (!live[cof]) continue;
      if (found >= 0) return -1;
      found = cof;
    }
    return found;
  }

  bool dfs() {
    if (live_size == target_size) return true;
    if (!visited.insert(state_key()).second) return false;
    for (size_t cell = 0; cell < live.size(); ++cell) {
      if (!live[cell] || in_target[cell]) continue;
      int cof = unique_live_coface(static_cast<int>(cell));
      if (cof < 0 || in_target[cof]) continue;
      if (tried >= budget) {
        exhausted = true;
        return false;
      }
      ++tried;
      live[cell] = 0;
      live[cof] = 0;
      live_size -= 2;
      steps.push_back({static_cast<int>(cell), cof});
      if (dfs()) return true;
      steps.pop_back();
      live[cell] = 1;
      live[cof] = 1;
      live_size += 2;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

CollapseSearchResult find_collapse_sequence(const DualComplex& dc, const Subcomplex& start,
                                            const Subcomplex& target,
                                            const CollapseOptions& options) {
  for (int c : target.cells) {
    if (!start.contains(c)) {
      throw Error(ErrorCode::containment,
                  "target cell \"" + dc.cells()[c].id + "\" is not part of the start complex");
    }
  }
  Search search{dc,
                std::vector<char>(dc.cells().size(), 0),
                std::vector<char>(dc.cells().size(), 0),
                static_cast<long long>(target.cells.size()),
                static_cast<long long>(start.cells.size()),
                options.budget,
                0,
                false,
                {},
                {}};
  for (int c : start.cells) search.live[c] = 1;
  for (int c : target.cells) search.in_target[c] = 1;

  CollapseSearchResult result;
  if (search.dfs()) {
    result.sequence = CollapseSequence{search.steps};
  }
  result.budget_exhausted = search.exhausted;
  result.steps_tried = search.tried;
  return result;
}

CollapseVerification verify_collapse_sequence(const DualComplex& dc, const Subcomplex& start,
                                              const Subcomplex& target,
                                              const CollapseSequence& sequence) {
  CollapseVerification verdict;
  std::vector<char> live(dc.cells().size(), 0);
  for (int c : start.cells) live[c] = 1;
  std::vector<char> in_target(dc.cells().size(), 0);
  for (int c : target.cells) {
    if (!start.contains(c)) {
      verdict.reason = "target cell \"" + dc.cells()[c].id + "\" is not part of the start complex";
      return verdict;
    }
    in_target[c] = 1;
  }

  auto fail_step = [&](long long i, std::string reason) {
    verdict.first_bad_step = i;
    verdict.reason = std::move(reason);
    return verdict;
  };
  for (size_t i = 0; i < sequence.steps.size(); ++i) {
    const CollapseStep& step = sequence.steps[i];
    const long long idx = static_cast<long long>(i);
    if (step.free_face < 0 || step.free_face >= static_cast<int>(live.size()) ||
        step.coface < 0 || step.coface >= static_cast<int>(live.size())) {
      return fail_step(idx, "step references a cell outside the complex");
    }
    const std::string& face_id = dc.cells()[step.free_face].id;
    const std::string& cof_id = dc.cells()[step.coface].id;
    if (!live[step.free_face]) {
      return fail_step(idx, "free face \"" + face_id + "\" is not live");
    }
    if (!live[step.coface]) {
      return fail_step(idx, "coface \"" + cof_id + "\" is not live");
    }
    if (in_target[step.free_face] || in_target[step.coface]) {
      return fail_step(idx, "step removes a target cell");
    }
    int count = 0;
    bool matches = false;
    for (int cof : dc.proper_cofaces(step.free_face)) {
      if (!live[cof]) continue;
      ++count;
      if (cof == step.coface) matches = true;
    }
    if (!matches) {
      return fail_step(idx, "\"" + cof_id + "\" is not a live proper coface of \"" + face_id + "\"");
    }
    if (count != 1) {
      return fail_step(idx, "\"" + face_id + "\" is not free: it has " + std::to_string(count) +
                                " live proper cofaces");
    }
    live[step.free_face] = 0;
    live[step.coface] = 0;
  }

  for (size_t c = 0; c < live.size(); ++c) {
    bool should_live = in_target[c] != 0;
    if (live[c] && !should_live) verdict.residual.push_back(static_cast<int>(c));
    if (!live[c] && should_live) {
      verdict.reason = "target cell \"" + dc.cells()[c].id + "\" was removed";
      return verdict;
    }
  }
  if (!verdict.residual.empty()) {
    verdict.reason = "replay ends above the target; " +
                     std::to_string(verdict.residual.size()) + " residual cell(s)";
    return verdict;
  }
  verdict.ok = true;
  return verdict;
}

}  // namespace esskel
