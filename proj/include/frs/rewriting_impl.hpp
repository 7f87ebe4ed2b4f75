#pragma once

#include <deque>
#include <unordered_set>

namespace frs {

template <typename Goal>
std::optional<Word> find_descendant(const Word& from, const RewritingSystem& r, Goal goal,
                                    std::size_t node_cap, bool* exhausted) {
  if (exhausted) *exhausted = true;
  std::unordered_set<Word, WordHash> seen{from};
  std::deque<Word> queue{from};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    if (goal(w)) return w;
    for (auto& [step, next] : one_step_reductions(w, r)) {
      if (seen.count(next)) continue;
      if (seen.size() >= node_cap) {
        if (exhausted) *exhausted = false;
        return std::nullopt;
      }
      seen.insert(next);
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace frs
