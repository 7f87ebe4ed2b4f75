#include "frs/rewriting.hpp"

#include <algorithm>
#include <unordered_map>

#include "frs/errors.hpp"

namespace frs {

RewritingSystem::RewritingSystem(Alphabet alphabet, std::vector<Rule> rules,
                                 std::vector<std::string> provenance)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)), provenance_(std::move(provenance)) {
  provenance_.resize(rules_.size());
  by_first_letter_.assign(alphabet_.size(), {});
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    if (r.lhs.empty() || r.rhs.empty()) throw InputError("rule " + std::to_string(i) + " has an empty side");
    if (!alphabet_.contains(r.lhs) || !alphabet_.contains(r.rhs))
      throw InputError("rule " + std::to_string(i) + " uses a letter outside the alphabet");
    by_first_letter_[r.lhs.front().id].push_back(i);
    max_lhs_ = std::max(max_lhs_, r.lhs.size());
  }
}

std::vector<std::size_t> RewritingSystem::matches_at(const Word& w, std::size_t pos) const {
  std::vector<std::size_t> out;
  if (pos >= w.size()) return out;
  for (std::size_t i : by_first_letter_[w[pos].id]) {
    if (w.occurs_at(rules_[i].lhs, pos)) out.push_back(i);
  }
  return out;
}

std::string RewritingSystem::format(const Rule& r) const {
  return alphabet_.format(r.lhs) + " -> " + alphabet_.format(r.rhs);
}

namespace {

void require_input(const Word& w, const RewritingSystem& r) {
  if (w.empty()) throw InputError("cannot rewrite the empty word");
  if (!r.alphabet().contains(w)) throw InputError("word contains a letter outside the alphabet");
}

bool any_match_at(const Word& w, const RewritingSystem& r, std::size_t pos) {
  return !r.matches_at(w, pos).empty();
}

}  // namespace

std::vector<std::pair<ReductionStep, Word>> one_step_reductions(const Word& w, const RewritingSystem& r) {
  require_input(w, r);
  std::vector<std::pair<ReductionStep, Word>> out;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t i : r.matches_at(w, pos)) {
      const Rule& rule = r.rule(i);
      out.emplace_back(ReductionStep{i, pos}, w.replaced(pos, rule.lhs.size(), rule.rhs));
    }
  }
  return out;
}

bool is_irreducible(const Word& w, const RewritingSystem& r) {
  require_input(w, r);
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (any_match_at(w, r, pos)) return false;
  }
  return true;
}

std::optional<ReductionStep> find_redex(const Word& w, const RewritingSystem& r, Strategy strategy) {
  require_input(w, r);
  for (std::size_t k = 0; k < w.size(); ++k) {
    std::size_t pos = strategy == Strategy::leftmost ? k : w.size() - 1 - k;
    auto m = r.matches_at(w, pos);
    if (!m.empty()) return ReductionStep{m.front(), pos};
  }
  return std::nullopt;
}

namespace {

constexpr std::size_t kTraceLength = 64;

Word rewrite_at(const Word& w, const RewritingSystem& r, const ReductionStep& step) {
  const Rule& rule = r.rule(step.rule_index);
  return w.replaced(step.position, rule.lhs.size(), rule.rhs);
}

// Replays the first kTraceLength steps so callers get a witness without every
// normal-form computation paying for trace bookkeeping.
[[noreturn]] void throw_step_cap(const Word& w, const RewritingSystem& r, std::size_t step_cap,
                                 Strategy strategy) {
  std::vector<Word> trace{w};
  Word cur = w;
  while (trace.size() < kTraceLength) {
    auto redex = find_redex(cur, r, strategy);
    if (!redex) break;
    cur = rewrite_at(cur, r, *redex);
    trace.push_back(cur);
  }
  throw NonTerminationError("possible non-termination: step cap " + std::to_string(step_cap) + " exceeded",
                            std::move(trace));
}

}  // namespace

Word normal_form(const Word& w, const RewritingSystem& r, std::size_t step_cap, Strategy strategy) {
  require_input(w, r);
  Word cur = w;
  if (strategy == Strategy::rightmost) {
    for (std::size_t steps = 0;; ++steps) {
      auto redex = find_redex(cur, r, strategy);
      if (!redex) return cur;
      if (steps >= step_cap) throw_step_cap(w, r, step_cap, strategy);
      cur = rewrite_at(cur, r, *redex);
    }
  }
  // Positions before the last rewrite held no redex, so the leftmost scan can
  // resume max_lhs - 1 letters before it.
  std::size_t start = 0;
  std::size_t steps = 0;
  const std::size_t back = r.max_lhs_length() > 0 ? r.max_lhs_length() - 1 : 0;
  while (true) {
    bool rewrote = false;
    for (std::size_t pos = start; pos < cur.size(); ++pos) {
      auto m = r.matches_at(cur, pos);
      if (m.empty()) continue;
      if (steps >= step_cap) throw_step_cap(w, r, step_cap, strategy);
      cur = rewrite_at(cur, r, ReductionStep{m.front(), pos});
      ++steps;
      start = pos > back ? pos - back : 0;
      rewrote = true;
      break;
    }
    if (!rewrote) return cur;
  }
}

std::size_t disorder(const Word& w, const RewritingSystem& r, std::size_t step_cap) {
  require_input(w, r);
  std::unordered_map<Word, std::size_t, WordHash> memo;
  std::unordered_map<Word, bool, WordHash> on_stack;

  struct Frame {
    Word word;
    std::vector<Word> children;
    std::size_t next = 0;
    std::size_t best = 0;
  };
  auto children_of = [&](const Word& x) {
    std::vector<Word> out;
    for (auto& [step, v] : one_step_reductions(x, r)) out.push_back(std::move(v));
    return out;
  };

  std::vector<Frame> stack;
  stack.push_back(Frame{w, children_of(w)});
  on_stack[w] = true;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < f.children.size()) {
      Word child = f.children[f.next++];
      if (auto it = memo.find(child); it != memo.end()) {
        f.best = std::max(f.best, it->second + 1);
        continue;
      }
      if (on_stack[child]) {
        std::vector<Word> trace;
        for (auto& fr : stack) trace.push_back(fr.word);
        trace.push_back(child);
        throw NonTerminationError("non-termination: reduction cycle found", std::move(trace));
      }
      if (memo.size() + stack.size() >= step_cap) {
        std::vector<Word> trace;
        for (auto& fr : stack) trace.push_back(fr.word);
        throw NonTerminationError("possible non-termination: step cap " + std::to_string(step_cap) +
                                      " exceeded",
                                  std::move(trace));
      }
      on_stack[child] = true;
      auto grand = children_of(child);
      stack.push_back(Frame{std::move(child), std::move(grand)});
      continue;
    }
    std::size_t value = f.best;
    Word done = std::move(f.word);
    stack.pop_back();
    on_stack[done] = false;
    memo[done] = value;
    if (!stack.empty()) stack.back().best = std::max(stack.back().best, value + 1);
  }
  return memo.at(w);
}

Reachability reaches(const Word& from, const Word& to, const RewritingSystem& r, std::size_t node_cap) {
  require_input(from, r);
  bool exhausted = true;
  auto found = find_descendant(from, r, [&](const Word& x) { return x == to; }, node_cap, &exhausted);
  if (found) return Reachability::yes;
  return exhausted ? Reachability::no : Reachability::unknown;
}

}  // namespace frs
