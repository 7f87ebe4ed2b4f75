#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frs/word.hpp"

namespace frs {

inline constexpr std::size_t kDefaultStepCap = 100000;

/// lhs -> rhs with both sides nonempty.
struct Rule {
  Word lhs;
  Word rhs;
  bool operator==(const Rule&) const = default;
};

struct ReductionStep {
  std::size_t rule_index = 0;
  std::size_t position = 0;
  bool operator==(const ReductionStep&) const = default;
};

enum class Strategy { leftmost, rightmost };

/// A finite string rewriting system over an alphabet. Immutable once built.
///
/// Each rule may carry a provenance tag (for example "C6" or "D1 D2"); tags are
/// descriptive only and never take part in rewriting or rule equality.
class RewritingSystem {
 public:
  RewritingSystem() = default;
  /// Throws InputError if a rule side is empty or uses a letter outside `alphabet`.
  RewritingSystem(Alphabet alphabet, std::vector<Rule> rules, std::vector<std::string> provenance = {});

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(std::size_t i) const { return rules_[i]; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  /// Tag of rule i, empty when untagged.
  const std::string& provenance(std::size_t i) const { return provenance_[i]; }
  const std::vector<std::string>& provenance() const { return provenance_; }
  std::size_t max_lhs_length() const { return max_lhs_; }

  /// Rules matching `w` at `pos`, in rule order.
  std::vector<std::size_t> matches_at(const Word& w, std::size_t pos) const;

  /// Same alphabet, rules filtered by `keep(index)`.
  template <typename Pred>
  RewritingSystem filtered(Pred keep) const {
    std::vector<Rule> rules;
    std::vector<std::string> tags;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (keep(i)) {
        rules.push_back(rules_[i]);
        tags.push_back(provenance_[i]);
      }
    }
    return RewritingSystem(alphabet_, std::move(rules), std::move(tags));
  }

  std::string format(const Rule& r) const;

 private:
  Alphabet alphabet_;
  std::vector<Rule> rules_;
  std::vector<std::string> provenance_;
  std::vector<std::vector<std::size_t>> by_first_letter_;
  std::size_t max_lhs_ = 0;
};

/// Every one-step reduction of `w`, ordered by (position, rule index).
std::vector<std::pair<ReductionStep, Word>> one_step_reductions(const Word& w, const RewritingSystem& r);

bool is_irreducible(const Word& w, const RewritingSystem& r);

/// First redex under `strategy` (leftmost or rightmost position, lowest rule index).
std::optional<ReductionStep> find_redex(const Word& w, const RewritingSystem& r,
                                        Strategy strategy = Strategy::leftmost);

/// Irreducible descendant reached by the deterministic strategy. Throws
/// NonTerminationError carrying the trace once `step_cap` steps are taken.
Word normal_form(const Word& w, const RewritingSystem& r, std::size_t step_cap = kDefaultStepCap,
                 Strategy strategy = Strategy::leftmost);

/// Longest reduction sequence (in steps) from `w` to an irreducible word.
/// `step_cap` bounds the number of distinct words explored; a cycle or an
/// exceeded cap throws NonTerminationError.
std::size_t disorder(const Word& w, const RewritingSystem& r, std::size_t step_cap = kDefaultStepCap);

enum class Reachability { yes, no, unknown };

/// Whether `from` ->* `to`, by breadth-first search over at most `node_cap` words.
Reachability reaches(const Word& from, const Word& to, const RewritingSystem& r,
                     std::size_t node_cap = kDefaultStepCap);

/// Breadth-first search for a descendant of `from` (including `from`) satisfying `goal`.
template <typename Goal>
std::optional<Word> find_descendant(const Word& from, const RewritingSystem& r, Goal goal,
                                    std::size_t node_cap, bool* exhausted = nullptr);

}  // namespace frs

#include "frs/rewriting_impl.hpp"
