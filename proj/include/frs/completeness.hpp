#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frs/rewriting.hpp"

namespace frs {

enum class OverlapKind { suffix_prefix, embedding };

/// Superposition of two rules: `source` rewrites to `left_result` by the first
/// rule and to `right_result` by the second. `offset` is where the second lhs
/// starts inside `source`.
struct CriticalPair {
  Word source;
  Word left_result;
  Word right_result;
  OverlapKind kind = OverlapKind::suffix_prefix;
  std::pair<std::size_t, std::size_t> rule_indices;
  std::size_t offset = 0;
};

/// All suffix/prefix overlaps (self-overlaps included) and lhs embeddings,
/// ordered by rule indices, then offset. Identical left sides yield one pair.
std::vector<CriticalPair> critical_pairs(const RewritingSystem& r);

struct LocalConfluence {
  enum class Status { all_joined, counterexample, inconclusive };
  Status status = Status::all_joined;
  std::size_t joined = 0;
  std::optional<CriticalPair> witness;
  Word left_normal;
  Word right_normal;
};

LocalConfluence check_local_confluence(const RewritingSystem& r, std::size_t step_cap = kDefaultStepCap);

/// Lexicographic termination measure built from a set of heavy letters and the
/// distances of their occurrences from the right end of the word.
///
/// length_first orders by (length, heavy count, heavy distance sum);
/// count_first orders by (heavy count, length, heavy distance sum). Both are
/// compatible with concatenation, so a rule set that strictly decreases either
/// one on every rule terminates.
struct HeavyMeasure {
  enum class Priority { length_first, count_first };
  std::vector<Letter> heavy;
  Priority priority = Priority::length_first;
};

struct MeasureValue {
  std::size_t length = 0;
  std::size_t heavy_count = 0;
  std::size_t heavy_distance = 0;
};

MeasureValue measure_of(const Word& w, const std::vector<Letter>& heavy);

/// True iff the measure strictly decreases from `from` to `to`.
bool measure_decreases(const Word& from, const Word& to, const HeavyMeasure& m);

struct Termination {
  enum class Status { certified, bounded_verified, counterexample, unknown };
  Status status = Status::unknown;
  std::string certificate;
  std::optional<HeavyMeasure> measure;
  std::size_t bound = 0;
  std::vector<Word> cycle;
};

struct TerminationOptions {
  std::size_t max_len = 6;
  /// Heavy letters to try for the measure certificate; when absent every subset
  /// of a small enough alphabet is tried, smallest first.
  std::optional<std::vector<Letter>> heavy;
  std::size_t max_search_letters = 12;
  std::size_t max_words = 2000000;
};

/// Certificates first (length-reducing, then heavy-letter measure), then an
/// exhaustive cycle search over words of length <= options.max_len.
Termination check_termination(const RewritingSystem& r, const TerminationOptions& options = {});

struct CompletenessReport {
  enum class Verdict { complete, incomplete, inconclusive };
  Termination termination;
  LocalConfluence local_confluence;
  Verdict verdict = Verdict::inconclusive;
  bool complete() const { return verdict == Verdict::complete; }
};

CompletenessReport verify_complete(const RewritingSystem& r, const TerminationOptions& options = {},
                                   std::size_t step_cap = kDefaultStepCap);

std::string describe(const CompletenessReport& report, const Alphabet& alphabet);
std::string to_string(CompletenessReport::Verdict v);

}  // namespace frs
