#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frs/completeness.hpp"
#include "frs/rewriting.hpp"

namespace frs {

/// Representatives of the finitely many classes outside the subsemigroup.
struct ComplementSpec {
  std::vector<Word> words;
  bool operator==(const ComplementSpec&) const = default;
};

/// A semigroup presentation, optionally with a complement and with the
/// construction metadata that travels through presentation files.
struct Presentation {
  RewritingSystem system;
  std::optional<ComplementSpec> complement;
  /// Name of the construction that produced the system ("letter-intro", "large-sub").
  std::string construction;
  /// Images of letters under the homomorphism back to the source alphabet,
  /// keyed by letter name; letters mapped to themselves are omitted.
  std::map<std::string, std::vector<std::string>> images;
};

/// Normal forms of the complement words, deduplicated, sorted by length then by
/// letter names. Throws InputError when the complement is absent or empty.
ComplementSpec canonicalize_complement(const Presentation& p, std::size_t step_cap = kDefaultStepCap);

struct PipelineOptions {
  TerminationOptions termination;
  std::size_t step_cap = kDefaultStepCap;
  std::string fresh_base = "s";
};

/// Introduces one letter per complement word longer than one letter, shortest
/// first, until every complement normal form is a single letter.
Presentation letterize_complement(const Presentation& p, const PipelineOptions& options = {});

/// Book-Otto interreduction: right sides replaced by normal forms, then rules
/// whose left side is reducible by another rule deleted, until nothing changes.
RewritingSystem interreduce(const RewritingSystem& r, std::size_t step_cap = kDefaultStepCap);

/// Syntactic checks of the two interreduction conditions.
bool rhs_irreducible(const RewritingSystem& r);
bool lhs_interreduced(const RewritingSystem& r);

/// canonicalize -> letterize -> interreduce, re-verifying completeness after each
/// stage. A failed re-verification throws InternalError naming the stage.
Presentation prepare_for_large_sub(const Presentation& p, const PipelineOptions& options = {});

/// True when the complement is single irreducible letters and both
/// interreduction conditions hold.
bool is_prepared(const Presentation& p);

struct SubsemigroupCheck {
  bool passed = true;
  std::size_t bound = 0;
  std::size_t pairs_checked = 0;
  Word left;
  Word right;
};

/// For all irreducible u, v outside the complement with |uv| <= bound, checks
/// that normal_form(uv) is not a complement word. Evidence to the bound only.
SubsemigroupCheck check_subsemigroup_bounded(const Presentation& p, std::size_t bound,
                                             std::size_t step_cap = kDefaultStepCap);

}  // namespace frs
