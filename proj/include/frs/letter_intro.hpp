#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "frs/rewriting.hpp"

namespace frs {

/// Rewriting of words over A into B = A + {s}: scanning from the right, every
/// suffix equal to w0 becomes s. The empty word maps to itself.
Word rho_s(const Word& w, const Word& w0, Letter s);

/// Homomorphism B* -> A* sending s to w0 and fixing every other letter.
Word phi_s(const Word& u, const Word& w0, Letter s);

struct SelfOverlap {
  Word x1;
  Word x2;
  Word x3;
  bool operator==(const SelfOverlap&) const = default;
};

/// Every factorisation w0 = x1 x2 = x2 x3 with all three factors nonempty,
/// shortest border x2 first.
std::vector<SelfOverlap> self_overlaps(const Word& w0);

struct LetterIntroResult {
  Letter new_letter;
  Word w0;
  RewritingSystem r_s;  ///< over B; A keeps its ids and s is appended
  std::vector<std::vector<std::string>> provenance;  ///< per rule of r_s, e.g. {"C3", "C5"}
  std::size_t source_alphabet_size = 0;
};

/// Complete system over A + {s} presenting the same semigroup, with w0 ->* s.
/// Rule families C1..C6 are emitted in that order, deduplicated on (lhs, rhs).
/// Throws PreconditionError if w0 is reducible, shorter than two letters, or
/// `s_name` is already a letter.
LetterIntroResult build_letter_intro(const RewritingSystem& r, const Word& w0, const std::string& s_name,
                                     std::size_t step_cap = kDefaultStepCap);

}  // namespace frs
