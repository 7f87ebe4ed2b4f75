#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "frs/pipeline.hpp"
#include "frs/rewriting.hpp"

namespace frs {

/// Letters of the prepared alphabet split by where their class lies.
struct LetterClassification {
  std::vector<Letter> a1;        ///< class in T
  std::vector<Letter> a_s;       ///< the complement letters themselves
  std::vector<Letter> excluded;  ///< other letters rewriting to a complement letter
};

/// Role of a letter of B: an original letter of A1, or one of the five
/// boundary-letter kinds with images as, sa, ss', s'as, ss's''.
enum class BKind { a1, c_r, c_l1, c_l2, c_m1, c_m2 };

std::string to_string(BKind kind);

struct BLetterInfo {
  BKind kind = BKind::a1;
  Word image;  ///< over A; length 1 for a1, 2 or 3 otherwise
};

struct BAlphabet {
  Alphabet alphabet;
  std::vector<BLetterInfo> table;  ///< indexed by letter id of `alphabet`
};

struct FSets {
  std::vector<Word> f1;  ///< single letters of A1
  std::vector<Word> f2;  ///< s b
  std::vector<Word> f3;  ///< a s
  std::vector<Word> f4;  ///< s b s'
};

/// Requires a prepared presentation (complement of single irreducible letters).
LetterClassification classify_letters(const Presentation& p, std::size_t step_cap = kDefaultStepCap);

/// Whether the class of `w` lies in T, i.e. its normal form is not a complement letter.
bool in_T(const Word& w, const Presentation& p, std::size_t step_cap = kDefaultStepCap);

/// Whether `w` lies in T and every factor outside T is a single complement letter.
/// Decided by checking all factors.
bool in_AT(const Word& w, const Presentation& p, std::size_t step_cap = kDefaultStepCap);

FSets build_f_sets(const LetterClassification& cls, const Presentation& p, std::size_t step_cap = kDefaultStepCap);

/// A1 letters keep their names; every F2, F3, F4 word u gets a fresh letter
/// c_<letters of u joined by '_'>, kinds in the order C_R, C_L1, C_L2, C_M1, C_M2.
BAlphabet build_b_alphabet(const FSets& f, const LetterClassification& cls, const Alphabet& a);

/// Homomorphic image over A of a word over B.
Word phi_t(const Word& u, const BAlphabet& b);

struct LargeSubConstruction {
  Presentation source;
  LetterClassification classification;
  FSets f_sets;
  BAlphabet b;
  RewritingSystem r_t;  ///< provenance "D1" or "D2"
  std::size_t n_bound = 0;
  std::size_t subsemigroup_bound = 0;
  std::unordered_map<Word, Letter, WordHash> base_letters;  ///< F-set word -> its letter of B
  std::size_t step_cap = kDefaultStepCap;

  /// C_R, C_M1 and C_M2 letters: the ones D2 rules push rightwards.
  std::vector<Letter> heavy_letters() const;
  BKind kind(Letter b_letter) const { return b.table[b_letter.id].kind; }
};

/// Encoding of a word of A(T) over B by peeling a1 letters and s b prefixes
/// until an F-set word remains. Throws PreconditionError when `w` is not in A(T).
Word rho_t(const Word& w, const LargeSubConstruction& c);

struct ConstructionOptions {
  bool interreduce = false;
  std::size_t step_cap = kDefaultStepCap;
  std::size_t subsemigroup_bound = 6;
};

/// Builds B and the D1/D2 rules. Throws PreconditionError when `p` is not
/// prepared or fails the bounded subsemigroup check, and Error when B is empty.
LargeSubConstruction build_construction(const Presentation& p, const ConstructionOptions& options = {});

/// Presentation of T over B carrying the images of the boundary letters.
Presentation to_presentation(const LargeSubConstruction& c);

/// Rebuilds a construction from a prepared source and a presentation over B
/// whose boundary letters carry their images (as written by to_presentation).
/// The rules are taken from `t` as given.
LargeSubConstruction construction_from(const Presentation& source, const Presentation& t,
                                       std::size_t step_cap = kDefaultStepCap);

}  // namespace frs
