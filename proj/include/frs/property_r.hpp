#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frs/completeness.hpp"
#include "frs/rewriting.hpp"

namespace frs {

struct LetterIntroResult;
struct LargeSubConstruction;

/// A candidate 5-tuple (B, R_T, A(T), phi, rho) relative to a complete system
/// R over A. Membership predicates are supplied as callables so that tuples
/// not built by this library can be checked too.
struct CandidateTuple {
  RewritingSystem r;    ///< over A
  RewritingSystem r_t;  ///< over B
  std::function<Word(const Word&)> phi;     ///< B+ -> A+
  std::function<Word(const Word&)> rho;     ///< A(T) -> B+
  std::function<bool(const Word&)> in_at;   ///< A(T) membership over A
  std::function<bool(const Word&)> in_t;    ///< class lies in T
  /// Measure for the phi-preserving rules; absent means bounded search only.
  std::optional<HeavyMeasure> measure;
  std::string name;
};

/// The letter-introduction tuple relative to the system it was built from: A(S) = A+.
CandidateTuple make_tuple(const RewritingSystem& r, const LetterIntroResult& intro);
/// The large-subsemigroup tuple relative to its prepared source.
CandidateTuple make_tuple(const LargeSubConstruction& c);

struct PropertyResult {
  enum class Status { verified, counterexample, inconclusive };
  Status status = Status::verified;
  std::size_t bound = 0;
  std::size_t witness_count = 0;  ///< number of instances checked
  std::vector<Word> words;        ///< counterexample witness
  std::string detail;
  bool ok() const { return status == Status::verified; }
};

struct PropertyRReport {
  std::array<PropertyResult, 6> properties;  ///< P1..P6
  PropertyResult sandwich;  ///< irreducible T-words <= A(T) <= T-words, phi lands in T
  bool overall() const;
};

struct SweepBounds {
  std::size_t len_a = 8;
  std::size_t len_b = 5;
  std::size_t node_cap = 20000;
  std::size_t step_cap = kDefaultStepCap;
};

PropertyRReport check_p1_to_p6(const CandidateTuple& tuple, const SweepBounds& bounds = {});

struct IsomorphismReport {
  std::size_t slice_bound = 0;
  std::size_t t_classes = 0;      ///< irreducible T-words of length <= bound
  std::size_t b_irreducibles = 0; ///< irreducible B-words of length <= bound
  bool forward_injective = true;
  bool slice_surjective = true;
  std::vector<std::string> mismatches;
  bool ok() const { return forward_injective && slice_surjective && mismatches.empty(); }
};

/// Compares the two normal-form worlds on words up to `bound`. Requires both
/// systems complete; the R-side normal form is the oracle.
IsomorphismReport check_isomorphism_slice(const CandidateTuple& tuple, std::size_t bound,
                                          std::size_t step_cap = kDefaultStepCap);

/// Connected components of the rewriting graph (edges in both directions) on
/// words of length <= max_len over the alphabet of `r`. Classes and their
/// members are in shortlex order. Coarser classes are possible only when a
/// connection needs a longer intermediate word.
std::vector<std::vector<Word>> oracle_classes(const RewritingSystem& r, std::size_t max_len);

std::string describe(const PropertyRReport& report, const Alphabet& a, const Alphabet& b);
std::string describe(const IsomorphismReport& report);

}  // namespace frs
