#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frs/pipeline.hpp"
#include "frs/rewriting.hpp"

namespace fx {

/// Words written either as space-separated names or, when the text has no
/// spaces, one letter per character ("aab").
inline frs::Word word(const frs::Alphabet& a, std::string_view text) {
  if (text.find(' ') != std::string_view::npos) return a.parse(text);
  frs::Word w;
  for (char c : text) w.push_back(a.at(std::string_view(&c, 1)));
  return w;
}

inline frs::Word word(const frs::RewritingSystem& r, std::string_view text) { return word(r.alphabet(), text); }

inline frs::RewritingSystem system(std::vector<std::string> letters,
                                   std::vector<std::pair<std::string, std::string>> rules) {
  frs::Alphabet a;
  for (const auto& l : letters) a.add(l);
  std::vector<frs::Rule> out;
  for (const auto& [l, r] : rules) out.push_back({word(a, l), word(a, r)});
  return frs::RewritingSystem(std::move(a), std::move(out));
}

inline frs::Presentation presentation(frs::RewritingSystem r, std::vector<std::string> complement) {
  frs::Presentation p;
  p.complement = frs::ComplementSpec{};
  for (const auto& c : complement) p.complement->words.push_back(word(r, c));
  p.system = std::move(r);
  return p;
}

inline std::string fmt(const frs::RewritingSystem& r, const frs::Word& w) { return r.alphabet().format(w); }

/// Rules rendered as "lhs -> rhs", in order.
inline std::vector<std::string> rule_strings(const frs::RewritingSystem& r) {
  std::vector<std::string> out;
  for (const auto& rule : r.rules()) out.push_back(r.format(rule));
  return out;
}

struct Named {
  std::string name;
  frs::RewritingSystem system;
};

/// Complete, length-nonincreasing systems used by the sweeps.
inline std::vector<Named> complete_fixtures() {
  return {
      {"cube_to_letter", system({"a"}, {{"aaa", "a"}})},
      {"cube_to_letter_two_letters", system({"a", "b"}, {{"aaa", "a"}})},
      {"square_introduced", system({"a", "s"}, {{"aa", "s"}, {"sa", "as"}})},
      {"product_introduced", system({"a", "b", "s"}, {{"ab", "s"}})},
      {"commutative", system({"a", "b"}, {{"ba", "ab"}})},
      {"idempotent_and_bab", system({"a", "b"}, {{"aa", "a"}, {"bab", "b"}})},
      {"free_two", system({"a", "b"}, {})},
  };
}

}  // namespace fx
