#include "frs/letter_intro.hpp"

#include <algorithm>
#include <map>

#include "frs/errors.hpp"

namespace frs {

Word rho_s(const Word& w, const Word& w0, Letter s) {
  std::vector<Letter> reversed;
  std::size_t end = w.size();
  while (end > 0) {
    if (end >= w0.size() && w.occurs_at(w0, end - w0.size())) {
      reversed.push_back(s);
      end -= w0.size();
    } else {
      reversed.push_back(w[end - 1]);
      --end;
    }
  }
  std::reverse(reversed.begin(), reversed.end());
  return Word(std::move(reversed));
}

Word phi_s(const Word& u, const Word& w0, Letter s) {
  Word out;
  for (Letter l : u) {
    if (l == s)
      out += w0;
    else
      out += l;
  }
  return out;
}

std::vector<SelfOverlap> self_overlaps(const Word& w0) {
  std::vector<SelfOverlap> out;
  for (std::size_t k = 1; k < w0.size(); ++k) {
    if (w0.prefix(k) == w0.suffix(k)) out.push_back(SelfOverlap{w0.prefix(w0.size() - k), w0.prefix(k), w0.sub(k)});
  }
  return out;
}

namespace {

class RuleCollector {
 public:
  void add(Word lhs, Word rhs, const std::string& tag) {
    Rule rule{std::move(lhs), std::move(rhs)};
    auto it = std::find(rules_.begin(), rules_.end(), rule);
    if (it == rules_.end()) {
      rules_.push_back(std::move(rule));
      tags_.push_back({tag});
      return;
    }
    auto& tags = tags_[static_cast<std::size_t>(it - rules_.begin())];
    if (std::find(tags.begin(), tags.end(), tag) == tags.end()) tags.push_back(tag);
  }

  std::vector<Rule> rules_;
  std::vector<std::vector<std::string>> tags_;
};

// One way w0 can straddle the left side of a rule: `prefix` is the part of w0
// before the lhs (w0 = prefix . lhs[0,k)), `suffix` the part after it
// (w0 = lhs[|lhs|-m, |lhs|) . suffix). k == 0 / m == 0 mean no overlap on that side.
struct Straddle {
  std::size_t k = 0;
  std::size_t m = 0;
};

std::vector<Straddle> straddles(const Word& lhs, const Word& w0) {
  std::vector<std::size_t> left{0};
  std::vector<std::size_t> right{0};
  const std::size_t bound = std::min(lhs.size(), w0.size());
  for (std::size_t k = 1; k <= bound; ++k) {
    if (w0.occurs_at(lhs.prefix(k), w0.size() - k)) left.push_back(k);
    if (lhs.occurs_at(w0.prefix(k), lhs.size() - k)) right.push_back(k);
  }
  std::vector<Straddle> out;
  for (std::size_t k : left)
    for (std::size_t m : right)
      if (k + m <= lhs.size()) out.push_back({k, m});
  return out;
}

}  // namespace

LetterIntroResult build_letter_intro(const RewritingSystem& r, const Word& w0, const std::string& s_name,
                                     std::size_t step_cap) {
  const Alphabet& a = r.alphabet();
  if (w0.size() < 2) throw PreconditionError("w0 must have at least two letters");
  if (!a.contains(w0)) throw InputError("w0 contains a letter outside the alphabet");
  if (!is_irreducible(w0, r)) throw PreconditionError("w0 = " + a.format(w0) + " is reducible");
  if (a.find(s_name)) throw PreconditionError("letter name '" + s_name + "' already in the alphabet");

  Alphabet b = a;
  const Letter s = b.add(s_name);
  auto rho = [&](const Word& w) { return rho_s(w, w0, s); };

  // Grouped by family so the output order is C1, C2, ..., C6.
  std::map<std::string, RuleCollector> families;
  for (const Rule& rule : r.rules()) {
    for (const Straddle& st : straddles(rule.lhs, w0)) {
      if (st.k == 0 && st.m == 0) {
        families["C1"].add(rho(rule.lhs), rho(rule.rhs), "C1");
        continue;
      }
      // A side without overlap contributes no context.
      Word assembled = (st.k ? w0.prefix(w0.size() - st.k) : Word{}) + rule.lhs + (st.m ? w0.sub(st.m) : Word{});
      Word target = normal_form(assembled, r, step_cap);
      const char* tag = st.m == 0 ? "C3" : st.k == 0 ? "C4" : "C5";
      families[tag].add(rho(assembled), rho(target), tag);
    }
  }
  families["C2"].add(w0, Word(s), "C2");
  for (const SelfOverlap& o : self_overlaps(w0)) families["C6"].add(s + o.x3, o.x1 + s, "C6");

  RuleCollector all;
  for (auto& [family, collected] : families) {
    for (std::size_t i = 0; i < collected.rules_.size(); ++i)
      all.add(collected.rules_[i].lhs, collected.rules_[i].rhs, family);
  }
  std::vector<std::string> joined;
  for (auto& tags : all.tags_) {
    std::string t;
    for (auto& tag : tags) t += (t.empty() ? "" : " ") + tag;
    joined.push_back(t);
  }
  LetterIntroResult out{s, w0, RewritingSystem(std::move(b), all.rules_, joined), all.tags_, a.size()};
  return out;
}

}  // namespace frs
