#include "frs/completeness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "frs/errors.hpp"

namespace frs {

std::vector<CriticalPair> critical_pairs(const RewritingSystem& r) {
  std::vector<CriticalPair> out;
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Rule& ri = r.rule(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Rule& rj = r.rule(j);
      const std::size_t li = ri.lhs.size();
      const std::size_t lj = rj.lhs.size();
      for (std::size_t k = 1; k < std::min(li, lj); ++k) {
        if (!ri.lhs.occurs_at(rj.lhs.prefix(k), li - k)) continue;
        Word tail = rj.lhs.sub(k);
        out.push_back(CriticalPair{ri.lhs + tail, ri.rhs + tail, ri.lhs.prefix(li - k) + rj.rhs,
                                   OverlapKind::suffix_prefix, {i, j}, li - k});
      }
      if (i == j || lj > li || (lj == li && i > j)) continue;
      for (std::size_t p = 0; p + lj <= li; ++p) {
        if (!ri.lhs.occurs_at(rj.lhs, p)) continue;
        out.push_back(
            CriticalPair{ri.lhs, ri.rhs, ri.lhs.replaced(p, lj, rj.rhs), OverlapKind::embedding, {i, j}, p});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const CriticalPair& a, const CriticalPair& b) {
    return std::tie(a.rule_indices, a.offset) < std::tie(b.rule_indices, b.offset);
  });
  return out;
}

LocalConfluence check_local_confluence(const RewritingSystem& r, std::size_t step_cap) {
  LocalConfluence out;
  for (const CriticalPair& cp : critical_pairs(r)) {
    Word left;
    Word right;
    try {
      left = normal_form(cp.left_result, r, step_cap);
      right = normal_form(cp.right_result, r, step_cap);
    } catch (const NonTerminationError&) {
      out.status = LocalConfluence::Status::inconclusive;
      out.witness = cp;
      return out;
    }
    if (left != right) {
      out.status = LocalConfluence::Status::counterexample;
      out.witness = cp;
      out.left_normal = std::move(left);
      out.right_normal = std::move(right);
      return out;
    }
    ++out.joined;
  }
  return out;
}

MeasureValue measure_of(const Word& w, const std::vector<Letter>& heavy) {
  MeasureValue v;
  v.length = w.size();
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (std::find(heavy.begin(), heavy.end(), w[p]) != heavy.end()) {
      ++v.heavy_count;
      v.heavy_distance += w.size() - 1 - p;
    }
  }
  return v;
}

bool measure_decreases(const Word& from, const Word& to, const HeavyMeasure& m) {
  MeasureValue a = measure_of(from, m.heavy);
  MeasureValue b = measure_of(to, m.heavy);
  if (m.priority == HeavyMeasure::Priority::length_first)
    return std::tie(a.length, a.heavy_count, a.heavy_distance) > std::tie(b.length, b.heavy_count, b.heavy_distance);
  // The distance sum is only comparable across equal lengths.
  if (a.heavy_count != b.heavy_count) return a.heavy_count > b.heavy_count;
  if (a.length != b.length) return a.length > b.length;
  return a.heavy_distance > b.heavy_distance;
}

namespace {

bool rules_decrease(const RewritingSystem& r, const HeavyMeasure& m) {
  return std::all_of(r.rules().begin(), r.rules().end(),
                     [&](const Rule& rule) { return measure_decreases(rule.lhs, rule.rhs, m); });
}

std::string measure_name(const HeavyMeasure& m, const Alphabet& alphabet) {
  std::string out = m.priority == HeavyMeasure::Priority::length_first ? "length, then" : "heavy count, then length, then";
  out += " rightward heavy-letter measure {";
  for (std::size_t i = 0; i < m.heavy.size(); ++i) {
    if (i) out += ' ';
    out += alphabet.name(m.heavy[i]);
  }
  return out + "}";
}

std::optional<HeavyMeasure> find_measure(const RewritingSystem& r, const TerminationOptions& options) {
  const HeavyMeasure::Priority priorities[] = {HeavyMeasure::Priority::length_first,
                                               HeavyMeasure::Priority::count_first};
  if (options.heavy) {
    for (auto p : priorities) {
      HeavyMeasure m{*options.heavy, p};
      if (rules_decrease(r, m)) return m;
    }
    return std::nullopt;
  }
  const std::size_t k = r.alphabet().size();
  if (k > options.max_search_letters) return std::nullopt;
  std::vector<std::uint32_t> masks(std::size_t{1} << k);
  for (std::uint32_t i = 0; i < masks.size(); ++i) masks[i] = i;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  for (std::uint32_t mask : masks) {
    std::vector<Letter> heavy;
    for (std::uint32_t b = 0; b < k; ++b)
      if (mask & (1u << b)) heavy.push_back(Letter{b});
    for (auto p : priorities) {
      HeavyMeasure m{heavy, p};
      if (rules_decrease(r, m)) return m;
    }
  }
  return std::nullopt;
}

// Depth-first search for a cycle in the reduction graph restricted to words of
// length <= max_len. Returns the cycle (first word repeated at the end).
std::optional<std::vector<Word>> find_cycle(const RewritingSystem& r, std::size_t max_len) {
  enum Color : unsigned char { grey = 1, black = 2 };
  std::unordered_map<Word, Color, WordHash> color;
  struct Frame {
    Word word;
    std::vector<Word> next;
    std::size_t i = 0;
  };
  auto successors = [&](const Word& w) {
    std::vector<Word> out;
    for (auto& [step, v] : one_step_reductions(w, r))
      if (v.size() <= max_len) out.push_back(std::move(v));
    return out;
  };
  std::optional<std::vector<Word>> cycle;
  auto letters = r.alphabet().letters();
  for_each_word(letters, max_len, [&](const Word& root) {
    if (color.count(root)) return true;
    std::vector<Frame> stack;
    color[root] = grey;
    stack.push_back(Frame{root, successors(root)});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.i == f.next.size()) {
        color[f.word] = black;
        stack.pop_back();
        continue;
      }
      Word v = f.next[f.i++];
      auto it = color.find(v);
      if (it == color.end()) {
        color[v] = grey;
        auto succ = successors(v);
        stack.push_back(Frame{std::move(v), std::move(succ)});
      } else if (it->second == grey) {
        std::vector<Word> trace;
        bool on = false;
        for (auto& fr : stack) {
          if (fr.word == v) on = true;
          if (on) trace.push_back(fr.word);
        }
        trace.push_back(v);
        cycle = std::move(trace);
        return false;
      }
    }
    return true;
  });
  return cycle;
}

}  // namespace

Termination check_termination(const RewritingSystem& r, const TerminationOptions& options) {
  Termination out;
  if (std::all_of(r.rules().begin(), r.rules().end(),
                  [](const Rule& rule) { return rule.lhs.size() > rule.rhs.size(); })) {
    out.status = Termination::Status::certified;
    out.certificate = "length-reducing";
    return out;
  }
  if (auto m = find_measure(r, options)) {
    out.status = Termination::Status::certified;
    out.certificate = measure_name(*m, r.alphabet());
    out.measure = std::move(m);
    return out;
  }
  double words = 0;
  for (std::size_t len = 1; len <= options.max_len; ++len)
    words += std::pow(static_cast<double>(r.alphabet().size()), static_cast<double>(len));
  if (words > static_cast<double>(options.max_words)) {
    out.status = Termination::Status::unknown;
    out.certificate = "no certificate; bounded search space too large";
    return out;
  }
  out.bound = options.max_len;
  if (auto cycle = find_cycle(r, options.max_len)) {
    out.status = Termination::Status::counterexample;
    out.certificate = "reduction cycle";
    out.cycle = std::move(*cycle);
  } else {
    out.status = Termination::Status::bounded_verified;
    out.certificate = "no cycle among words of length <= " + std::to_string(options.max_len);
  }
  return out;
}

CompletenessReport verify_complete(const RewritingSystem& r, const TerminationOptions& options,
                                   std::size_t step_cap) {
  CompletenessReport out;
  out.termination = check_termination(r, options);
  out.local_confluence = check_local_confluence(r, step_cap);
  using TS = Termination::Status;
  using LS = LocalConfluence::Status;
  const bool terminates = out.termination.status == TS::certified || out.termination.status == TS::bounded_verified;
  if (terminates && out.local_confluence.status == LS::all_joined)
    out.verdict = CompletenessReport::Verdict::complete;
  else if (out.termination.status == TS::counterexample || out.local_confluence.status == LS::counterexample)
    out.verdict = CompletenessReport::Verdict::incomplete;
  else
    out.verdict = CompletenessReport::Verdict::inconclusive;
  return out;
}

std::string to_string(CompletenessReport::Verdict v) {
  switch (v) {
    case CompletenessReport::Verdict::complete: return "complete";
    case CompletenessReport::Verdict::incomplete: return "incomplete";
    case CompletenessReport::Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string describe(const CompletenessReport& report, const Alphabet& alphabet) {
  std::ostringstream os;
  const Termination& t = report.termination;
  os << "termination: ";
  switch (t.status) {
    case Termination::Status::certified: os << "certified (" << t.certificate << ")"; break;
    case Termination::Status::bounded_verified: os << "bounded-verified (" << t.certificate << ")"; break;
    case Termination::Status::counterexample: {
      os << "counterexample (cycle:";
      for (std::size_t i = 0; i < t.cycle.size(); ++i) os << (i ? " -> " : " ") << alphabet.format(t.cycle[i]);
      os << ")";
      break;
    }
    case Termination::Status::unknown: os << "unknown (" << t.certificate << ")"; break;
  }
  os << "\nlocal confluence: ";
  const LocalConfluence& lc = report.local_confluence;
  switch (lc.status) {
    case LocalConfluence::Status::all_joined: os << "all " << lc.joined << " critical pairs joined"; break;
    case LocalConfluence::Status::counterexample:
      os << "counterexample: " << alphabet.format(lc.witness->source) << " -> "
         << alphabet.format(lc.witness->left_result) << " | " << alphabet.format(lc.witness->right_result)
         << ", normal forms " << alphabet.format(lc.left_normal) << " != " << alphabet.format(lc.right_normal);
      break;
    case LocalConfluence::Status::inconclusive:
      os << "inconclusive (step cap exceeded at " << alphabet.format(lc.witness->source) << ")";
      break;
  }
  os << "\nverdict: " << to_string(report.verdict) << "\n";
  return os.str();
}

}  // namespace frs
