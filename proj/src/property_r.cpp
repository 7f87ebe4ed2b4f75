#include "frs/property_r.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <type_traits>
#include <unordered_map>

#include "frs/errors.hpp"
#include "frs/large_sub.hpp"
#include "frs/letter_intro.hpp"
#include "frs/parallel.hpp"

namespace frs {

CandidateTuple make_tuple(const RewritingSystem& r, const LetterIntroResult& intro) {
  CandidateTuple t;
  t.r = r;
  t.r_t = intro.r_s;
  const Word w0 = intro.w0;
  const Letter s = intro.new_letter;
  t.phi = [w0, s](const Word& u) { return phi_s(u, w0, s); };
  t.rho = [w0, s](const Word& w) { return rho_s(w, w0, s); };
  t.in_at = [](const Word&) { return true; };
  t.in_t = [](const Word&) { return true; };
  t.measure = HeavyMeasure{{s}, HeavyMeasure::Priority::length_first};
  t.name = "letter-intro";
  return t;
}

CandidateTuple make_tuple(const LargeSubConstruction& c) {
  auto shared = std::make_shared<const LargeSubConstruction>(c);
  CandidateTuple t;
  t.r = c.source.system;
  t.r_t = c.r_t;
  t.phi = [shared](const Word& u) { return phi_t(u, shared->b); };
  t.rho = [shared](const Word& w) { return rho_t(w, *shared); };
  t.in_at = [shared](const Word& w) { return in_AT(w, shared->source, shared->step_cap); };
  t.in_t = [shared](const Word& w) { return in_T(w, shared->source, shared->step_cap); };
  t.measure = HeavyMeasure{c.heavy_letters(), HeavyMeasure::Priority::count_first};
  t.name = "large-sub";
  return t;
}

bool PropertyRReport::overall() const {
  return sandwich.ok() && std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.ok(); });
}

namespace {

enum class Outcome { ok, fail, unknown };

struct Probe {
  Outcome outcome = Outcome::ok;
  std::vector<Word> words;
  std::string detail;
};

/// Runs `probe` over every item in parallel; the first failure (in item order)
/// becomes the counterexample. A tuple map rejecting its input counts as a
/// failure; an exhausted cap as unknown.
template <typename Items, typename F>
PropertyResult sweep(const Items& items, std::size_t bound, F probe) {
  auto probes = parallel_map<Probe>(items.size(), [&](std::size_t i) {
    auto raised = [&](Outcome o, const std::exception& e) {
      Probe p;
      p.outcome = o;
      if constexpr (std::is_same_v<std::decay_t<decltype(items[i])>, Word>) p.words = {items[i]};
      p.detail = e.what();
      return p;
    };
    try {
      return probe(items[i]);
    } catch (const NonTerminationError& e) {
      return raised(Outcome::unknown, e);
    } catch (const Error& e) {
      return raised(Outcome::fail, e);
    }
  });
  PropertyResult out;
  out.bound = bound;
  out.witness_count = items.size();
  const Probe* unknown = nullptr;
  for (const Probe& p : probes) {
    if (p.outcome == Outcome::fail) {
      out.status = PropertyResult::Status::counterexample;
      out.words = p.words;
      out.detail = p.detail;
      return out;
    }
    if (p.outcome == Outcome::unknown && !unknown) unknown = &p;
  }
  if (unknown) {
    out.status = PropertyResult::Status::inconclusive;
    out.words = unknown->words;
    out.detail = unknown->detail;
  }
  return out;
}

Outcome to_outcome(Reachability r) {
  return r == Reachability::yes ? Outcome::ok : r == Reachability::no ? Outcome::fail : Outcome::unknown;
}

// Follows the leftmost strategy first (cheap, and decisive for complete
// systems), then falls back to breadth-first search.
template <typename Goal>
Outcome descendant_exists(const Word& from, const RewritingSystem& r, Goal goal, const SweepBounds& b) {
  Word cur = from;
  for (std::size_t steps = 0; steps < b.step_cap; ++steps) {
    if (goal(cur)) return Outcome::ok;
    auto redex = find_redex(cur, r);
    if (!redex) break;
    const Rule& rule = r.rule(redex->rule_index);
    cur = cur.replaced(redex->position, rule.lhs.size(), rule.rhs);
  }
  bool exhausted = true;
  if (find_descendant(from, r, goal, b.node_cap, &exhausted)) return Outcome::ok;
  return exhausted ? Outcome::fail : Outcome::unknown;
}

}  // namespace

PropertyRReport check_p1_to_p6(const CandidateTuple& t, const SweepBounds& bounds) {
  PropertyRReport report;
  const auto a_words = words_up_to(t.r.alphabet().letters(), bounds.len_a);
  const auto b_words = words_up_to(t.r_t.alphabet().letters(), bounds.len_b);
  std::vector<Word> at_words;
  {
    auto flags = parallel_map<char>(a_words.size(), [&](std::size_t i) { return t.in_at(a_words[i]) ? 1 : 0; });
    for (std::size_t i = 0; i < a_words.size(); ++i)
      if (flags[i]) at_words.push_back(a_words[i]);
  }

  // P1: every R-step out of U in A(T) is matched by one R_T-step out of rho(U).
  report.properties[0] = sweep(at_words, bounds.len_a, [&](const Word& u) {
    Probe p;
    Word rho_u = t.rho(u);
    auto successors = one_step_reductions(rho_u, t.r_t);
    for (auto& [step, v1] : one_step_reductions(u, t.r)) {
      bool found = false;
      bool unknown = false;
      for (auto& [tstep, u2] : successors) {
        Reachability reach = reaches(v1, t.phi(u2), t.r, bounds.node_cap);
        if (reach == Reachability::yes) {
          found = true;
          break;
        }
        unknown |= reach == Reachability::unknown;
      }
      if (!found) {
        p.outcome = unknown ? Outcome::unknown : Outcome::fail;
        p.words = {u, v1};
        p.detail = "no one-step successor of rho(U) has an image reachable from V1";
        return p;
      }
    }
    return p;
  });

  // P2: it suffices to check each rule, phi being a homomorphism.
  {
    std::vector<std::size_t> idx(t.r_t.size());
    std::iota(idx.begin(), idx.end(), 0);
    report.properties[1] = sweep(idx, 0, [&](std::size_t i) {
      const Rule& rule = t.r_t.rule(i);
      Probe p;
      p.outcome = to_outcome(reaches(t.phi(rule.lhs), t.phi(rule.rhs), t.r, bounds.node_cap));
      if (p.outcome != Outcome::ok) {
        p.words = {rule.lhs, rule.rhs};
        p.detail = "phi(lhs) does not reduce to phi(rhs)";
      }
      return p;
    });
  }

  // P3: termination of the phi-preserving rules.
  {
    RewritingSystem preserving = t.r_t.filtered([&](std::size_t i) {
      return t.phi(t.r_t.rule(i).lhs) == t.phi(t.r_t.rule(i).rhs);
    });
    PropertyResult& p3 = report.properties[2];
    p3.witness_count = preserving.size();
    bool certified = false;
    if (t.measure) {
      certified = std::all_of(preserving.rules().begin(), preserving.rules().end(), [&](const Rule& rule) {
        return measure_decreases(rule.lhs, rule.rhs, *t.measure);
      });
      if (certified) p3.detail = "measure certificate";
    }
    if (!certified) {
      TerminationOptions opts;
      opts.max_len = bounds.len_b;
      Termination term = check_termination(preserving, opts);
      p3.bound = term.bound;
      p3.detail = term.certificate;
      if (term.status == Termination::Status::counterexample) {
        p3.status = PropertyResult::Status::counterexample;
        p3.words = term.cycle;
      } else if (term.status == Termination::Status::unknown) {
        p3.status = PropertyResult::Status::inconclusive;
      }
    }
  }

  // P4: every B-word reaches one whose image lies in A(T).
  report.properties[3] = sweep(b_words, bounds.len_b, [&](const Word& u) {
    Probe p;
    p.outcome = descendant_exists(u, t.r_t, [&](const Word& x) { return t.in_at(t.phi(x)); }, bounds);
    if (p.outcome != Outcome::ok) {
      p.words = {u};
      p.detail = "no descendant with image in A(T)";
    }
    return p;
  });

  // P5: phi(rho(U)) = U on A(T).
  report.properties[4] = sweep(at_words, bounds.len_a, [&](const Word& u) {
    Probe p;
    Word back = t.phi(t.rho(u));
    if (back != u) {
      p.outcome = Outcome::fail;
      p.words = {u, back};
      p.detail = "phi(rho(U)) differs from U";
    }
    return p;
  });

  // P6: U' ->* rho(phi(U')) whenever phi(U') lies in A(T).
  report.properties[5] = sweep(b_words, bounds.len_b, [&](const Word& u) {
    Probe p;
    Word image = t.phi(u);
    if (!t.in_at(image)) return p;
    Word target = t.rho(image);
    p.outcome = descendant_exists(u, t.r_t, [&](const Word& x) { return x == target; }, bounds);
    if (p.outcome != Outcome::ok) {
      p.words = {u, target};
      p.detail = "U' does not reduce to rho(phi(U'))";
    }
    return p;
  });

  // Sandwich of A(T), plus phi landing in T.
  {
    PropertyResult a_side = sweep(a_words, bounds.len_a, [&](const Word& w) {
      Probe p;
      const bool at = t.in_at(w);
      if (at && !t.in_t(w)) {
        p.outcome = Outcome::fail;
        p.words = {w};
        p.detail = "word in A(T) whose class is outside T";
      } else if (!at && t.in_t(w) && is_irreducible(w, t.r)) {
        p.outcome = Outcome::fail;
        p.words = {w};
        p.detail = "irreducible T-word missing from A(T)";
      }
      return p;
    });
    PropertyResult b_side = sweep(b_words, bounds.len_b, [&](const Word& u) {
      Probe p;
      if (!t.in_t(t.phi(u))) {
        p.outcome = Outcome::fail;
        p.words = {u};
        p.detail = "phi(U') outside T";
      }
      return p;
    });
    report.sandwich = a_side.ok() ? b_side : a_side;
    report.sandwich.witness_count = a_side.witness_count + b_side.witness_count;
  }
  return report;
}

IsomorphismReport check_isomorphism_slice(const CandidateTuple& t, std::size_t bound, std::size_t step_cap) {
  IsomorphismReport out;
  out.slice_bound = bound;
  const Alphabet& a = t.r.alphabet();
  const Alphabet& b = t.r_t.alphabet();

  std::vector<Word> t_words;
  for (const Word& w : words_up_to(a.letters(), bound))
    if (is_irreducible(w, t.r) && t.in_t(w)) t_words.push_back(w);
  out.t_classes = t_words.size();

  auto images = parallel_map<Word>(t_words.size(), [&](std::size_t i) {
    return normal_form(t.rho(t_words[i]), t.r_t, step_cap);
  });
  std::map<Word, Word> preimage;
  for (std::size_t i = 0; i < t_words.size(); ++i) {
    const Word& w = t_words[i];
    const Word& u = images[i];
    Word back = normal_form(t.phi(u), t.r, step_cap);
    if (back != w) {
      out.slice_surjective = false;
      out.mismatches.push_back("W = " + a.format(w) + " maps to " + b.format(u) + ", which maps back to " +
                               a.format(back));
    }
    auto [it, fresh] = preimage.emplace(u, w);
    if (!fresh) {
      out.slice_surjective = false;
      out.mismatches.push_back("W = " + a.format(w) + " and " + a.format(it->second) + " both map to " +
                               b.format(u));
    }
  }

  std::vector<Word> b_irr;
  for (const Word& u : words_up_to(b.letters(), bound))
    if (is_irreducible(u, t.r_t)) b_irr.push_back(u);
  out.b_irreducibles = b_irr.size();
  auto round_trips = parallel_map<Word>(b_irr.size(), [&](std::size_t i) {
    return normal_form(t.rho(normal_form(t.phi(b_irr[i]), t.r, step_cap)), t.r_t, step_cap);
  });
  for (std::size_t i = 0; i < b_irr.size(); ++i) {
    if (round_trips[i] != b_irr[i]) {
      out.forward_injective = false;
      out.mismatches.push_back("U' = " + b.format(b_irr[i]) + " round-trips to " + b.format(round_trips[i]));
    }
  }
  return out;
}

std::vector<std::vector<Word>> oracle_classes(const RewritingSystem& r, std::size_t max_len) {
  const auto words = words_up_to(r.alphabet().letters(), max_len);
  std::unordered_map<Word, std::size_t, WordHash> index;
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  std::vector<std::size_t> parent(words.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (auto& [step, v] : one_step_reductions(words[i], r)) {
      auto it = index.find(v);
      if (it == index.end()) continue;
      std::size_t x = find(i), y = find(it->second);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  // Words are already shortlex ordered, so classes come out ordered by their least member.
  std::map<std::size_t, std::vector<Word>> classes;
  for (std::size_t i = 0; i < words.size(); ++i) classes[find(i)].push_back(words[i]);
  std::vector<std::vector<Word>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

namespace {

const char* status_name(PropertyResult::Status s) {
  switch (s) {
    case PropertyResult::Status::verified: return "verified";
    case PropertyResult::Status::counterexample: return "COUNTEREXAMPLE";
    case PropertyResult::Status::inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace

std::string describe(const PropertyRReport& report, const Alphabet& a, const Alphabet& b) {
  std::ostringstream os;
  auto line = [&](const std::string& label, const PropertyResult& p, bool words_over_b) {
    os << label << ": " << status_name(p.status) << " (bound " << p.bound << ", " << p.witness_count
       << " checked";
    if (!p.detail.empty()) os << "; " << p.detail;
    os << ")";
    if (!p.words.empty()) {
      os << " witness:";
      for (const Word& w : p.words) {
        // P1 and P5 witnesses live over A; the others over B.
        const Alphabet& alpha = words_over_b && b.contains(w) ? b : a;
        os << " [" << alpha.format(w) << "]";
      }
    }
    os << "\n";
  };
  const bool over_b[] = {false, true, true, true, false, true};
  for (std::size_t i = 0; i < 6; ++i) line("P" + std::to_string(i + 1), report.properties[i], over_b[i]);
  line("A(T) sandwich", report.sandwich, false);
  os << "overall: " << (report.overall() ? "verified" : "FAILED") << "\n";
  return os.str();
}

std::string describe(const IsomorphismReport& r) {
  std::ostringstream os;
  os << "slice bound: " << r.slice_bound << "\n"
     << "T-classes (irreducible T-words): " << r.t_classes << "\n"
     << "irreducible B-words: " << r.b_irreducibles << "\n"
     << "slice surjective: " << (r.slice_surjective ? "yes" : "no") << "\n"
     << "forward injective: " << (r.forward_injective ? "yes" : "no") << "\n";
  for (const auto& m : r.mismatches) os << "mismatch: " << m << "\n";
  os << "result: " << (r.ok() ? "isomorphic on slice" : "MISMATCH") << "\n";
  return os.str();
}

}  // namespace frs
