#include "frs/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "frs/errors.hpp"
#include "frs/letter_intro.hpp"

namespace frs {

namespace {

std::vector<std::string> names_of(const Word& w, const Alphabet& a) {
  std::vector<std::string> out;
  for (Letter l : w) out.push_back(a.name(l));
  return out;
}

void require_complete(const RewritingSystem& r, const PipelineOptions& options, const std::string& stage) {
  CompletenessReport report = verify_complete(r, options.termination, options.step_cap);
  if (!report.complete())
    throw InternalError("completeness re-verification failed after stage '" + stage + "':\n" +
                        describe(report, r.alphabet()));
}

}  // namespace

ComplementSpec canonicalize_complement(const Presentation& p, std::size_t step_cap) {
  if (!p.complement || p.complement->words.empty())
    throw InputError("empty complement: the subsemigroup is the whole semigroup; use the original system");
  const Alphabet& a = p.system.alphabet();
  std::vector<Word> words;
  for (const Word& w : p.complement->words) {
    Word nf = normal_form(w, p.system, step_cap);
    if (std::find(words.begin(), words.end(), nf) == words.end()) words.push_back(std::move(nf));
  }
  std::stable_sort(words.begin(), words.end(), [&](const Word& x, const Word& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return names_of(x, a) < names_of(y, a);
  });
  return ComplementSpec{std::move(words)};
}

Presentation letterize_complement(const Presentation& p, const PipelineOptions& options) {
  Presentation cur = p;
  cur.complement = canonicalize_complement(cur, options.step_cap);
  const std::size_t n = cur.complement->words.size();
  for (std::size_t round = 0;; ++round) {
    const auto& words = cur.complement->words;
    auto long_word = std::find_if(words.begin(), words.end(), [](const Word& w) { return w.size() > 1; });
    if (long_word == words.end()) return cur;
    if (round >= n) throw InternalError("letter introduction exceeded " + std::to_string(n) + " rounds");

    const Alphabet& a = cur.system.alphabet();
    LetterIntroResult intro =
        build_letter_intro(cur.system, *long_word, a.fresh_name(options.fresh_base), options.step_cap);

    // Images are recorded against the alphabet of the very first presentation.
    std::vector<std::string> image;
    for (Letter l : intro.w0) {
      const std::string& name = a.name(l);
      if (auto it = cur.images.find(name); it != cur.images.end())
        image.insert(image.end(), it->second.begin(), it->second.end());
      else
        image.push_back(name);
    }
    Presentation next;
    next.images = cur.images;
    next.images[intro.r_s.alphabet().name(intro.new_letter)] = std::move(image);
    next.construction = "prepare";
    next.complement = cur.complement;
    next.system = std::move(intro.r_s);
    next.complement = canonicalize_complement(next, options.step_cap);
    cur = std::move(next);
  }
}

RewritingSystem interreduce(const RewritingSystem& r, std::size_t step_cap) {
  std::vector<Rule> rules = r.rules();
  std::vector<std::string> tags = r.provenance();
  while (true) {
    bool changed = false;
    RewritingSystem current(r.alphabet(), rules, tags);
    for (auto& rule : rules) {
      Word nf = normal_form(rule.rhs, current, step_cap);
      if (nf != rule.rhs) {
        rule.rhs = std::move(nf);
        changed = true;
      }
    }
    std::vector<Rule> kept;
    std::vector<std::string> kept_tags;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (std::find(kept.begin(), kept.end(), rules[i]) != kept.end()) {
        changed = true;
        continue;
      }
      kept.push_back(rules[i]);
      kept_tags.push_back(tags[i]);
    }
    rules = std::move(kept);
    tags = std::move(kept_tags);
    for (std::size_t i = 0; i < rules.size();) {
      bool reducible = false;
      for (std::size_t j = 0; j < rules.size() && !reducible; ++j)
        reducible = j != i && rules[i].lhs.contains(rules[j].lhs);
      if (reducible) {
        rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(i));
        tags.erase(tags.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      } else {
        ++i;
      }
    }
    if (!changed) return RewritingSystem(r.alphabet(), std::move(rules), std::move(tags));
  }
}

bool rhs_irreducible(const RewritingSystem& r) {
  return std::all_of(r.rules().begin(), r.rules().end(),
                     [&](const Rule& rule) { return is_irreducible(rule.rhs, r); });
}

bool lhs_interreduced(const RewritingSystem& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j)
      if (i != j && r.rule(i).lhs.contains(r.rule(j).lhs)) return false;
  return true;
}

bool is_prepared(const Presentation& p) {
  if (!p.complement || p.complement->words.empty()) return false;
  std::set<Word> seen;
  for (const Word& w : p.complement->words) {
    if (w.size() != 1 || !is_irreducible(w, p.system) || !seen.insert(w).second) return false;
  }
  return rhs_irreducible(p.system) && lhs_interreduced(p.system);
}

Presentation prepare_for_large_sub(const Presentation& p, const PipelineOptions& options) {
  CompletenessReport input = verify_complete(p.system, options.termination, options.step_cap);
  if (!input.complete())
    throw PreconditionError("input system is not verified complete:\n" + describe(input, p.system.alphabet()));

  Presentation cur = p;
  cur.complement = canonicalize_complement(cur, options.step_cap);
  cur = letterize_complement(cur, options);
  require_complete(cur.system, options, "letterize");

  cur.system = interreduce(cur.system, options.step_cap);
  require_complete(cur.system, options, "interreduce");
  for (const Word& w : cur.complement->words) {
    if (w.size() != 1 || !is_irreducible(w, cur.system))
      throw InternalError("interreduction made complement word '" + cur.system.alphabet().format(w) +
                          "' reducible");
  }
  return cur;
}

SubsemigroupCheck check_subsemigroup_bounded(const Presentation& p, std::size_t bound, std::size_t step_cap) {
  SubsemigroupCheck out;
  if (!p.complement) return out;
  const auto& comp = p.complement->words;
  const double k = static_cast<double>(p.system.alphabet().size());
  while (bound > 2 && std::pow(k, static_cast<double>(bound)) > 200000.0) --bound;
  out.bound = bound;

  auto in_complement = [&](const Word& w) { return std::find(comp.begin(), comp.end(), w) != comp.end(); };
  auto letters = p.system.alphabet().letters();
  for_each_word(letters, bound, [&](const Word& w) {
    bool nf_known = false;
    bool nf_outside = true;
    for (std::size_t i = 1; i < w.size(); ++i) {
      Word u = w.prefix(i);
      Word v = w.sub(i);
      if (!is_irreducible(u, p.system) || !is_irreducible(v, p.system) || in_complement(u) || in_complement(v))
        continue;
      if (!nf_known) {
        nf_outside = !in_complement(normal_form(w, p.system, step_cap));
        nf_known = true;
      }
      ++out.pairs_checked;
      if (!nf_outside) {
        out.passed = false;
        out.left = std::move(u);
        out.right = std::move(v);
        return false;
      }
    }
    return true;
  }, 2);
  return out;
}

}  // namespace frs
