// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "frs/cli.hpp"
#include "frs/large_sub.hpp"
#include "frs/letter_intro.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace frs;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [failed: " << what << "]";
    }
  }
};

fs::path work_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "frs_acceptance";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string fixture(const std::string& name) { return std::string(FRS_FIXTURE_DIR) + "/" + name; }
std::string out_path(const std::string& name) { return (work_dir() / name).string(); }

int cli(std::vector<std::string> args) {
  args.insert(args.begin(), "frs");
  std::ostringstream out, err;
  return run_cli(args, out, err);
}

Presentation load(const std::string& path) { return parse_presentation(read_file(path)); }

std::set<std::string> rule_set(const RewritingSystem& r) {
  auto v = fx::rule_strings(r);
  return {v.begin(), v.end()};
}

bool certified_complete(const RewritingSystem& r, std::optional<std::vector<Letter>> heavy = std::nullopt) {
  TerminationOptions t;
  t.heavy = std::move(heavy);
  auto report = verify_complete(r, t);
  return report.complete() && report.termination.status == Termination::Status::certified &&
         report.local_confluence.status == LocalConfluence::Status::all_joined;
}

// --- criterion 1 -----------------------------------------------------------

struct IntroCase {
  std::string source;
  std::string w0;
  std::set<std::string> expected;
  std::string out;
};

const std::vector<IntroCase>& intro_cases() {
  static const std::vector<IntroCase> cases = {
      {"free_a.pres", "a a", {"a a -> s", "s a -> a s"}, "intro_aa.pres"},
      {"free_ab.pres", "a b", {"a b -> s"}, "intro_ab.pres"},
  };
  return cases;
}

Check letter_intro_exactness() {
  Check c;
  for (const auto& k : intro_cases()) {
    const auto t0 = Clock::now();
    const int code = cli({"letter-intro", fixture(k.source), "--w0", k.w0, "-o", out_path(k.out)});
    const double secs = seconds_since(t0);
    c.require(code == exit_ok, k.source + " exit code");
    if (code != exit_ok) continue;
    const auto p = load(out_path(k.out));
    c.require(rule_set(p.system) == k.expected, k.source + " rule set");
    c.require(certified_complete(p.system), k.source + " certified complete");
    c.require(secs < 1.0, k.source + " runtime");
    c.notes << " " << k.source << ": " << p.system.size() << " rules in " << secs << " s;";
  }
  return c;
}

// --- criterion 2 -----------------------------------------------------------

Check letter_intro_postconditions() {
  Check c;
  for (const auto& k : intro_cases()) {
    const auto source = load(fixture(k.source));
    const auto& r = source.system;
    const Word w0 = r.alphabet().parse(k.w0);
    const auto res = build_letter_intro(r, w0, "s");
    const Word s(res.new_letter);
    c.require(reaches(w0, s, res.r_s) == Reachability::yes, k.source + " w0 ->* s");
    c.require(is_irreducible(s, res.r_s), k.source + " s irreducible");
    for (Letter a : r.alphabet().letters())
      if (is_irreducible(Word(a), r))
        c.require(is_irreducible(Word(a), res.r_s), k.source + " letter " + r.alphabet().name(a) + " irreducible");
  }
  c.notes << " w0 ->* s, s irreducible, irreducible letters stay irreducible;";
  return c;
}

// --- criterion 3 -----------------------------------------------------------

Check large_sub_exactness() {
  Check c;
  struct Variant {
    std::vector<std::string> extra;
    std::set<std::string> expected;
    std::string out;
  };
  const std::vector<Variant> variants = {
      {{}, {"c_a_a c_a_a -> c_a_a", "c_a_a c_a_a c_a_a -> c_a_a"}, "cube_t.pres"},
      {{"--interreduce"}, {"c_a_a c_a_a -> c_a_a"}, "cube_ti.pres"},
  };
  for (const auto& v : variants) {
    std::vector<std::string> args = {"large-sub", fixture("cube_minus_a.pres"), "-o", out_path(v.out)};
    args.insert(args.end(), v.extra.begin(), v.extra.end());
    c.require(cli(args) == exit_ok, v.out + " exit code");
    const auto t = load(out_path(v.out));
    c.require(t.system.alphabet().names() == std::vector<std::string>{"c_a_a"}, v.out + " B = {c_a_a}");
    c.require(rule_set(t.system) == v.expected, v.out + " rule set");
    c.require(verify_complete(t.system).complete(), v.out + " complete");
  }
  const auto built = build_construction(load(fixture("cube_minus_a.pres")));
  c.require(built.n_bound == 7, "N = 7");
  bool no_d2 = true;
  for (std::size_t i = 0; i < built.r_t.size(); ++i) no_d2 = no_d2 && built.r_t.provenance(i) == "D1";
  c.require(no_d2, "no D2 rules");
  c.notes << " N = " << built.n_bound << ", faithful and interreduced variants checked;";
  return c;
}

// --- criterion 4 -----------------------------------------------------------

Check full_pipeline() {
  Check c;
  const auto t0 = Clock::now();
  c.require(cli({"large-sub", fixture("free_minus_a.pres"), "-o", out_path("free_t.pres")}) == exit_ok, "exit code");
  const auto s = load(fixture("free_minus_a.pres"));
  const auto t = load(out_path("free_t.pres"));
  const auto names = t.system.alphabet().names();
  c.require(std::set<std::string>(names.begin(), names.end()) ==
                std::set<std::string>{"b", "c_b_a", "c_a_b", "c_a_a", "c_a_b_a", "c_a_a_a"},
            "B has the six expected letters");
  const auto tuple = load_tuple(s, t);
  c.require(verify_complete(t.system, TerminationOptions{.heavy = tuple.measure->heavy}).complete(), "R_T complete");

  // Brute force: with no relations every word is its own class; T drops the class of a.
  std::size_t brute = 0;
  const Word a = s.system.alphabet().parse("a");
  for (const auto& cls : oracle::congruence_classes(s.system.alphabet().letters(), {}, 4))
    if (!cls.contains(a)) ++brute;
  const auto iso = check_isomorphism_slice(tuple, 4);
  c.require(brute == 29, "brute-force class count is frozen at 29");
  c.require(iso.t_classes == brute, "slice class count equals brute force");
  c.require(iso.ok() && iso.mismatches.empty(), "zero mismatches");
  const double secs = seconds_since(t0);
  c.require(secs < 30.0, "runtime");
  c.notes << " |B| = " << names.size() << ", " << iso.t_classes << " T-classes vs brute force " << brute << ", "
          << iso.mismatches.size() << " mismatches, " << secs << " s;";
  return c;
}

// --- criterion 5 -----------------------------------------------------------

CandidateTuple drop(CandidateTuple t, const std::string& rule) {
  t.r_t = t.r_t.filtered([&](std::size_t i) { return t.r_t.format(t.r_t.rule(i)) != rule; });
  return t;
}

Check property_r_suite() {
  Check c;
  const auto t0 = Clock::now();
  SweepBounds bounds;
  bounds.len_a = 8;
  bounds.len_b = 5;
  struct Named {
    std::string name;
    CandidateTuple tuple;
  };
  std::vector<Named> tuples;
  for (const auto& k : intro_cases())
    tuples.push_back({k.out, load_tuple(load(fixture(k.source)), load(out_path(k.out)))});
  for (const char* out : {"cube_t.pres", "cube_ti.pres"})
    tuples.push_back({out, load_tuple(load(fixture("cube_minus_a.pres")), load(out_path(out)))});
  tuples.push_back({"free_t.pres", load_tuple(load(fixture("free_minus_a.pres")), load(out_path("free_t.pres")))});

  for (const auto& [name, tuple] : tuples) {
    const auto report = check_p1_to_p6(tuple, bounds);
    c.require(report.overall(), name + " all verified");
  }

  const std::vector<std::tuple<std::string, CandidateTuple, std::size_t>> sabotage = {
      {"intro_aa without s a -> a s", drop(tuples[0].tuple, "s a -> a s"), 5},
      {"intro_ab without a b -> s", drop(tuples[1].tuple, "a b -> s"), 5},
      {"cube_t without c_a_a c_a_a -> c_a_a", drop(tuples[2].tuple, "c_a_a c_a_a -> c_a_a"), 3},
  };
  for (const auto& [name, tuple, property] : sabotage) {
    const auto report = check_p1_to_p6(tuple, bounds);
    c.require(report.properties[property].status == PropertyResult::Status::counterexample,
              name + ": P" + std::to_string(property + 1) + " counterexample");
    bool inconclusive = false;
    for (const auto& p : report.properties) inconclusive |= p.status == PropertyResult::Status::inconclusive;
    c.require(!inconclusive, name + " not inconclusive");
  }
  const double secs = seconds_since(t0);
  c.require(secs < 60.0, "runtime");
  c.notes << " " << tuples.size() << " tuples verified, " << sabotage.size() << " sabotaged tuples refuted, " << secs
          << " s;";
  return c;
}

// --- criterion 6 -----------------------------------------------------------

Check invariant_sweeps() {
  Check c;
  std::size_t violations = 0, checked = 0;
  auto tally = [&](bool ok) {
    ++checked;
    if (!ok) ++violations;
  };

  for (const auto& f : fx::complete_fixtures()) {
    for (const Word& w : words_up_to(f.system.alphabet().letters(), 8)) {
      const std::size_t d = disorder(w, f.system);
      for (const auto& [step, v] : one_step_reductions(w, f.system)) tally(d > disorder(v, f.system));
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t len = 1; i + len < w.size() + 1; ++len) tally(d >= disorder(w.sub(i, len), f.system));
    }
  }

  Alphabet ab{"a", "b"};
  const Letter s{2};
  for (const char* w0_text : {"ab", "aa", "aba", "aab"}) {
    const Word w0 = fx::word(ab, w0_text);
    auto rho = [&](const Word& w) { return rho_s(w, w0, s); };
    for (const Word& w : words_up_to(ab.letters(), 9, 2)) {
      if (w.size() <= 8) tally(phi_s(rho(w), w0, s) == w);
      for (std::size_t i = 1; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
          const Word x1 = w.prefix(i), x2 = w.sub(i, j - i), x3 = w.sub(j);
          if (rho(w) == rho(x1 + x2) + rho(x3)) tally(rho(x2 + x3) == rho(x2) + rho(x3));
        }
        if (w.size() > 8) continue;
        const Word x1 = w.prefix(i), x2 = w.sub(i);
        if (rho(w) == rho(x1) + rho(x2)) {
          tally(true);
          continue;
        }
        bool straddles = false;
        for (std::size_t k = 1; k < w0.size() && !straddles; ++k) {
          if (k > x1.size() || w0.size() - k > x2.size()) continue;
          if (x1.suffix(k) + x2.prefix(w0.size() - k) != w0) continue;
          straddles = rho(w) == rho(x1.prefix(x1.size() - k)) + Word(s) + rho(x2.sub(w0.size() - k));
        }
        tally(straddles);
      }
    }
  }

  auto straight = [](BKind k) { return k == BKind::a1 || k == BKind::c_l1 || k == BKind::c_l2; };
  for (const char* name : {"free_minus_a.pres", "cube_minus_a.pres", "commutative_minus_a.pres",
                           "idempotent_minus_a.pres"}) {
    const auto con = build_construction(load(fixture(name)));
    for (const Word& w : words_up_to(con.source.system.alphabet().letters(), 8)) {
      if (!in_AT(w, con.source)) continue;
      const Word u = rho_t(w, con);
      tally(phi_t(u, con.b) == w);
      for (std::size_t i = 0; i + 1 < u.size(); ++i) tally(straight(con.kind(u[i])));
    }
    for (const Word& u : words_up_to(con.b.alphabet.letters(), 4)) {
      const Word img = phi_t(u, con.b);
      tally(img.size() >= u.size());
      bool is_straight = true;
      for (std::size_t i = 0; i + 1 < u.size(); ++i) is_straight = is_straight && straight(con.kind(u[i]));
      if (is_straight && in_AT(img, con.source)) tally(rho_t(img, con) == u);
    }
  }
  c.require(violations == 0, std::to_string(violations) + " violations");
  c.notes << " " << checked << " instances, " << violations << " violations;";
  return c;
}

// --- criterion 7 -----------------------------------------------------------

Check oracle_agreement() {
  Check c;
  auto systems = fx::complete_fixtures();
  for (const auto& k : intro_cases()) systems.push_back({k.out, load(out_path(k.out)).system});
  systems.push_back({"cube_t.pres", load(out_path("cube_t.pres")).system});
  for (const auto& f : systems) {
    std::set<std::set<Word>> by_oracle, by_normal_form;
    for (const auto& cls : oracle_classes(f.system, 5)) by_oracle.emplace(cls.begin(), cls.end());
    std::map<Word, std::set<Word>> groups;
    for (const Word& w : words_up_to(f.system.alphabet().letters(), 5)) groups[normal_form(w, f.system)].insert(w);
    for (auto& [nf, g] : groups) by_normal_form.insert(g);
    c.require(by_oracle == by_normal_form, f.name + " partitions agree");
  }
  const auto bad = load(fixture("nonconfluent.pres"));
  const auto report = verify_complete(bad.system);
  c.require(report.verdict == CompletenessReport::Verdict::incomplete, "non-confluent fixture incomplete");
  const auto& lc = report.local_confluence;
  const auto& a = bad.system.alphabet();
  c.require(lc.witness && a.format(lc.left_normal) == "a" && a.format(lc.right_normal) == "b", "witness pair (a, b)");
  c.notes << " " << systems.size() << " systems; non-confluent witness (" << a.format(lc.left_normal) << ", "
          << a.format(lc.right_normal) << ");";
  return c;
}

// --- criterion 8 -----------------------------------------------------------

Check determinism() {
  Check c;
  const std::vector<std::vector<std::string>> commands = {
      {"letter-intro", fixture("free_a.pres"), "--w0", "a a"},
      {"letter-intro", fixture("free_ab.pres"), "--w0", "a b"},
      {"prepare", fixture("free_minus_ab.pres")},
      {"prepare", fixture("free_minus_a_and_ab.pres")},
      {"large-sub", fixture("cube_minus_a.pres")},
      {"large-sub", fixture("cube_minus_a.pres"), "--interreduce"},
      {"large-sub", fixture("free_minus_a.pres")},
      {"large-sub", fixture("idempotent_minus_a.pres")},
  };
  for (const auto& cmd : commands) {
    auto first = cmd, second = cmd;
    first.insert(first.end(), {"-o", out_path("det_1.pres")});
    second.insert(second.end(), {"-o", out_path("det_2.pres")});
    const int c1 = cli(first);
    const int c2 = cli(second);
    c.require(c1 == exit_ok && c2 == exit_ok, cmd[0] + " " + cmd[1] + " exit code");
    c.require(read_file(out_path("det_1.pres")) == read_file(out_path("det_2.pres")), cmd[0] + " " + cmd[1]);
  }
  c.notes << " " << commands.size() << " commands byte-identical;";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"1 letter introduction emits exact complete systems", letter_intro_exactness},
      {"2 letter introduction postconditions", letter_intro_postconditions},
      {"3 large-subsemigroup construction on aaa -> a", large_sub_exactness},
      {"4 full pipeline on the free semigroup without a", full_pipeline},
      {"5 tuple conditions verified, sabotage refuted", property_r_suite},
      {"6 invariant sweeps", invariant_sweeps},
      {"7 oracle agreement", oracle_agreement},
      {"8 deterministic outputs", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes << " [exception: " << e.what() << "]";
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << name << ":" << c.notes.str() << "\n";
    failed += c.ok ? 0 : 1;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}
