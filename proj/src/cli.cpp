#include "frs/cli.hpp"

#include <CLI11.hpp>

#include <memory>
#include <ostream>

#include "frs/errors.hpp"
#include "frs/large_sub.hpp"
#include "frs/letter_intro.hpp"

namespace frs {

namespace {

int exit_for(CompletenessReport::Verdict v) {
  switch (v) {
    case CompletenessReport::Verdict::complete: return exit_ok;
    case CompletenessReport::Verdict::incomplete: return exit_counterexample;
    case CompletenessReport::Verdict::inconclusive: return exit_inconclusive;
  }
  return exit_inconclusive;
}

Presentation load(const std::string& path) { return parse_presentation(read_file(path)); }

CandidateTuple letter_intro_tuple(const Presentation& s, const Presentation& t) {
  if (t.images.size() != 1) throw InputError("a letter-intro file must name exactly one introduced letter");
  const Alphabet& a = s.system.alphabet();
  const Alphabet& b = t.system.alphabet();
  const auto& [s_name, image] = *t.images.begin();
  Word w0;
  for (const auto& x : image) w0 += a.at(x);
  const Letter s_letter = b.at(s_name);

  // Letters of A carry over by name; the introduced letter stands for w0.
  std::vector<Letter> a_to_b(a.size());
  std::vector<Word> b_to_a(b.size());
  for (Letter l : a.letters()) a_to_b[l.id] = b.at(a.name(l));
  for (Letter l : b.letters()) b_to_a[l.id] = l == s_letter ? w0 : Word(a.at(b.name(l)));
  if (b.size() != a.size() + 1) throw InputError("letter-intro file must add exactly one letter to the source");

  CandidateTuple tuple;
  tuple.r = s.system;
  tuple.r_t = t.system;
  tuple.phi = [b_to_a](const Word& u) {
    Word out;
    for (Letter l : u) out += b_to_a[l.id];
    return out;
  };
  const Letter sentinel{static_cast<std::uint32_t>(a.size())};
  tuple.rho = [a_to_b, w0, sentinel, s_letter](const Word& w) {
    Word out;
    for (Letter l : rho_s(w, w0, sentinel)) out.push_back(l == sentinel ? s_letter : a_to_b[l.id]);
    return out;
  };
  tuple.in_at = [](const Word&) { return true; };
  tuple.in_t = [](const Word&) { return true; };
  tuple.measure = HeavyMeasure{{s_letter}, HeavyMeasure::Priority::length_first};
  tuple.name = "letter-intro";
  return tuple;
}

}  // namespace

CandidateTuple load_tuple(const Presentation& s, const Presentation& t, std::size_t step_cap) {
  if (t.construction == "letter-intro") return letter_intro_tuple(s, t);
  if (t.construction == "large-sub") {
    PipelineOptions po;
    po.step_cap = step_cap;
    const Presentation source = is_prepared(s) ? s : prepare_for_large_sub(s, po);
    return make_tuple(construction_from(source, t, step_cap));
  }
  throw InputError("t-file carries no '# construction:' line naming letter-intro or large-sub");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"frs: finite complete rewriting systems for large subsemigroups"};
  app.require_subcommand(1);

  std::string file, file2, output, word, w0, name = "s";
  std::size_t max_len = 6, step_cap = kDefaultStepCap, bound_a = 8, bound_b = 5, bound = 6;
  bool interreduce = false;
  bool name_given = false;

  auto* check = app.add_subcommand("check", "completeness report");
  check->add_option("file", file)->required();
  check->add_option("--max-len", max_len, "bound for the cycle search")->capture_default_str();
  check->add_option("--step-cap", step_cap)->capture_default_str();

  auto* nf = app.add_subcommand("nf", "normal form of a word");
  nf->add_option("file", file)->required();
  nf->add_option("--word", word)->required();
  nf->add_option("--step-cap", step_cap)->capture_default_str();

  auto* intro = app.add_subcommand("letter-intro", "introduce a letter for an irreducible word");
  intro->add_option("file", file)->required();
  intro->add_option("--w0", w0)->required();
  auto* name_opt = intro->add_option("--name", name);
  intro->add_option("-o", output)->required();

  auto* prepare = app.add_subcommand("prepare", "make the complement single irreducible letters");
  prepare->add_option("file", file)->required();
  prepare->add_option("-o", output)->required();

  auto* large = app.add_subcommand("large-sub", "complete system for the large subsemigroup");
  large->add_option("file", file)->required();
  large->add_option("-o", output)->required();
  large->add_flag("--interreduce", interreduce);

  auto* tuple_cmd = app.add_subcommand("verify-tuple", "check the six tuple conditions");
  tuple_cmd->add_option("s-file", file)->required();
  tuple_cmd->add_option("t-file", file2)->required();
  tuple_cmd->add_option("--bound-a", bound_a)->capture_default_str();
  tuple_cmd->add_option("--bound-b", bound_b)->capture_default_str();

  auto* iso = app.add_subcommand("verify-iso", "compare normal forms on a bounded slice");
  iso->add_option("s-file", file)->required();
  iso->add_option("t-file", file2)->required();
  iso->add_option("--bound", bound)->capture_default_str();

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();  // program name
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }
  name_given = name_opt->count() > 0;

  try {
    TerminationOptions topts;
    topts.max_len = max_len;

    if (check->parsed()) {
      const Presentation p = load(file);
      const auto report = verify_complete(p.system, topts, step_cap);
      out << describe(report, p.system.alphabet());
      return exit_for(report.verdict);
    }

    if (nf->parsed()) {
      const Presentation p = load(file);
      const Word w = p.system.alphabet().parse(word);
      if (w.empty()) throw InputError("--word must name at least one letter");
      out << p.system.alphabet().format(normal_form(w, p.system, step_cap)) << "\n";
      return exit_ok;
    }

    if (intro->parsed()) {
      const Presentation p = load(file);
      const auto before = verify_complete(p.system, topts);
      if (!before.complete()) {
        err << "input system is not verified complete:\n" << describe(before, p.system.alphabet());
        return before.verdict == CompletenessReport::Verdict::inconclusive ? exit_inconclusive : exit_input_error;
      }
      const Alphabet& a = p.system.alphabet();
      const std::string s_name = name_given ? name : a.fresh_name(name);
      const auto result = build_letter_intro(p.system, a.parse(w0), s_name);
      Presentation q;
      q.system = result.r_s;
      q.construction = "letter-intro";
      q.images[s_name] = [&] {
        std::vector<std::string> v;
        for (Letter l : result.w0) v.push_back(a.name(l));
        return v;
      }();
      write_file(output, serialize_presentation(q));
      const auto after = verify_complete(q.system, topts);
      out << q.system.size() << " rules over " << q.system.alphabet().size() << " letters written to " << output
          << "\n"
          << describe(after, q.system.alphabet());
      return exit_for(after.verdict);
    }

    if (prepare->parsed()) {
      const Presentation p = load(file);
      const Presentation q = prepare_for_large_sub(p);
      write_file(output, serialize_presentation(q));
      out << q.system.size() << " rules over " << q.system.alphabet().size() << " letters, complement of "
          << q.complement->words.size() << " letters written to " << output << "\n";
      return exit_ok;
    }

    if (large->parsed()) {
      const Presentation p = load(file);
      const Presentation source = is_prepared(p) ? p : prepare_for_large_sub(p);
      ConstructionOptions copts;
      copts.interreduce = interreduce;
      const auto c = build_construction(source, copts);
      const Presentation q = to_presentation(c);
      write_file(output, serialize_presentation(q));
      topts.heavy = c.heavy_letters();
      const auto report = verify_complete(q.system, topts);
      out << q.system.size() << " rules over " << q.system.alphabet().size() << " letters (N = " << c.n_bound
          << ") written to " << output << "\n"
          << describe(report, q.system.alphabet());
      return exit_for(report.verdict);
    }

    if (tuple_cmd->parsed() || iso->parsed()) {
      const Presentation s = load(file);
      const Presentation t = load(file2);
      const CandidateTuple tuple = load_tuple(s, t);
      if (tuple_cmd->parsed()) {
        SweepBounds sb;
        sb.len_a = bound_a;
        sb.len_b = bound_b;
        const auto report = check_p1_to_p6(tuple, sb);
        out << describe(report, tuple.r.alphabet(), tuple.r_t.alphabet());
        if (report.overall()) return exit_ok;
        bool refuted = report.sandwich.status == PropertyResult::Status::counterexample;
        for (const auto& pr : report.properties) refuted |= pr.status == PropertyResult::Status::counterexample;
        return refuted ? exit_counterexample : exit_inconclusive;
      }
      TerminationOptions tt = topts;
      if (tuple.measure) tt.heavy = tuple.measure->heavy;
      const auto rs = verify_complete(tuple.r, topts);
      const auto rt = verify_complete(tuple.r_t, tt);
      if (!rs.complete() || !rt.complete()) {
        err << "both systems must be verified complete\n"
            << describe(rs, tuple.r.alphabet()) << describe(rt, tuple.r_t.alphabet());
        const bool unknown = rs.verdict == CompletenessReport::Verdict::inconclusive ||
                             rt.verdict == CompletenessReport::Verdict::inconclusive;
        return unknown ? exit_inconclusive : exit_counterexample;
      }
      const auto report = check_isomorphism_slice(tuple, bound);
      out << describe(report);
      return report.ok() ? exit_ok : exit_counterexample;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return exit_input_error;
  } catch (const NonTerminationError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return exit_inconclusive;
  } catch (const InternalError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return exit_counterexample;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_input_error;
}

}  // namespace frs
