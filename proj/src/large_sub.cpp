#include "frs/large_sub.hpp"

#include <algorithm>

#include "frs/errors.hpp"

namespace frs {

std::string to_string(BKind kind) {
  switch (kind) {
    case BKind::a1: return "A1";
    case BKind::c_r: return "C_R";
    case BKind::c_l1: return "C_L1";
    case BKind::c_l2: return "C_L2";
    case BKind::c_m1: return "C_M1";
    case BKind::c_m2: return "C_M2";
  }
  return "?";
}

namespace {

bool is_complement_letter(const Word& w, const Presentation& p) {
  if (w.size() != 1 || !p.complement) return false;
  const auto& words = p.complement->words;
  return std::find(words.begin(), words.end(), w) != words.end();
}

bool contains(const std::vector<Letter>& v, Letter l) { return std::find(v.begin(), v.end(), l) != v.end(); }

void require_prepared(const Presentation& p) {
  if (!is_prepared(p))
    throw PreconditionError(
        "presentation is not prepared: the complement must be single irreducible letters and the rules "
        "interreduced (run prepare first)");
}

}  // namespace

LetterClassification classify_letters(const Presentation& p, std::size_t step_cap) {
  require_prepared(p);
  LetterClassification out;
  for (Letter l : p.system.alphabet().letters()) {
    Word w(l);
    if (is_complement_letter(w, p))
      out.a_s.push_back(l);
    else if (is_complement_letter(normal_form(w, p.system, step_cap), p))
      out.excluded.push_back(l);
    else
      out.a1.push_back(l);
  }
  return out;
}

bool in_T(const Word& w, const Presentation& p, std::size_t step_cap) {
  return !is_complement_letter(normal_form(w, p.system, step_cap), p);
}

bool in_AT(const Word& w, const Presentation& p, std::size_t step_cap) {
  if (w.empty()) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t len = 1; i + len <= w.size(); ++len) {
      if (i == 0 && len == w.size()) continue;
      Word factor = w.sub(i, len);
      if (in_T(factor, p, step_cap)) continue;
      if (len > 1 || !is_complement_letter(factor, p)) return false;
    }
  }
  return in_T(w, p, step_cap);
}

FSets build_f_sets(const LetterClassification& cls, const Presentation& p, std::size_t step_cap) {
  auto t = [&](const Word& w) { return in_T(w, p, step_cap); };
  std::vector<Letter> a1_or_s = cls.a1;
  a1_or_s.insert(a1_or_s.end(), cls.a_s.begin(), cls.a_s.end());
  std::sort(a1_or_s.begin(), a1_or_s.end());

  FSets f;
  for (Letter a : cls.a1) f.f1.push_back(Word(a));
  for (Letter s : cls.a_s)
    for (Letter b : a1_or_s)
      if (t(Word{s, b})) f.f2.push_back(Word{s, b});
  for (Letter a : cls.a1)
    for (Letter s : cls.a_s)
      if (t(Word{a, s})) f.f3.push_back(Word{a, s});
  for (Letter s : cls.a_s)
    for (Letter b : a1_or_s)
      for (Letter s2 : cls.a_s)
        if (t(Word{s, b}) && t(Word{b, s2}) && t(Word{s, b, s2})) f.f4.push_back(Word{s, b, s2});
  return f;
}

BAlphabet build_b_alphabet(const FSets& f, const LetterClassification& cls, const Alphabet& a) {
  BAlphabet out;
  for (const Word& w : f.f1) {
    out.alphabet.add(a.name(w.front()));
    out.table.push_back({BKind::a1, w});
  }
  auto add_boundary = [&](const Word& u, BKind kind) {
    std::string name = "c";
    for (Letter l : u) name += "_" + a.name(l);
    std::string candidate = name;
    for (std::size_t n = 1; out.alphabet.find(candidate); ++n) candidate = name + "_" + std::to_string(n);
    out.alphabet.add(candidate);
    out.table.push_back({kind, u});
  };
  const auto is_a1 = [&](Letter l) { return contains(cls.a1, l); };
  for (const Word& u : f.f3) add_boundary(u, BKind::c_r);
  for (const Word& u : f.f2)
    if (is_a1(u[1])) add_boundary(u, BKind::c_l1);
  for (const Word& u : f.f2)
    if (!is_a1(u[1])) add_boundary(u, BKind::c_l2);
  for (const Word& u : f.f4)
    if (is_a1(u[1])) add_boundary(u, BKind::c_m1);
  for (const Word& u : f.f4)
    if (!is_a1(u[1])) add_boundary(u, BKind::c_m2);
  return out;
}

Word phi_t(const Word& u, const BAlphabet& b) {
  Word out;
  for (Letter l : u) out += b.table.at(l.id).image;
  return out;
}

std::vector<Letter> LargeSubConstruction::heavy_letters() const {
  std::vector<Letter> out;
  for (Letter l : b.alphabet.letters()) {
    BKind k = kind(l);
    if (k == BKind::c_r || k == BKind::c_m1 || k == BKind::c_m2) out.push_back(l);
  }
  return out;
}

Word rho_t(const Word& w, const LargeSubConstruction& c) {
  if (!in_AT(w, c.source, c.step_cap))
    throw PreconditionError("word " + c.source.system.alphabet().format(w) + " is not in A(T)");
  Word out;
  std::size_t i = 0;
  while (i < w.size()) {
    Word rest = w.sub(i);
    if (auto it = c.base_letters.find(rest); it != c.base_letters.end()) {
      out += it->second;
      return out;
    }
    Word head = w.sub(i, contains(c.classification.a1, w[i]) ? 1 : 2);
    auto it = c.base_letters.find(head);
    if (head.size() == 2 && i + 2 >= w.size()) it = c.base_letters.end();
    if (it == c.base_letters.end())
      throw InternalError("cannot peel prefix " + c.source.system.alphabet().format(head) + " of " +
                          c.source.system.alphabet().format(w));
    out += it->second;
    i += head.size();
  }
  throw InternalError("peeling consumed " + c.source.system.alphabet().format(w) + " without a base case");
}

namespace {

void index_base_letters(LargeSubConstruction& c) {
  for (Letter l : c.b.alphabet.letters()) c.base_letters.emplace(c.b.table[l.id].image, l);
  std::size_t max_lhs = c.source.system.max_lhs_length();
  c.n_bound = max_lhs + 4;
}

}  // namespace

LargeSubConstruction build_construction(const Presentation& p, const ConstructionOptions& options) {
  require_prepared(p);
  SubsemigroupCheck sub = check_subsemigroup_bounded(p, options.subsemigroup_bound, options.step_cap);
  if (!sub.passed) {
    const Alphabet& a = p.system.alphabet();
    throw PreconditionError("complement does not bound a subsemigroup: " + a.format(sub.left) + " . " +
                            a.format(sub.right) + " falls in the complement");
  }
  LargeSubConstruction c;
  c.source = p;
  c.step_cap = options.step_cap;
  c.subsemigroup_bound = sub.bound;
  c.classification = classify_letters(p, options.step_cap);
  c.f_sets = build_f_sets(c.classification, p, options.step_cap);
  c.b = build_b_alphabet(c.f_sets, c.classification, p.system.alphabet());
  if (c.b.alphabet.size() == 0)
    throw Error("T not expressible: the generating alphabet B is empty");
  index_base_letters(c);

  const RewritingSystem& r = p.system;
  const auto b_letters = c.b.alphabet.letters();
  std::vector<Rule> d1;
  // Depth-first over B-words whose image stays within the bound.
  std::vector<std::pair<Word, Word>> stack{{Word{}, Word{}}};
  while (!stack.empty()) {
    auto [u, image] = std::move(stack.back());
    stack.pop_back();
    if (!u.empty() && !is_irreducible(image, r))
      d1.push_back(Rule{u, rho_t(normal_form(image, r, options.step_cap), c)});
    for (Letter l : b_letters) {
      const Word& add = c.b.table[l.id].image;
      if (image.size() + add.size() <= c.n_bound) stack.emplace_back(u + l, image + add);
    }
  }
  std::sort(d1.begin(), d1.end(), [](const Rule& x, const Rule& y) { return shortlex_less(x.lhs, y.lhs); });

  std::vector<Rule> d2;
  for_each_word(b_letters, 2, [&](const Word& u) {
    Word image = phi_t(u, c.b);
    if (in_AT(image, p, options.step_cap)) {
      Word back = rho_t(image, c);
      if (back != u) d2.push_back(Rule{u, std::move(back)});
    }
    return true;
  }, 2);

  std::vector<Rule> rules;
  std::vector<std::string> tags;
  for (auto& rule : d1) {
    rules.push_back(std::move(rule));
    tags.push_back("D1");
  }
  for (auto& rule : d2) {
    rules.push_back(std::move(rule));
    tags.push_back("D2");
  }
  c.r_t = RewritingSystem(c.b.alphabet, std::move(rules), std::move(tags));
  if (options.interreduce) c.r_t = interreduce(c.r_t, options.step_cap);
  return c;
}

Presentation to_presentation(const LargeSubConstruction& c) {
  Presentation out;
  out.system = c.r_t;
  out.construction = "large-sub";
  const Alphabet& a = c.source.system.alphabet();
  for (Letter l : c.b.alphabet.letters()) {
    const BLetterInfo& info = c.b.table[l.id];
    if (info.kind == BKind::a1) continue;
    std::vector<std::string> image;
    for (Letter x : info.image) image.push_back(a.name(x));
    out.images[c.b.alphabet.name(l)] = std::move(image);
  }
  return out;
}

LargeSubConstruction construction_from(const Presentation& source, const Presentation& t, std::size_t step_cap) {
  require_prepared(source);
  LargeSubConstruction c;
  c.source = source;
  c.step_cap = step_cap;
  c.classification = classify_letters(source, step_cap);
  c.f_sets = build_f_sets(c.classification, source, step_cap);
  const Alphabet& a = source.system.alphabet();
  const auto& cls = c.classification;
  c.b.alphabet = t.system.alphabet();
  for (Letter l : c.b.alphabet.letters()) {
    const std::string& name = c.b.alphabet.name(l);
    Word image;
    if (auto it = t.images.find(name); it != t.images.end()) {
      for (const auto& x : it->second) image += a.at(x);
    } else {
      image = Word(a.at(name));
    }
    auto is_s = [&](std::size_t i) { return contains(cls.a_s, image[i]); };
    auto is_a = [&](std::size_t i) { return contains(cls.a1, image[i]); };
    BKind kind;
    if (image.size() == 1 && is_a(0))
      kind = BKind::a1;
    else if (image.size() == 2 && is_a(0) && is_s(1))
      kind = BKind::c_r;
    else if (image.size() == 2 && is_s(0) && is_a(1))
      kind = BKind::c_l1;
    else if (image.size() == 2 && is_s(0) && is_s(1))
      kind = BKind::c_l2;
    else if (image.size() == 3 && is_s(0) && is_a(1) && is_s(2))
      kind = BKind::c_m1;
    else if (image.size() == 3 && is_s(0) && is_s(1) && is_s(2))
      kind = BKind::c_m2;
    else
      throw InputError("letter '" + name + "' has image " + a.format(image) + " of no boundary kind");
    c.b.table.push_back({kind, std::move(image)});
  }
  index_base_letters(c);
  c.r_t = t.system;
  return c;
}

}  // namespace frs
