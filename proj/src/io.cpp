#include "frs/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "frs/errors.hpp"

namespace frs {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<Token> tokenize(std::string_view s, std::size_t base_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back({std::string(s.substr(i, j - i)), base_column + i});
    i = j;
  }
  return out;
}

struct Line {
  std::size_t number;
  std::string_view decl;     // text before any '#'
  std::string_view comment;  // text after '#', trimmed
  bool has_comment;
};

Word parse_word(std::string_view s, std::size_t base_column, std::size_t line, const Alphabet& a,
                const char* what) {
  Word w;
  for (const Token& t : tokenize(s, base_column)) {
    if (!is_letter_token(t.text)) throw InputError("malformed letter token '" + t.text + "'", line, t.column);
    auto l = a.find(t.text);
    if (!l) throw InputError("unknown letter '" + t.text + "'", line, t.column);
    w.push_back(*l);
  }
  if (w.empty()) throw InputError(std::string("empty ") + what, line, base_column);
  return w;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::vector<Line> lines;
  std::size_t pos = 0;
  for (std::size_t number = 1; pos <= text.size(); ++number) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    auto hash = raw.find('#');
    Line l{number, raw.substr(0, hash), {}, hash != std::string_view::npos};
    if (l.has_comment) l.comment = trim(raw.substr(hash + 1));
    lines.push_back(l);
    pos = end + 1;
  }

  Presentation p;
  Alphabet alphabet;
  bool saw_alphabet = false;
  for (const Line& l : lines) {
    std::string_view d = l.decl;
    std::size_t lead = d.find_first_not_of(" \t");
    if (lead == std::string_view::npos) continue;
    d.remove_prefix(lead);
    if (!starts_with(d, "alphabet:")) continue;
    saw_alphabet = true;
    const std::size_t col = lead + 1 + 9;
    auto tokens = tokenize(d.substr(9), col);
    if (tokens.empty()) throw InputError("alphabet declaration without letters", l.number, col);
    for (const Token& t : tokens) {
      if (!is_letter_token(t.text)) throw InputError("malformed letter token '" + t.text + "'", l.number, t.column);
      if (alphabet.find(t.text)) throw InputError("duplicate alphabet entry '" + t.text + "'", l.number, t.column);
      alphabet.add(t.text);
    }
  }
  if (!saw_alphabet) throw InputError("missing alphabet declaration");

  std::vector<Rule> rules;
  std::vector<std::string> tags;
  for (const Line& l : lines) {
    std::string_view d = l.decl;
    std::size_t lead = d.find_first_not_of(" \t");
    if (lead == std::string_view::npos) {
      if (l.has_comment) {
        std::string_view c = l.comment;
        if (starts_with(c, "construction:")) {
          p.construction = std::string(trim(c.substr(13)));
        } else if (starts_with(c, "phi:")) {
          std::string_view body = c.substr(4);
          auto eq = body.find('=');
          if (eq == std::string_view::npos) throw InputError("malformed phi annotation", l.number, 1);
          auto key = trim(body.substr(0, eq));
          if (!alphabet.find(key))
            throw InputError("phi annotation for unknown letter '" + std::string(key) + "'", l.number, 1);
          std::vector<std::string> image;
          for (const Token& t : tokenize(body.substr(eq + 1), 1)) image.push_back(t.text);
          if (image.empty()) throw InputError("empty phi image", l.number, 1);
          p.images[std::string(key)] = std::move(image);
        }
      }
      continue;
    }
    d.remove_prefix(lead);
    const std::size_t col = lead + 1;
    if (starts_with(d, "alphabet:")) continue;
    if (starts_with(d, "rule:")) {
      std::string_view body = d.substr(5);
      auto arrow = body.find("->");
      if (arrow == std::string_view::npos || body.find("->", arrow + 2) != std::string_view::npos)
        throw InputError("malformed arrow: a rule needs exactly one '->'", l.number, col);
      Word lhs = parse_word(body.substr(0, arrow), col + 5, l.number, alphabet, "left-hand side");
      Word rhs = parse_word(body.substr(arrow + 2), col + 5 + arrow + 2, l.number, alphabet, "right-hand side");
      rules.push_back(Rule{std::move(lhs), std::move(rhs)});
      tags.emplace_back(l.has_comment ? std::string(l.comment) : std::string());
    } else if (starts_with(d, "complement:")) {
      if (!p.complement) p.complement = ComplementSpec{};
      std::string_view body = d.substr(11);
      std::size_t offset = col + 11;
      while (true) {
        auto semi = body.find(';');
        p.complement->words.push_back(
            parse_word(body.substr(0, semi), offset, l.number, alphabet, "complement word"));
        if (semi == std::string_view::npos) break;
        body.remove_prefix(semi + 1);
        offset += semi + 1;
      }
    } else {
      throw InputError("unknown declaration '" + std::string(trim(d)) + "'", l.number, col);
    }
  }
  p.system = RewritingSystem(std::move(alphabet), std::move(rules), std::move(tags));
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  const Alphabet& a = p.system.alphabet();
  std::ostringstream os;
  if (!p.construction.empty()) os << "# construction: " << p.construction << "\n";
  std::vector<std::string> names = a.names();
  std::sort(names.begin(), names.end());
  os << "alphabet:";
  for (const auto& n : names) os << ' ' << n;
  os << "\n";
  for (const auto& [letter, image] : p.images) {
    os << "# phi: " << letter << " =";
    for (const auto& x : image) os << ' ' << x;
    os << "\n";
  }
  for (std::size_t i = 0; i < p.system.size(); ++i) {
    os << "rule: " << p.system.format(p.system.rule(i));
    if (!p.system.provenance(i).empty()) os << "  # " << p.system.provenance(i);
    os << "\n";
  }
  if (p.complement && !p.complement->words.empty()) {
    os << "complement:";
    for (std::size_t i = 0; i < p.complement->words.size(); ++i)
      os << (i ? " ; " : " ") << a.format(p.complement->words[i]);
    os << "\n";
  }
  return os.str();
}

bool equivalent(const Presentation& x, const Presentation& y) {
  const Alphabet& ax = x.system.alphabet();
  const Alphabet& ay = y.system.alphabet();
  auto sorted_names = [](const Alphabet& a) {
    auto n = a.names();
    std::sort(n.begin(), n.end());
    return n;
  };
  if (sorted_names(ax) != sorted_names(ay)) return false;
  if (x.system.size() != y.system.size() || x.construction != y.construction || x.images != y.images) return false;
  for (std::size_t i = 0; i < x.system.size(); ++i) {
    if (ax.format(x.system.rule(i).lhs) != ay.format(y.system.rule(i).lhs) ||
        ax.format(x.system.rule(i).rhs) != ay.format(y.system.rule(i).rhs) ||
        x.system.provenance(i) != y.system.provenance(i))
      return false;
  }
  const std::size_t nx = x.complement ? x.complement->words.size() : 0;
  const std::size_t ny = y.complement ? y.complement->words.size() : 0;
  if (nx != ny) return false;
  for (std::size_t i = 0; i < nx; ++i)
    if (ax.format(x.complement->words[i]) != ay.format(y.complement->words[i])) return false;
  return true;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
}

}  // namespace frs
