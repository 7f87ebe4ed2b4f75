#include "frs/word.hpp"

#include <algorithm>

#include "frs/errors.hpp"

namespace frs {

NonTerminationError::NonTerminationError(const std::string& what, std::vector<Word> trace)
    : Error(what), trace_(std::move(trace)) {}

Word Word::sub(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, size());
  len = std::min(len, size() - pos);
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool Word::occurs_at(const Word& factor, std::size_t pos) const {
  if (pos > size() || factor.size() > size() - pos) return false;
  return std::equal(factor.begin(), factor.end(), begin() + static_cast<std::ptrdiff_t>(pos));
}

bool Word::contains(const Word& factor) const {
  if (factor.size() > size()) return false;
  for (std::size_t pos = 0; pos + factor.size() <= size(); ++pos) {
    if (occurs_at(factor, pos)) return true;
  }
  return false;
}

std::size_t Word::count(Letter letter) const {
  return static_cast<std::size_t>(std::count(begin(), end(), letter));
}

Word Word::replaced(std::size_t pos, std::size_t len, const Word& replacement) const {
  std::vector<Letter> out;
  out.reserve(size() - len + replacement.size());
  out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), letters_.begin() + static_cast<std::ptrdiff_t>(pos + len), letters_.end());
  return Word(std::move(out));
}

Word& Word::operator+=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.begin(), rhs.end());
  return *this;
}

Word& Word::operator+=(Letter rhs) {
  letters_.push_back(rhs);
  return *this;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the letter ids.
  std::uint64_t h = 1469598103934665603ULL;
  for (Letter l : w) {
    h ^= l.id + 1;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

bool is_letter_token(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '\'';
  });
}

Alphabet::Alphabet(std::initializer_list<std::string_view> names) {
  for (auto n : names) add(n);
}

Letter Alphabet::add(std::string_view name) {
  if (!is_letter_token(name)) throw InputError("malformed letter name '" + std::string(name) + "'");
  std::string key(name);
  if (index_.count(key)) throw InputError("duplicate alphabet entry '" + key + "'");
  auto id = static_cast<std::uint32_t>(names_.size());
  index_.emplace(key, id);
  names_.push_back(std::move(key));
  return Letter{id};
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return Letter{it->second};
}

Letter Alphabet::at(std::string_view name) const {
  if (auto l = find(name)) return *l;
  throw InputError("unknown letter '" + std::string(name) + "'");
}

const std::string& Alphabet::name(Letter letter) const {
  if (!contains(letter)) throw InputError("letter id " + std::to_string(letter.id) + " outside alphabet");
  return names_[letter.id];
}

bool Alphabet::contains(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [this](Letter l) { return contains(l); });
}

std::vector<Letter> Alphabet::letters() const {
  std::vector<Letter> out(names_.size());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = Letter{i};
  return out;
}

std::string Alphabet::fresh_name(std::string_view base) const {
  std::string candidate(base);
  for (std::size_t n = 0; index_.count(candidate); ++n) candidate = std::string(base) + std::to_string(n);
  return candidate;
}

Word Alphabet::parse(std::string_view text) const {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    if (j > i) out.push_back(at(text.substr(i, j - i)));
    i = j;
  }
  return out;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "ε";
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) out += ' ';
    out += name(l);
  }
  return out;
}

void for_each_word(std::span<const Letter> letters, std::size_t max_len,
                   const std::function<bool(const Word&)>& visit, std::size_t min_len) {
  if (letters.empty()) return;
  for (std::size_t len = std::max<std::size_t>(min_len, 1); len <= max_len; ++len) {
    std::vector<std::size_t> digits(len, 0);
    std::vector<Letter> buf(len, letters[0]);
    while (true) {
      if (!visit(Word(buf))) return;
      std::size_t k = len;
      while (k > 0) {
        --k;
        if (++digits[k] < letters.size()) {
          buf[k] = letters[digits[k]];
          break;
        }
        digits[k] = 0;
        buf[k] = letters[0];
        if (k == 0) goto next_length;
      }
    }
  next_length:;
  }
}

std::vector<Word> words_up_to(std::span<const Letter> letters, std::size_t max_len, std::size_t min_len) {
  std::vector<Word> out;
  for_each_word(letters, max_len, [&](const Word& w) {
    out.push_back(w);
    return true;
  }, min_len);
  return out;
}

}  // namespace frs
