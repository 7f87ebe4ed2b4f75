#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace frs {

/// Interned symbol; the id indexes into the owning Alphabet.
struct Letter {
  std::uint32_t id = 0;
  auto operator<=>(const Letter&) const = default;
};

/// A finite sequence of letters. The empty word exists only as a context factor.
class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(Letter letter) : letters_{letter} {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const { return letters_.begin(); }
  const_iterator end() const { return letters_.end(); }
  std::span<const Letter> view() const { return letters_; }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Factor of length `len` starting at `pos` (clamped to the end).
  Word sub(std::size_t pos, std::size_t len = std::string::npos) const;
  Word prefix(std::size_t len) const { return sub(0, len); }
  Word suffix(std::size_t len) const { return sub(size() - len, len); }

  bool occurs_at(const Word& factor, std::size_t pos) const;
  bool starts_with(const Word& w) const { return occurs_at(w, 0); }
  bool ends_with(const Word& w) const { return w.size() <= size() && occurs_at(w, size() - w.size()); }
  bool contains(const Word& factor) const;
  std::size_t count(Letter letter) const;

  /// Word with `len` letters at `pos` replaced by `replacement`.
  Word replaced(std::size_t pos, std::size_t len, const Word& replacement) const;

  Word& operator+=(const Word& rhs);
  Word& operator+=(Letter rhs);
  void push_back(Letter letter) { letters_.push_back(letter); }

  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
  friend Word operator+(Word lhs, Letter rhs) { return lhs += rhs; }
  friend Word operator+(Letter lhs, const Word& rhs) { return Word(lhs) += rhs; }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Length first, then lexicographic on letter ids.
bool shortlex_less(const Word& a, const Word& b);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// True iff `token` matches [A-Za-z0-9_']+.
bool is_letter_token(std::string_view token);

/// Letter names with stable ids. Names are unique.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::initializer_list<std::string_view> names);

  /// Interns a new name; throws InputError on a duplicate or malformed token.
  Letter add(std::string_view name);
  std::optional<Letter> find(std::string_view name) const;
  Letter at(std::string_view name) const;
  const std::string& name(Letter letter) const;
  std::size_t size() const { return names_.size(); }
  bool contains(Letter letter) const { return letter.id < names_.size(); }
  bool contains(const Word& w) const;
  std::vector<Letter> letters() const;
  const std::vector<std::string>& names() const { return names_; }

  /// `base` if unused, otherwise base0, base1, ... (first free).
  std::string fresh_name(std::string_view base) const;

  /// Whitespace-separated letter names; throws InputError on unknown tokens.
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

/// All words over `letters` with min_len <= length <= max_len, in shortlex order
/// with respect to the order of `letters`.
std::vector<Word> words_up_to(std::span<const Letter> letters, std::size_t max_len,
                              std::size_t min_len = 1);

/// Streams the same sequence as words_up_to; stops early when `visit` returns false.
void for_each_word(std::span<const Letter> letters, std::size_t max_len,
                   const std::function<bool(const Word&)>& visit, std::size_t min_len = 1);

}  // namespace frs
