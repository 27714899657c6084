#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace antisq {

using Letter = std::uint8_t;

/// Finite word over {0, ..., alphabet_size-1}, alphabet_size in {2, 3}.
///
/// Words are immutable values. The alphabet is explicit state: a ternary word
/// that happens to use only 0 and 1 is still ternary. Equality and ordering
/// look at the letters only (lexicographic, shorter prefix first).
class Word {
 public:
  Word() = default;
  explicit Word(unsigned alphabet_size);
  Word(std::vector<Letter> letters, unsigned alphabet_size = 2);

  /// Parses a digit string such as "0110". Throws DomainError on any
  /// character that is not a digit below `alphabet_size`.
  static Word parse(std::string_view digits, unsigned alphabet_size = 2);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  unsigned alphabet_size() const noexcept { return alphabet_; }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  Word factor(std::size_t start, std::size_t length) const;
  Word prefix(std::size_t length) const { return factor(0, length); }
  Word suffix(std::size_t length) const;
  bool contains(const Word& needle) const;
  bool starts_with(const Word& other) const;
  bool ends_with(const Word& other) const;

  /// Concatenation; the result uses the larger of the two alphabets.
  Word operator+(const Word& rhs) const;

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.letters_ == b.letters_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

 private:
  std::vector<Letter> letters_;
  unsigned alphabet_ = 2;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

struct RunLengthEncoding {
  std::vector<std::size_t> runs;
  Letter first_letter = 0;
};

/// Letterwise 0 <-> 1 flip. Throws DomainError for non-binary words.
Word complement(const Word& w);

/// Lengths of the maximal blocks of equal letters. Throws on the empty word.
RunLengthEncoding run_length_encoding(const Word& w);

/// All |w| cyclic shifts in rotation order, starting with w. Duplicates kept.
std::vector<Word> conjugates(const Word& w);

/// Distinct factors of length 1..max_len.
std::set<Word> factor_set(const Word& w, std::size_t max_len);

/// Distinct factors of exactly `length`.
std::set<Word> factors_of_length(const Word& w, std::size_t length);

/// Sorted, newline-delimited digit strings.
void write_factor_set(std::ostream& os, const std::set<Word>& factors);

}  // namespace antisq

template <>
struct std::hash<antisq::Word> {
  std::size_t operator()(const antisq::Word& w) const noexcept;
};
