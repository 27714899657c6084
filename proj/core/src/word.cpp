#include "antisq/word.hpp"

#include <algorithm>
#include <ostream>
#include <string_view>

#include "antisq/error.hpp"

namespace antisq {

namespace {

void check_alphabet(unsigned alphabet_size) {
  if (alphabet_size < 2 || alphabet_size > 3) {
    throw DomainError("alphabet size must be 2 or 3, got " + std::to_string(alphabet_size));
  }
}

}  // namespace

Word::Word(unsigned alphabet_size) : alphabet_(alphabet_size) { check_alphabet(alphabet_size); }

Word::Word(std::vector<Letter> letters, unsigned alphabet_size)
    : letters_(std::move(letters)), alphabet_(alphabet_size) {
  check_alphabet(alphabet_size);
  for (Letter c : letters_) {
    if (c >= alphabet_size) {
      throw DomainError("letter " + std::to_string(int{c}) + " outside alphabet of size " +
                        std::to_string(alphabet_size));
    }
  }
}

Word Word::parse(std::string_view digits, unsigned alphabet_size) {
  check_alphabet(alphabet_size);
  std::vector<Letter> letters;
  letters.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || static_cast<unsigned>(ch - '0') >= alphabet_size) {
      throw DomainError("invalid letter '" + std::string(1, ch) + "' in word \"" +
                        std::string(digits) + "\"");
    }
    letters.push_back(static_cast<Letter>(ch - '0'));
  }
  Word w(alphabet_size);
  w.letters_ = std::move(letters);
  return w;
}

Word Word::factor(std::size_t start, std::size_t length) const {
  if (start > size() || length > size() - start) {
    throw DomainError("factor out of range");
  }
  Word out(alphabet_);
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(start),
                      letters_.begin() + static_cast<std::ptrdiff_t>(start + length));
  return out;
}

Word Word::suffix(std::size_t length) const {
  if (length > size()) throw DomainError("suffix longer than word");
  return factor(size() - length, length);
}

bool Word::contains(const Word& needle) const {
  return std::search(letters_.begin(), letters_.end(), needle.letters_.begin(),
                     needle.letters_.end()) != letters_.end();
}

bool Word::starts_with(const Word& other) const {
  return other.size() <= size() &&
         std::equal(other.letters_.begin(), other.letters_.end(), letters_.begin());
}

bool Word::ends_with(const Word& other) const {
  return other.size() <= size() &&
         std::equal(other.letters_.rbegin(), other.letters_.rend(), letters_.rbegin());
}

Word Word::operator+(const Word& rhs) const {
  Word out(std::max(alphabet_, rhs.alphabet_));
  out.letters_.reserve(size() + rhs.size());
  out.letters_ = letters_;
  out.letters_.insert(out.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return out;
}

std::string Word::str() const {
  std::string s(letters_.size(), '0');
  for (std::size_t i = 0; i < letters_.size(); ++i) s[i] = static_cast<char>('0' + letters_[i]);
  return s;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

Word complement(const Word& w) {
  if (w.alphabet_size() != 2) throw DomainError("complement requires a binary word");
  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  for (auto& c : out) c ^= 1U;
  return Word(std::move(out), 2);
}

RunLengthEncoding run_length_encoding(const Word& w) {
  if (w.empty()) throw DomainError("run-length encoding of the empty word");
  RunLengthEncoding rle;
  rle.first_letter = w[0];
  std::size_t run = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1]) {
      ++run;
    } else {
      rle.runs.push_back(run);
      run = 1;
    }
  }
  rle.runs.push_back(run);
  return rle;
}

std::vector<Word> conjugates(const Word& w) {
  if (w.empty()) throw DomainError("conjugates of the empty word");
  std::vector<Word> out;
  out.reserve(w.size());
  const Word ww = w + w;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(ww.factor(i, w.size()));
  return out;
}

std::set<Word> factors_of_length(const Word& w, std::size_t length) {
  std::set<Word> out;
  if (length == 0 || length > w.size()) return out;
  for (std::size_t i = 0; i + length <= w.size(); ++i) out.insert(w.factor(i, length));
  return out;
}

std::set<Word> factor_set(const Word& w, std::size_t max_len) {
  std::set<Word> out;
  for (std::size_t len = 1; len <= max_len && len <= w.size(); ++len) {
    out.merge(factors_of_length(w, len));
  }
  return out;
}

void write_factor_set(std::ostream& os, const std::set<Word>& factors) {
  for (const auto& f : factors) os << f << '\n';
}

}  // namespace antisq

std::size_t std::hash<antisq::Word>::operator()(const antisq::Word& w) const noexcept {
  // FNV-1a over the letters; the length is mixed in so "0" and "00" differ.
  std::uint64_t h = 1469598103934665603ULL ^ w.size();
  for (auto c : w.letters()) {
    h ^= c + 1U;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}
