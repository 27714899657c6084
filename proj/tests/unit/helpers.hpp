#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <antisq/word.hpp>

namespace antisq::testing {

inline Word w(const char* digits) { return Word::parse(digits); }

inline Word random_word(std::mt19937_64& rng, std::size_t length, unsigned alphabet = 2) {
  std::uniform_int_distribution<int> letter(0, static_cast<int>(alphabet) - 1);
  std::vector<Letter> letters(length);
  for (auto& a : letters) a = static_cast<Letter>(letter(rng));
  return Word(std::move(letters), alphabet);
}

// All binary words of a given length, in lexicographic order.
template <class F>
void for_each_binary_word(std::size_t length, F&& f) {
  const std::uint64_t total = std::uint64_t{1} << length;
  std::vector<Letter> letters(length);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (std::size_t i = 0; i < length; ++i)
      letters[i] = static_cast<Letter>((bits >> (length - 1 - i)) & 1U);
    f(Word(letters));
  }
}

}  // namespace antisq::testing
