#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "antisq/antisquares.hpp"
#include "antisq/rational.hpp"
#include "antisq/repetitions.hpp"
#include "antisq/word.hpp"

namespace antisq {

/// Letter-to-word map over a domain alphabet of size 2 or 3.
class Morphism {
 public:
  explicit Morphism(std::vector<Word> images);
  /// Images as digit strings; the target alphabet is ternary iff a '2' occurs.
  static Morphism parse(std::initializer_list<std::string_view> images);

  unsigned domain_alphabet() const noexcept { return static_cast<unsigned>(images_.size()); }
  unsigned target_alphabet() const noexcept { return target_alphabet_; }
  const Word& image(Letter a) const { return images_.at(a); }
  const std::vector<Word>& images() const noexcept { return images_; }
  std::optional<std::size_t> uniform_length() const noexcept { return uniform_length_; }
  bool prolongable_on(Letter a) const noexcept;

  Word apply(const Word& w) const;
  Word iterate(const Word& w, std::size_t times) const;
  /// Exactly `length` letters of the fixed point starting with `seed`.
  Word fixed_point_prefix(Letter seed, std::size_t length) const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  std::vector<Word> images_;
  unsigned target_alphabet_ = 2;
  std::optional<std::size_t> uniform_length_;
};

/// Uniform morphism m of length q is synchronizing when, for all letters
/// a, b, c, every occurrence of m(c) in m(a)m(b) is at offset 0 with c = a or
/// at offset q with c = b. Throws DomainError for non-uniform morphisms.
bool is_synchronizing(const Morphism& m);

/// Visits squarefree words of the given length in lexicographic order.
void for_each_squarefree_word(std::size_t length, unsigned alphabet_size,
                              const std::function<void(const Word&)>& visit);
std::vector<Word> squarefree_words(std::size_t length, unsigned alphabet_size = 3);

struct ImagePowerCheck {
  bool ok = true;
  std::size_t words_checked = 0;
  std::optional<Word> preimage;  ///< first squarefree word whose image fails
  std::optional<Repetition> violation;
};

/// Does m(u) satisfy `bound` for every squarefree ternary u of length t?
ImagePowerCheck image_power_check(const Morphism& m, const PowerBound& bound, std::size_t t);

struct ComplementFactorBound {
  std::size_t value = 0;     ///< the stabilized m
  std::size_t stable_at = 0; ///< test-word length T where the rule stopped
  std::vector<std::pair<std::size_t, std::size_t>> history;  ///< (T, bound at T)
};

/// Largest |v| such that v and its complement both occur in images of
/// squarefree ternary words. Evaluated for test-word lengths T = 4, 5, ...:
/// a length-L factor of m(w) lies inside the image of a factor of w of
/// length ceil((L-1)/q)+1, so only those factors of length-T squarefree words
/// are imaged. Stops once the value is unchanged for three consecutive T and
/// T >= min_t; throws ResourceError past max_t.
ComplementFactorBound complement_factor_bound(const Morphism& m, std::size_t min_t = 0,
                                              std::size_t max_t = 24);

/// Distinct antisquares among factors of length <= window of images of all
/// squarefree ternary words of length ceil(window/q) + 2.
AntisquareInventory morphic_antisquare_inventory(const Morphism& m, std::size_t window);

struct MorphismCheckReport {
  bool synchronizing = false;
  bool image_bound_ok = false;
  std::size_t t = 0;
  PowerBound bound;
  ComplementFactorBound complement_bound;
  AntisquareInventory inventory;
};

MorphismCheckReport check_morphism(const Morphism& m, const PowerBound& bound, std::size_t t);

/// Structured "key: value" text.
void write_report(std::ostream& os, const MorphismCheckReport& report);

}  // namespace antisq
