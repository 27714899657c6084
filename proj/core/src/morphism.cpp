#include "antisq/morphism.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <unordered_set>

#include "antisq/error.hpp"

namespace antisq {

Morphism::Morphism(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.size() < 2 || images_.size() > 3) {
    throw DomainError("morphism domain must have 2 or 3 letters");
  }
  target_alphabet_ = 2;
  for (const auto& im : images_) {
    if (im.empty()) throw DomainError("morphism images must be nonempty");
    target_alphabet_ = std::max(target_alphabet_, im.alphabet_size());
  }
  const auto q = images_.front().size();
  if (std::all_of(images_.begin(), images_.end(), [q](const Word& w) { return w.size() == q; })) {
    uniform_length_ = q;
  }
}

Morphism Morphism::parse(std::initializer_list<std::string_view> images) {
  std::vector<Word> ws;
  for (auto s : images) {
    ws.push_back(Word::parse(s, s.find('2') == std::string_view::npos ? 2 : 3));
  }
  return Morphism(std::move(ws));
}

bool Morphism::prolongable_on(Letter a) const noexcept {
  return a < images_.size() && images_[a].size() >= 2 && images_[a][0] == a;
}

Word Morphism::apply(const Word& w) const {
  std::vector<Letter> out;
  std::size_t total = 0;
  for (auto c : w.letters()) {
    if (c >= images_.size()) {
      throw DomainError("letter " + std::to_string(int{c}) + " outside morphism domain");
    }
    total += images_[c].size();
  }
  out.reserve(total);
  for (auto c : w.letters()) {
    const auto im = images_[c].letters();
    out.insert(out.end(), im.begin(), im.end());
  }
  return Word(std::move(out), target_alphabet_);
}

Word Morphism::iterate(const Word& w, std::size_t times) const {
  Word cur = w;
  for (std::size_t i = 0; i < times; ++i) cur = apply(cur);
  return cur;
}

Word Morphism::fixed_point_prefix(Letter seed, std::size_t length) const {
  if (!prolongable_on(seed)) {
    throw DomainError("morphism is not prolongable on letter " + std::to_string(int{seed}));
  }
  if (target_alphabet_ > domain_alphabet()) {
    throw DomainError("fixed point needs target alphabet within the domain");
  }
  // Expand in place: letters [0, done) are final, later images append.
  std::vector<Letter> buf{seed};
  std::size_t next = 0;
  while (buf.size() < length) {
    const auto im = images_[buf[next]].letters();
    // The seed's image re-emits the seed itself.
    const std::size_t skip = next == 0 ? 1 : 0;
    buf.insert(buf.end(), im.begin() + static_cast<std::ptrdiff_t>(skip), im.end());
    ++next;
  }
  buf.resize(length);
  return Word(std::move(buf), domain_alphabet());
}

bool is_synchronizing(const Morphism& m) {
  if (!m.uniform_length()) throw DomainError("synchronization is defined for uniform morphisms");
  const std::size_t q = *m.uniform_length();
  const unsigned k = m.domain_alphabet();
  for (Letter a = 0; a < k; ++a) {
    for (Letter b = 0; b < k; ++b) {
      const Word ab = m.image(a) + m.image(b);
      for (Letter c = 0; c < k; ++c) {
        const auto hay = ab.letters();
        const auto needle = m.image(c).letters();
        for (std::size_t i = 0; i + q <= hay.size(); ++i) {
          if (!std::equal(needle.begin(), needle.end(), hay.begin() + static_cast<std::ptrdiff_t>(i))) {
            continue;
          }
          const bool ok = (i == 0 && c == a) || (i == q && c == b);
          if (!ok) return false;
        }
      }
    }
  }
  return true;
}

void for_each_squarefree_word(std::size_t length, unsigned alphabet_size,
                              const std::function<void(const Word&)>& visit) {
  if (length == 0) {
    visit(Word(alphabet_size));
    return;
  }
  IncrementalPowerValidator validator(PowerBound{Rational(2), true}, length);
  std::vector<Letter> next(length + 1, 0);
  // Iterative DFS: next[d] is the next letter to try at depth d.
  std::size_t depth = 0;
  while (true) {
    if (next[depth] >= alphabet_size) {
      if (depth == 0) return;
      next[depth] = 0;
      validator.pop();
      --depth;
      continue;
    }
    const Letter c = static_cast<Letter>(next[depth]++);
    if (!validator.push(c)) {
      validator.pop();
      continue;
    }
    if (depth + 1 == length) {
      visit(Word(validator.letters(), alphabet_size));
      validator.pop();
      continue;
    }
    ++depth;
  }
}

std::vector<Word> squarefree_words(std::size_t length, unsigned alphabet_size) {
  std::vector<Word> out;
  for_each_squarefree_word(length, alphabet_size, [&](const Word& w) { out.push_back(w); });
  return out;
}

ImagePowerCheck image_power_check(const Morphism& m, const PowerBound& bound, std::size_t t) {
  if (m.domain_alphabet() != 3) throw DomainError("image check expects a ternary domain");
  ImagePowerCheck result;
  for_each_squarefree_word(t, 3, [&](const Word& u) {
    if (!result.ok) return;
    ++result.words_checked;
    const auto check = satisfies(m.apply(u), bound);
    if (!check.ok) {
      result.ok = false;
      result.preimage = u;
      result.violation = check.violation;
    }
  });
  return result;
}

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// Length-s factors of squarefree ternary words of length T, imaged by m.
std::vector<Word> imaged_factors(const Morphism& m, const std::vector<Word>& test_words,
                                 std::size_t s) {
  std::set<Word> pre;
  for (const auto& w : test_words) {
    const std::size_t len = std::min(s, w.size());
    for (std::size_t i = 0; i + len <= w.size(); ++i) pre.insert(w.factor(i, len));
  }
  std::vector<Word> out;
  out.reserve(pre.size());
  for (const auto& u : pre) out.push_back(m.apply(u));
  return out;
}

std::size_t complement_bound_at(const Morphism& m, const std::vector<Word>& test_words) {
  const std::size_t q = *m.uniform_length();
  std::size_t best = 0;
  for (std::size_t len = 1;; ++len) {
    const auto images = imaged_factors(m, test_words, ceil_div(len - 1, q) + 1);
    std::unordered_set<Word> factors;
    for (const auto& x : images) {
      for (std::size_t i = 0; i + len <= x.size(); ++i) factors.insert(x.factor(i, len));
    }
    const bool hit = std::any_of(factors.begin(), factors.end(),
                                 [&](const Word& v) { return factors.count(complement(v)) > 0; });
    if (!hit) return best;
    best = len;
    if (len > 4096) throw ResourceError("complement factor bound does not appear to be finite");
  }
}

}  // namespace

ComplementFactorBound complement_factor_bound(const Morphism& m, std::size_t min_t,
                                              std::size_t max_t) {
  if (!m.uniform_length()) throw DomainError("complement factor bound needs a uniform morphism");
  if (m.domain_alphabet() != 3 || m.target_alphabet() != 2) {
    throw DomainError("complement factor bound needs a ternary-to-binary morphism");
  }
  ComplementFactorBound out;
  std::size_t same = 0;
  for (std::size_t T = 4; T <= max_t; ++T) {
    const auto words = squarefree_words(T, 3);
    const std::size_t value = complement_bound_at(m, words);
    same = (!out.history.empty() && out.history.back().second == value) ? same + 1 : 1;
    out.history.emplace_back(T, value);
    if (same >= 3 && T >= min_t) {
      out.value = value;
      out.stable_at = T;
      return out;
    }
  }
  throw ResourceError("complement factor bound did not stabilize by T = " + std::to_string(max_t));
}

AntisquareInventory morphic_antisquare_inventory(const Morphism& m, std::size_t window) {
  if (!m.uniform_length()) throw DomainError("morphic inventory needs a uniform morphism");
  if (m.target_alphabet() != 2) throw DomainError("morphic inventory needs binary images");
  const std::size_t q = *m.uniform_length();
  const std::size_t len = ceil_div(window, q) + 2;
  AntisquareInventory inv;
  for_each_squarefree_word(len, m.domain_alphabet(), [&](const Word& u) {
    const Word x = m.apply(u);
    for (std::size_t k = 1; 2 * k <= window && 2 * k <= x.size(); ++k) {
      for (std::size_t i = 0; i + 2 * k <= x.size(); ++i) {
        bool anti = true;
        for (std::size_t j = 0; j < k && anti; ++j) anti = x[i + j] != x[i + k + j];
        if (!anti) continue;
        inv.distinct.insert(x.factor(i, 2 * k));
        inv.max_order = std::max(inv.max_order, k);
      }
    }
  });
  return inv;
}

MorphismCheckReport check_morphism(const Morphism& m, const PowerBound& bound, std::size_t t) {
  MorphismCheckReport r;
  r.bound = bound;
  r.t = t;
  r.synchronizing = is_synchronizing(m);
  r.image_bound_ok = image_power_check(m, bound, t).ok;
  r.complement_bound = complement_factor_bound(m, t);
  r.inventory = morphic_antisquare_inventory(m, 2 * r.complement_bound.value);
  return r;
}

void write_report(std::ostream& os, const MorphismCheckReport& r) {
  os << "synchronizing: " << (r.synchronizing ? "true" : "false") << '\n'
     << "bound: " << r.bound.str() << '\n'
     << "t: " << r.t << '\n'
     << "image_bound_ok: " << (r.image_bound_ok ? "true" : "false") << '\n'
     << "complement_factor_bound: " << r.complement_bound.value << '\n'
     << "stabilized_at_T: " << r.complement_bound.stable_at << '\n'
     << "antisquare_count: " << r.inventory.count() << '\n'
     << "antisquare_max_order: " << r.inventory.max_order << '\n'
     << "antisquares:";
  for (const auto& w : r.inventory.distinct) os << ' ' << w;
  os << '\n';
}

}  // namespace antisq
