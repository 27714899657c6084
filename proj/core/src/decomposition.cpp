#include <optional>

#include "antisq/error.hpp"
#include "antisq/fibanalysis.hpp"

namespace antisq {

const char* to_string(GTag tag) noexcept { return tag == GTag::G ? "g" : "g'"; }

namespace {

Word letters_to_word(std::vector<Letter> v) { return Word(std::move(v), 2); }

// Inverse of g (01->0, 11->1) or g' (01->0, 00->1) on a word of even length.
std::optional<Word> g_preimage(const Word& x, GTag tag) {
  if (x.size() % 2) return std::nullopt;
  std::vector<Letter> out;
  out.reserve(x.size() / 2);
  for (std::size_t i = 0; i < x.size(); i += 2) {
    const Letter a = x[i], b = x[i + 1];
    if (a == 0 && b == 1) {
      out.push_back(0);
    } else if (tag == GTag::G ? (a == 1 && b == 1) : (a == 0 && b == 0)) {
      out.push_back(1);
    } else {
      return std::nullopt;
    }
  }
  return letters_to_word(std::move(out));
}

// phi-parsing with the prefix code {001 -> 0, 01 -> 1}.
std::optional<Word> phi_preimage(std::span<const Letter> x) {
  std::vector<Letter> out;
  std::size_t i = 0;
  while (i < x.size()) {
    if (i + 3 <= x.size() && x[i] == 0 && x[i + 1] == 0 && x[i + 2] == 1) {
      out.push_back(0);
      i += 3;
    } else if (i + 2 <= x.size() && x[i] == 0 && x[i + 1] == 1) {
      out.push_back(1);
      i += 2;
    } else {
      return std::nullopt;
    }
  }
  return letters_to_word(std::move(out));
}

Word apply_g(const Word& x, GTag tag) {
  std::vector<Letter> out;
  out.reserve(2 * x.size());
  for (auto c : x.letters()) {
    out.push_back(c == 0 ? 0 : (tag == GTag::G ? 1 : 0));
    out.push_back(c == 0 ? 1 : (tag == GTag::G ? 1 : 0));
  }
  return letters_to_word(std::move(out));
}

Word apply_phi(const Word& x) {
  std::vector<Letter> out;
  out.reserve(3 * x.size());
  for (auto c : x.letters()) {
    if (c == 0) out.push_back(0);
    out.push_back(0);
    out.push_back(1);
  }
  return letters_to_word(std::move(out));
}

// Peels u phi(.) v layers until at most 4 letters remain.
bool peel(const Word& x, Decomposition& d) {
  if (x.size() <= 4) {
    d.V = x;
    return true;
  }
  for (std::size_t lu = 0; lu <= 4; ++lu) {
    for (std::size_t lv = 0; lv <= 3; ++lv) {
      if (lu + lv >= x.size()) continue;
      const auto inner = phi_preimage(x.letters().subspan(lu, x.size() - lu - lv));
      if (!inner || inner->empty() || inner->size() >= x.size()) continue;
      d.u.push_back(x.prefix(lu));
      d.v.push_back(x.suffix(lv));
      d.preimages.push_back(*inner);
      if (peel(*inner, d)) return true;
      d.u.pop_back();
      d.v.pop_back();
      d.preimages.pop_back();
    }
  }
  return false;
}

std::optional<GTag> marker(const Word& w) {
  const Word pre = w.prefix(std::min<std::size_t>(9, w.size()));
  std::optional<std::pair<std::size_t, GTag>> best;
  for (auto [m, tag] : {std::pair{"0001", GTag::GPrime}, std::pair{"0111", GTag::G}}) {
    const Word mw = Word::parse(m);
    for (std::size_t i = 0; i + 4 <= pre.size(); ++i) {
      if (pre.factor(i, 4) == mw) {
        if (!best || i < best->first) best = {i, tag};
        break;
      }
    }
  }
  if (!best) return std::nullopt;
  return best->second;
}

}  // namespace

bool Decomposition::within_bounds() const noexcept {
  if (w1.size() > 5 || w2.size() > 5 || V.size() > 4 || u.size() != v.size()) return false;
  for (const auto& x : u) {
    if (x.size() > 4) return false;
  }
  for (const auto& x : v) {
    if (x.size() > 3) return false;
  }
  return true;
}

Word recompose(const Decomposition& d) {
  Word x = d.V;
  for (std::size_t i = d.u.size(); i-- > 0;) x = d.u[i] + apply_phi(x) + d.v[i];
  return d.w1 + apply_g(x, d.G) + d.w2;
}

bool preimage_shape_ok(const Word& x) {
  if (!satisfies(x, PowerBound{Rational(4), true})) return false;
  const Word z3 = Word::parse("000"), o2 = Word::parse("11");
  for (std::size_t lp = 0; lp <= 2; ++lp) {
    for (std::size_t ls = 0; ls <= 1; ++ls) {
      if (lp + ls > x.size()) continue;
      const Word mid = x.factor(lp, x.size() - lp - ls);
      if (!mid.contains(z3) && !mid.contains(o2)) return true;
    }
  }
  return false;
}

Decomposition decompose_good_word(const Word& w) {
  if (w.alphabet_size() != 2) throw DomainError("decomposition needs a binary word");
  if (w.size() < 33) throw DomainError("decomposition needs |w| >= 33");
  if (!is_good(w)) throw DomainError("word is not good");
  if (!satisfies(w, PowerBound{Rational(15, 4), true})) throw DomainError("word is not 15/4-free");
  const auto tag = marker(w);
  if (!tag) throw VerificationFailure("no 0001 or 0111 within the first 9 letters of " + w.str());
  for (std::size_t l1 = 0; l1 <= 5; ++l1) {
    for (std::size_t l2 = 0; l2 <= 5; ++l2) {
      const auto x = g_preimage(w.factor(l1, w.size() - l1 - l2), *tag);
      if (!x) continue;
      Decomposition d;
      d.w1 = w.prefix(l1);
      d.w2 = w.suffix(l2);
      d.G = *tag;
      d.preimages.push_back(*x);
      if (peel(*x, d)) return d;
    }
  }
  throw VerificationFailure("no bounded decomposition of " + w.str());
}

}  // namespace antisq
