#include "antisq/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <queue>

#include "antisq/antisquares.hpp"
#include "antisq/error.hpp"

namespace antisq {

FactorAvoidanceAutomaton FactorAvoidanceAutomaton::build(const std::set<Word>& forbidden) {
  if (forbidden.empty()) throw DomainError("forbidden set must be nonempty");
  std::size_t k = 0;
  for (const auto& f : forbidden) {
    if (f.alphabet_size() != 2) throw DomainError("forbidden factors must be binary");
    if (f.empty()) throw DomainError("forbidden factors must be nonempty");
    k = std::max(k, f.size());
  }
  FactorAvoidanceAutomaton a;
  a.forbidden_ = forbidden;
  std::map<Word, std::size_t> index;
  auto intern = [&](const Word& label) {
    auto [it, fresh] = index.emplace(label, a.labels_.size());
    if (fresh) {
      a.labels_.push_back(label);
      a.delta_.push_back({dead, dead});
    }
    return it->second;
  };
  a.start_ = intern(Word(2));
  for (std::size_t s = 0; s < a.labels_.size(); ++s) {
    for (Letter c = 0; c < 2; ++c) {
      const Word w = a.labels_[s] + Word(std::vector<Letter>{c}, 2);
      const bool bad = std::any_of(forbidden.begin(), forbidden.end(),
                                   [&](const Word& f) { return w.ends_with(f); });
      if (bad) continue;
      const std::size_t keep = std::min(w.size(), k - 1);
      const std::size_t target = intern(w.suffix(keep));
      a.delta_[s][c] = target;
    }
  }
  return a;
}

bool FactorAvoidanceAutomaton::accepts(const Word& w) const {
  std::size_t s = start_;
  for (auto c : w.letters()) {
    if (c > 1) return false;
    s = delta_[s][c];
    if (s == dead) return false;
  }
  return true;
}

FactorAvoidanceAutomaton FactorAvoidanceAutomaton::renumbered(const std::vector<std::size_t>& order) const {
  if (order.size() != labels_.size()) throw DomainError("renumbering must cover every state");
  FactorAvoidanceAutomaton out;
  out.forbidden_ = forbidden_;
  out.labels_.resize(labels_.size());
  out.delta_.resize(labels_.size());
  for (std::size_t s = 0; s < labels_.size(); ++s) {
    out.labels_[order[s]] = labels_[s];
    for (int c = 0; c < 2; ++c) {
      out.delta_[order[s]][c] = delta_[s][c] == dead ? dead : order[delta_[s][c]];
    }
  }
  out.start_ = order[start_];
  return out;
}

void FactorAvoidanceAutomaton::dump(std::ostream& os) const {
  for (std::size_t s = 0; s < labels_.size(); ++s) {
    os << s << " [" << labels_[s] << "]:";
    for (int c = 0; c < 2; ++c) {
      os << ' ' << c << "->";
      if (delta_[s][c] == dead) {
        os << '-';
      } else {
        os << delta_[s][c];
      }
    }
    os << '\n';
  }
}

namespace {

std::vector<BigInt> step(const FactorAvoidanceAutomaton& a, const std::vector<BigInt>& v) {
  std::vector<BigInt> out(v.size());
  for (std::size_t s = 0; s < v.size(); ++s) {
    if (v[s] == 0) continue;
    for (Letter c = 0; c < 2; ++c) {
      const auto t = a.next(s, c);
      if (t != FactorAvoidanceAutomaton::dead) out[t] += v[s];
    }
  }
  return out;
}

}  // namespace

BigInt count_with_automaton(const FactorAvoidanceAutomaton& a, std::size_t n) {
  return count_series(a, n).counts.back();
}

CountSeries count_series(const FactorAvoidanceAutomaton& a, std::size_t n_max) {
  CountSeries out;
  std::string desc = "avoid";
  for (const auto& f : a.forbidden()) desc += ' ' + f.str();
  out.description = desc;
  std::vector<BigInt> v(a.state_count());
  v[a.start()] = 1;
  for (std::size_t n = 0; n <= n_max; ++n) {
    BigInt total = 0;
    for (const auto& x : v) total += x;
    out.counts.push_back(total);
    if (n < n_max) v = step(a, v);
  }
  return out;
}

void write_tsv(std::ostream& os, const CountSeries& series) {
  os << "# " << series.description << '\n';
  for (std::size_t n = 0; n < series.counts.size(); ++n) os << n << '\t' << series.counts[n] << '\n';
}

namespace {

// Tarjan's algorithm, iterative.
std::vector<std::vector<std::size_t>> strongly_connected(const FactorAvoidanceAutomaton& a) {
  const std::size_t n = a.state_count();
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  std::size_t counter = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != SIZE_MAX) continue;
    std::vector<std::pair<std::size_t, int>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, c] = call.back();
      if (c < 2) {
        const auto w = a.next(v, static_cast<Letter>(c++));
        if (w == FactorAvoidanceAutomaton::dead) continue;
        if (index[w] == SIZE_MAX) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        out.push_back(std::move(comp));
      }
      const auto done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return out;
}

struct Eigen {
  long double value;
  long double residual;
};

Eigen dominant_eigenvalue(const std::vector<std::vector<long double>>& m, long double tolerance) {
  const std::size_t n = m.size();
  std::vector<long double> v(n, 1.0L), w(n);
  auto mul = [&](const std::vector<long double>& x, std::vector<long double>& y) {
    for (std::size_t i = 0; i < n; ++i) {
      long double s = 0;
      for (std::size_t j = 0; j < n; ++j) s += m[i][j] * x[j];
      y[i] = s;
    }
  };
  Eigen best{0, INFINITY};
  int stalled = 0;
  for (int iter = 0; iter < 200'000 && stalled < 50; ++iter) {
    // Shifted step v <- (M + I) v; the shift makes the iteration converge on
    // periodic components too.
    mul(v, w);
    long double norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] += v[i];
      norm = std::max(norm, std::fabs(w[i]));
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
    mul(v, w);
    long double num = 0, den = 0;
    for (std::size_t i = 0; i < n; ++i) {
      num += v[i] * w[i];
      den += v[i] * v[i];
    }
    const long double lambda = num / den;
    long double r = 0;
    for (std::size_t i = 0; i < n; ++i) r += (w[i] - lambda * v[i]) * (w[i] - lambda * v[i]);
    r = std::sqrt(r / den);
    // Run past the tolerance until rounding noise stops the residual falling.
    if (r < best.residual) {
      best = {lambda, r};
      stalled = 0;
    } else if (r < tolerance) {
      ++stalled;
    }
  }
  return best;
}

}  // namespace

GrowthEstimate growth_rate(const FactorAvoidanceAutomaton& a, long double tolerance) {
  GrowthEstimate out;
  out.method = "power iteration per strongly connected component";
  bool cyclic = false;
  for (const auto& comp : strongly_connected(a)) {
    std::map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;
    std::vector<std::vector<long double>> m(comp.size(), std::vector<long double>(comp.size(), 0));
    bool has_edge = false;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Letter c = 0; c < 2; ++c) {
        const auto t = a.next(comp[i], c);
        auto it = local.find(t);
        if (t == FactorAvoidanceAutomaton::dead || it == local.end()) continue;
        m[it->second][i] += 1;
        has_edge = true;
      }
    }
    if (!has_edge) continue;
    cyclic = true;
    const auto e = dominant_eigenvalue(m, tolerance);
    if (e.value > out.value) {
      out.value = e.value;
      out.residual = e.residual;
    }
  }
  if (!cyclic) throw DomainError("language is finite; no growth rate");
  if (!(out.residual < tolerance)) {
    throw VerificationFailure("power iteration did not converge (residual " +
                              std::to_string(static_cast<double>(out.residual)) + ")");
  }
  const auto series = count_series(a, 600);
  const auto& c = series.counts;
  if (c[599] > 0) out.ratio_estimate = c[600].convert_to<long double>() / c[599].convert_to<long double>();
  return out;
}

Decimal50 supergolden() {
  Decimal50 lo = 1, hi = 2;
  for (int i = 0; i < 180; ++i) {
    const Decimal50 mid = (lo + hi) / 2;
    if (mid * mid * mid - mid * mid - 1 < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

std::string to_string(const Decimal50& x, int significant_digits) {
  return x.str(significant_digits, std::ios_base::fmtflags(0));
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

Polynomial pansiot_factor_product() {
  return multiply(multiply({1, 1}, {1, -1, 1}), {-1, 0, -1, 1});
}

bool expand_polynomial_identity() {
  return pansiot_factor_product() == Polynomial{-1, 0, -1, 0, 0, -1, 1};
}

std::set<Word> good_core_forbidden() {
  std::set<Word> out;
  for (const char* s : {"0011", "1100", "0110", "1001", "010101", "101010", "001011", "110100"}) {
    out.insert(Word::parse(s));
  }
  return out;
}

std::set<Word> pansiot_code_forbidden() {
  std::set<Word> out;
  for (const char* s : {"010", "101", "11111", "01110"}) out.insert(Word::parse(s));
  return out;
}

namespace {

bool ends_00(const Word& w) { return w.size() >= 2 && w[w.size() - 1] == 0 && w[w.size() - 2] == 0; }

void for_each_accepted(const FactorAvoidanceAutomaton& a, std::size_t n,
                       const std::function<void(const Word&)>& visit) {
  std::vector<Letter> buf;
  std::function<void(std::size_t)> rec = [&](std::size_t s) {
    if (buf.size() == n) {
      visit(Word(buf, 2));
      return;
    }
    for (Letter c = 0; c < 2; ++c) {
      const auto t = a.next(s, c);
      if (t == FactorAvoidanceAutomaton::dead) continue;
      buf.push_back(c);
      rec(t);
      buf.pop_back();
    }
  };
  rec(a.start());
}

}  // namespace

PansiotRecurrenceReport verify_pansiot_recurrence(std::size_t lo, std::size_t hi, std::size_t brute_max,
                                                  std::size_t decomposition_max) {
  if (lo < 6) throw DomainError("recurrence range must start at n >= 6");
  const auto forbidden = pansiot_code_forbidden();
  const auto a = FactorAvoidanceAutomaton::build(forbidden);
  PansiotRecurrenceReport r;

  std::vector<BigInt> v(a.state_count());
  v[a.start()] = 1;
  const std::size_t top = std::max(hi, brute_max);
  for (std::size_t n = 0; n <= top; ++n) {
    BigInt c = 0;
    for (std::size_t s = 0; s < v.size(); ++s) {
      if (ends_00(a.label(s))) c += v[s];
    }
    r.c.push_back(c);
    v = step(a, v);
  }

  for (std::size_t n = 0; n <= brute_max; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      std::vector<Letter> letters(n);
      for (std::size_t i = 0; i < n; ++i) letters[i] = static_cast<Letter>((bits >> (n - 1 - i)) & 1);
      const Word w(std::move(letters), 2);
      if (!ends_00(w)) continue;
      if (std::none_of(forbidden.begin(), forbidden.end(), [&](const Word& f) { return w.contains(f); })) {
        ++count;
      }
    }
    r.brute.push_back(count);
    if (BigInt(count) != r.c[n]) r.brute_agrees = false;
  }

  for (std::size_t n = lo; n <= hi; ++n) {
    if (r.c[n] != r.c[n - 1] + r.c[n - 4] + r.c[n - 6]) {
      r.recurrence_holds = false;
      if (!r.first_failure) r.first_failure = n;
    }
  }

  const std::vector<Word> suffixes{Word::parse("0"), Word::parse("1100"), Word::parse("111100")};
  for (std::size_t n = 8; n <= decomposition_max; ++n) {
    for_each_accepted(a, n, [&](const Word& w) {
      if (!ends_00(w)) return;
      int ways = 0;
      for (const auto& s : suffixes) {
        if (w.ends_with(s) && ends_00(w.prefix(n - s.size()))) ++ways;
      }
      if (ways != 1) r.suffix_decomposition_unique = false;
    });
  }
  return r;
}

}  // namespace antisq
