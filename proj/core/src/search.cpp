#include "antisq/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <mutex>
#include <sstream>
#include <thread>

#include "antisq/error.hpp"

namespace antisq {

bool ConstraintSet::empty() const noexcept {
  return !power && !max_antisquare_order && !max_distinct_antisquares && forbidden_factors.empty();
}

bool ConstraintSet::complement_closed() const {
  if (alphabet_size != 2) return false;
  return std::all_of(forbidden_factors.begin(), forbidden_factors.end(), [&](const Word& f) {
    return forbidden_factors.count(complement(f)) > 0;
  });
}

std::string ConstraintSet::describe() const {
  std::ostringstream os;
  const char* sep = "";
  if (power) {
    os << "beta=" << power->str();
    sep = " ";
  }
  if (max_antisquare_order) {
    os << sep << "order<" << *max_antisquare_order;
    sep = " ";
  }
  if (max_distinct_antisquares) {
    os << sep << "antisquares<=" << *max_distinct_antisquares;
    sep = " ";
  }
  if (!forbidden_factors.empty()) {
    os << sep << "avoid={";
    const char* comma = "";
    for (const auto& f : forbidden_factors) {
      os << comma << f;
      comma = ",";
    }
    os << '}';
    sep = " ";
  }
  if (alphabet_size != 2) os << sep << "alphabet=" << alphabet_size;
  return os.str();
}

ConstraintSet ConstraintSet::good() {
  ConstraintSet c;
  c.max_antisquare_order = 2;
  return c;
}

const char* to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::None: return "none";
    case ViolationKind::Power: return "power";
    case ViolationKind::AntisquareOrder: return "antisquare-order";
    case ViolationKind::AntisquareCount: return "antisquare-count";
    case ViolationKind::ForbiddenFactor: return "forbidden-factor";
  }
  return "unknown";
}

namespace {

void require_binary_for_antisquares(const ConstraintSet& c) {
  if (c.alphabet_size != 2 && (c.max_antisquare_order || c.max_distinct_antisquares)) {
    throw DomainError("antisquare constraints need a binary alphabet");
  }
}

// End position (exclusive) of the first occurrence of each antisquare.
std::vector<std::pair<std::size_t, Word>> antisquares_by_first_end(const Word& w) {
  std::vector<std::pair<std::size_t, Word>> out;
  for (const auto& a : inventory(w).distinct) {
    const auto hay = w.letters();
    const auto needle = a.letters();
    auto it = std::search(hay.begin(), hay.end(), needle.begin(), needle.end());
    out.emplace_back(static_cast<std::size_t>(it - hay.begin()) + a.size(), a);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : x.second.size() < y.second.size();
  });
  return out;
}

}  // namespace

WordCheck check_word(const ConstraintSet& c, const Word& w) {
  require_binary_for_antisquares(c);
  WordCheck out;
  if (c.power) {
    auto pc = satisfies(w, *c.power);
    if (!pc.ok) {
      out.kind = ViolationKind::Power;
      out.repetition = pc.violation;
      out.witness = w.factor(pc.violation->start, pc.violation->length);
      return out;
    }
  }
  if (c.max_antisquare_order || c.max_distinct_antisquares) {
    const auto inv = inventory(w);
    if (c.max_antisquare_order && inv.max_order >= *c.max_antisquare_order) {
      out.kind = ViolationKind::AntisquareOrder;
      for (const auto& a : inv.distinct) {
        if (a.size() / 2 >= *c.max_antisquare_order && (!out.witness || a.size() < out.witness->size())) {
          out.witness = a;
        }
      }
      return out;
    }
    if (c.max_distinct_antisquares && inv.count() > *c.max_distinct_antisquares) {
      out.kind = ViolationKind::AntisquareCount;
      out.witness = antisquares_by_first_end(w).at(*c.max_distinct_antisquares).second;
      return out;
    }
  }
  for (const auto& f : c.forbidden_factors) {
    if (w.contains(f)) {
      out.kind = ViolationKind::ForbiddenFactor;
      out.witness = f;
      return out;
    }
  }
  return out;
}

struct IncrementalChecker::Impl {
  std::optional<IncrementalPowerValidator> power;
  std::optional<IncrementalAntisquareTracker> antisquares;
  std::vector<std::vector<Letter>> forbidden;
  std::optional<std::size_t> order_cap;
};

IncrementalChecker::IncrementalChecker(const ConstraintSet& c, std::size_t reserve_depth)
    : impl_(std::make_unique<Impl>()) {
  require_binary_for_antisquares(c);
  if (c.power) impl_->power.emplace(*c.power, reserve_depth);
  impl_->order_cap = c.max_antisquare_order;
  if (c.max_antisquare_order || c.max_distinct_antisquares) {
    impl_->antisquares.emplace(c.max_antisquare_order, c.max_distinct_antisquares, reserve_depth);
  }
  for (const auto& f : c.forbidden_factors) {
    impl_->forbidden.emplace_back(f.letters().begin(), f.letters().end());
  }
  letters_.reserve(reserve_depth);
  pushed_.reserve(reserve_depth);
}

IncrementalChecker::~IncrementalChecker() = default;

bool IncrementalChecker::push(Letter c) {
  letters_.push_back(c);
  std::uint8_t pushed = 0;
  last_ = ViolationKind::None;
  // Bit 0: power validator, bit 1: antisquare tracker.
  if (impl_->power) {
    pushed |= 1;
    if (!impl_->power->push(c)) {
      pushed_.push_back(pushed);
      last_ = ViolationKind::Power;
      return false;
    }
  }
  if (impl_->antisquares) {
    pushed |= 2;
    if (!impl_->antisquares->push(c)) {
      pushed_.push_back(pushed);
      const auto v = impl_->antisquares->last_violation();
      last_ = impl_->order_cap && v && v->size() / 2 >= *impl_->order_cap
                  ? ViolationKind::AntisquareOrder
                  : ViolationKind::AntisquareCount;
      return false;
    }
  }
  pushed_.push_back(pushed);
  const std::size_t n = letters_.size();
  for (const auto& f : impl_->forbidden) {
    if (f.size() <= n && std::memcmp(f.data(), letters_.data() + (n - f.size()), f.size()) == 0) {
      last_ = ViolationKind::ForbiddenFactor;
      return false;
    }
  }
  return true;
}

void IncrementalChecker::pop() {
  const auto pushed = pushed_.back();
  pushed_.pop_back();
  if (pushed & 2) impl_->antisquares->pop();
  if (pushed & 1) impl_->power->pop();
  letters_.pop_back();
}

namespace {

Letter root_letters(const ConstraintSet& c) {
  return static_cast<Letter>(c.complement_closed() ? 1 : c.alphabet_size);
}

Word to_word(const std::vector<Letter>& v, unsigned alphabet) { return Word(v, alphabet); }

// Serial DFS below a fixed prefix that is already pushed into `checker`.
struct SubtreeSearch {
  SubtreeSearch(IncrementalChecker& checker, unsigned alphabet, Letter root_limit, std::size_t base,
                std::uint64_t budget, std::atomic<std::uint64_t>* shared_nodes = nullptr)
      : checker(checker), alphabet(alphabet), root_limit(root_limit), base(base), budget(budget),
        shared_nodes(shared_nodes) {}

  IncrementalChecker& checker;
  unsigned alphabet;
  Letter root_limit;
  std::size_t base;  // prefix length; the search never pops below it
  std::uint64_t budget;
  std::atomic<std::uint64_t>* shared_nodes = nullptr;  // parallel mode

  std::uint64_t nodes = 0;
  std::size_t best = 0;
  std::vector<Letter> best_word;
  bool stopped = false;
  std::vector<std::uint8_t> next;

  std::function<void(const std::vector<Letter>&)> on_improvement;
  std::function<void(SubtreeSearch&)> on_tick;  // called every tick_interval nodes
  std::uint64_t tick_interval = 0;
  std::uint64_t next_tick = 0;

  void record() {
    if (checker.size() > best) {
      best = checker.size();
      best_word = checker.letters();
      if (on_improvement) on_improvement(best_word);
    }
  }

  bool over_budget(std::uint64_t local_delta) {
    if (!shared_nodes) return nodes > budget;
    const auto total = shared_nodes->fetch_add(local_delta, std::memory_order_relaxed) + local_delta;
    return total > budget;
  }

  void run() {
    if (next.empty()) next.assign(1, 0);
    record();
    std::size_t depth = checker.size();
    std::uint64_t unreported = 0;
    while (true) {
      // Save before consuming a branch so a resumed run retries it.
      if (tick_interval && nodes >= next_tick) {
        on_tick(*this);
        next_tick = nodes + tick_interval;
      }
      const std::size_t slot = depth - base;
      const Letter limit = depth == 0 ? root_limit : static_cast<Letter>(alphabet);
      if (next[slot] >= limit) {
        if (depth == base) break;
        checker.pop();
        --depth;
        next.pop_back();
        continue;
      }
      const Letter c = next[slot]++;
      ++nodes;
      if (++unreported >= 4096 || !shared_nodes) {
        if (over_budget(shared_nodes ? unreported : 0)) {
          stopped = true;
          --next[slot];
          --nodes;
          return;
        }
        unreported = 0;
      }
      if (!checker.push(c)) {
        checker.pop();
        continue;
      }
      ++depth;
      next.push_back(0);
      record();
    }
    if (shared_nodes && unreported) over_budget(unreported);
  }
};

bool better(std::size_t len_a, const std::vector<Letter>& a, std::size_t len_b,
            const std::vector<Letter>& b) {
  if (len_a != len_b) return len_a > len_b;
  return a < b;
}

SearchOutcome parallel_longest(const ConstraintSet& c, const SearchOptions& options) {
  // Phase 1: valid prefixes of length split_depth, collected serially.
  std::vector<std::vector<Letter>> prefixes;
  std::uint64_t phase1_nodes = 0;
  std::size_t best = 0;
  std::vector<Letter> best_word;
  {
    IncrementalChecker checker(c, options.split_depth + 1);
    std::vector<std::uint8_t> next{0};
    const Letter root = root_letters(c);
    std::size_t depth = 0;
    while (true) {
      const Letter limit = depth == 0 ? root : static_cast<Letter>(c.alphabet_size);
      if (next[depth] >= limit) {
        if (depth == 0) break;
        checker.pop();
        --depth;
        next.pop_back();
        continue;
      }
      const Letter letter = next[depth]++;
      ++phase1_nodes;
      if (!checker.push(letter)) {
        checker.pop();
        continue;
      }
      ++depth;
      if (depth > best) {
        best = depth;
        best_word = checker.letters();
      }
      if (depth == options.split_depth) {
        prefixes.push_back(checker.letters());
        checker.pop();
        --depth;
        continue;
      }
      next.push_back(0);
    }
  }

  std::atomic<std::uint64_t> nodes{phase1_nodes};
  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> stopped{false};
  std::mutex mu;
  auto worker = [&] {
    IncrementalChecker checker(c, 512);
    while (!stopped.load()) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= prefixes.size()) return;
      for (auto l : prefixes[i]) checker.push(l);
      SubtreeSearch s(checker, c.alphabet_size, root_letters(c), prefixes[i].size(), options.budget, &nodes);
      s.run();
      for (std::size_t k = 0; k < prefixes[i].size(); ++k) checker.pop();
      std::lock_guard lock(mu);
      if (s.stopped) stopped = true;
      if (better(s.best, s.best_word, best, best_word)) {
        const bool longer = s.best > best;
        best = s.best;
        best_word = s.best_word;
        if (longer && options.on_improvement) options.on_improvement(to_word(best_word, c.alphabet_size));
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned j = 0; j < options.jobs; ++j) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  SearchOutcome out;
  out.max_length = best;
  out.witness = to_word(best_word, c.alphabet_size);
  out.nodes_explored = nodes.load();
  out.exhausted = !stopped.load();
  return out;
}

}  // namespace

SearchOutcome longest_word(const ConstraintSet& c, const SearchOptions& options) {
  if (c.empty()) throw DomainError("longest_word needs at least one constraint");
  const auto start = std::chrono::steady_clock::now();
  SearchOutcome out;
  if (options.jobs > 1 && !options.checkpoint && !options.resume) {
    out = parallel_longest(c, options);
  } else {
    IncrementalChecker checker(c, 512);
    SubtreeSearch s(checker, c.alphabet_size, root_letters(c), 0, options.budget);
    if (options.resume) {
      const auto cp = read_checkpoint(*options.resume);
      if (cp.constraints != c.describe()) {
        throw DomainError("checkpoint was written for '" + cp.constraints + "', not '" + c.describe() + "'");
      }
      for (auto l : cp.path) {
        if (!checker.push(l)) throw DomainError("checkpoint path violates the constraints");
      }
      s.base = 0;
      s.nodes = cp.nodes;
      s.best = cp.best_length;
      s.best_word = cp.best_word;
      s.next = cp.next_branch;
      if (s.next.size() != cp.path.size() + 1) throw DomainError("corrupt checkpoint stack");
    }
    if (options.on_improvement) {
      s.on_improvement = [&](const std::vector<Letter>& w) { options.on_improvement(to_word(w, c.alphabet_size)); };
    }
    auto save = [&](SubtreeSearch& cur) {
      SearchCheckpoint cp;
      cp.constraints = c.describe();
      cp.nodes = cur.nodes;
      cp.best_length = cur.best;
      cp.best_word = cur.best_word;
      cp.path = checker.letters();
      cp.next_branch = cur.next;
      write_checkpoint(*options.checkpoint, cp);
    };
    if (options.checkpoint) {
      s.tick_interval = options.checkpoint_interval;
      s.next_tick = s.nodes + options.checkpoint_interval;
      s.on_tick = save;
    }
    s.run();
    if (options.checkpoint && s.stopped) save(s);
    out.max_length = s.best;
    out.witness = to_word(s.best_word, c.alphabet_size);
    out.nodes_explored = s.nodes;
    out.exhausted = !s.stopped;
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

CountResult count_by_length(const ConstraintSet& c, std::size_t n_max, std::uint64_t budget) {
  if (c.empty()) throw DomainError("count_by_length needs at least one constraint");
  CountResult out;
  out.counts.assign(n_max + 1, 0);
  out.counts[0] = 1;
  const bool symmetric = c.complement_closed();
  const Letter root = root_letters(c);
  IncrementalChecker checker(c, n_max + 1);
  std::vector<std::uint8_t> next{0};
  std::size_t depth = 0;
  std::vector<std::uint64_t> raw(n_max + 1, 0);
  while (n_max > 0) {
    const Letter limit = depth == 0 ? root : static_cast<Letter>(c.alphabet_size);
    if (next[depth] >= limit) {
      if (depth == 0) break;
      checker.pop();
      --depth;
      next.pop_back();
      continue;
    }
    const Letter letter = next[depth]++;
    if (++out.nodes_explored > budget) {
      out.truncated = true;
      break;
    }
    if (!checker.push(letter)) {
      checker.pop();
      continue;
    }
    ++depth;
    ++raw[depth];
    if (depth == n_max) {
      checker.pop();
      --depth;
      continue;
    }
    next.push_back(0);
  }
  for (std::size_t i = 1; i <= n_max; ++i) out.counts[i] = symmetric ? 2 * raw[i] : raw[i];
  return out;
}

bool for_each_valid_word(const ConstraintSet& c, std::size_t length, std::uint64_t budget,
                         const std::function<void(const Word&)>& visit) {
  IncrementalChecker checker(c, length + 1);
  if (length == 0) {
    visit(Word(c.alphabet_size));
    return true;
  }
  std::vector<std::uint8_t> next{0};
  std::size_t depth = 0;
  std::uint64_t nodes = 0;
  while (true) {
    if (next[depth] >= c.alphabet_size) {
      if (depth == 0) return true;
      checker.pop();
      --depth;
      next.pop_back();
      continue;
    }
    const Letter letter = next[depth]++;
    if (++nodes > budget) return false;
    if (!checker.push(letter)) {
      checker.pop();
      continue;
    }
    ++depth;
    if (depth == length) {
      visit(to_word(checker.letters(), c.alphabet_size));
      checker.pop();
      --depth;
      continue;
    }
    next.push_back(0);
  }
}

ExtendableCores extendable_cores(const ConstraintSet& c, std::size_t core_len, std::size_t pad_len,
                                 std::uint64_t budget) {
  if (core_len == 0 || pad_len == 0) throw DomainError("core and pad lengths must be positive");
  const bool symmetric = c.complement_closed();
  const std::size_t total = 2 * pad_len + core_len;
  const std::size_t core_end = pad_len + core_len;
  ExtendableCores out;
  IncrementalChecker checker(c, total + 1);
  std::vector<std::uint8_t> next{0};
  std::size_t depth = 0;
  const Letter root = root_letters(c);
  auto current_core = [&] {
    const auto& l = checker.letters();
    return Word(std::vector<Letter>(l.begin() + static_cast<std::ptrdiff_t>(pad_len),
                                    l.begin() + static_cast<std::ptrdiff_t>(core_end)),
                c.alphabet_size);
  };
  // Abandon the right-pad search once the core is known to extend.
  auto unwind_to_core = [&] {
    while (depth > core_end) {
      checker.pop();
      --depth;
      next.pop_back();
    }
    next[depth] = static_cast<std::uint8_t>(c.alphabet_size);
  };
  while (true) {
    const Letter limit = depth == 0 ? root : static_cast<Letter>(c.alphabet_size);
    if (next[depth] >= limit) {
      if (depth == 0) break;
      checker.pop();
      --depth;
      next.pop_back();
      continue;
    }
    const Letter letter = next[depth]++;
    if (++out.nodes_explored > budget) {
      throw ResourceError("extendable_cores exceeded its budget of " + std::to_string(budget) + " nodes");
    }
    if (!checker.push(letter)) {
      checker.pop();
      continue;
    }
    ++depth;
    next.push_back(0);
    if (depth == core_end && out.cores.count(current_core())) {
      next[depth] = static_cast<std::uint8_t>(c.alphabet_size);
      continue;
    }
    if (depth == total) {
      auto y = current_core();
      if (symmetric) out.cores.insert(complement(y));
      out.cores.insert(std::move(y));
      unwind_to_core();
    }
  }
  return out;
}

}  // namespace antisq
