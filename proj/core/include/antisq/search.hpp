#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "antisq/antisquares.hpp"
#include "antisq/rational.hpp"
#include "antisq/repetitions.hpp"
#include "antisq/word.hpp"

namespace antisq {

struct ConstraintSet {
  std::optional<PowerBound> power;
  /// Forbid antisquares of order >= this value. 2 means "good".
  std::optional<std::size_t> max_antisquare_order;
  /// At most this many distinct antisquare factors.
  std::optional<std::size_t> max_distinct_antisquares;
  std::set<Word> forbidden_factors;
  unsigned alphabet_size = 2;

  bool empty() const noexcept;
  /// Every constraint is invariant under complement. Only binary sets qualify.
  bool complement_closed() const;
  /// Short human description, e.g. "beta=8/3 order<4".
  std::string describe() const;

  static ConstraintSet good();
};

enum class ViolationKind { None, Power, AntisquareOrder, AntisquareCount, ForbiddenFactor };

const char* to_string(ViolationKind kind) noexcept;

struct WordCheck {
  ViolationKind kind = ViolationKind::None;
  std::optional<Word> witness;  ///< offending factor
  std::optional<Repetition> repetition;  ///< for power violations

  bool ok() const noexcept { return kind == ViolationKind::None; }
  explicit operator bool() const noexcept { return ok(); }
};

WordCheck check_word(const ConstraintSet& c, const Word& w);

/// Combined push/pop validator for depth-first search. push() always
/// appends; after a false return the caller must pop().
class IncrementalChecker {
 public:
  explicit IncrementalChecker(const ConstraintSet& c, std::size_t reserve_depth = 64);
  IncrementalChecker(const IncrementalChecker&) = delete;
  IncrementalChecker& operator=(const IncrementalChecker&) = delete;
  ~IncrementalChecker();

  bool push(Letter c);
  void pop();
  std::size_t size() const noexcept { return letters_.size(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  ViolationKind last_violation() const noexcept { return last_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::vector<Letter> letters_;
  // Components pushed at each depth (the checker stops at the first failure).
  std::vector<std::uint8_t> pushed_;
  ViolationKind last_ = ViolationKind::None;
};

struct SearchOutcome {
  std::size_t max_length = 0;
  Word witness;
  bool exhausted = false;
  std::uint64_t nodes_explored = 0;
  double seconds = 0;
};

struct SearchOptions {
  std::uint64_t budget = 100'000'000;
  unsigned jobs = 1;
  /// Prefix depth used to split work between jobs.
  std::size_t split_depth = 14;
  /// Written every checkpoint_interval nodes when set (single job only).
  std::optional<std::filesystem::path> checkpoint;
  std::uint64_t checkpoint_interval = 50'000'000;
  /// Continue from this checkpoint file when set.
  std::optional<std::filesystem::path> resume;
  /// Called whenever a longer word is found.
  std::function<void(const Word&)> on_improvement;
};

/// Longest word satisfying c. Branches are tried in letter order and only
/// words starting with 0 are explored, so the witness is the lexicographically
/// least longest word beginning with 0.
SearchOutcome longest_word(const ConstraintSet& c, const SearchOptions& options = {});

struct CountResult {
  std::vector<std::uint64_t> counts;  ///< counts[i] = number of valid words of length i
  bool truncated = false;
  std::uint64_t nodes_explored = 0;
};

/// Exact counts for lengths 0..n_max. Complement-closed sets are counted on
/// words starting with 0 and doubled.
CountResult count_by_length(const ConstraintSet& c, std::size_t n_max,
                            std::uint64_t budget = 10'000'000);

/// Calls visit on every valid word of exactly `length` letters, in
/// lexicographic order. Returns false if the budget ran out.
bool for_each_valid_word(const ConstraintSet& c, std::size_t length, std::uint64_t budget,
                         const std::function<void(const Word&)>& visit);

struct ExtendableCores {
  std::set<Word> cores;
  std::uint64_t nodes_explored = 0;
};

/// Words y of length core_len for which some x y z of length
/// pad_len + core_len + pad_len satisfies c. Throws ResourceError when the
/// budget runs out, since a partial set would be unsound.
ExtendableCores extendable_cores(const ConstraintSet& c, std::size_t core_len, std::size_t pad_len,
                                 std::uint64_t budget = 100'000'000);

// Checkpoint files: the DFS path plus the next branch at each depth.
struct SearchCheckpoint {
  std::string constraints;  ///< ConstraintSet::describe() of the run
  std::uint64_t nodes = 0;
  std::size_t best_length = 0;
  std::vector<Letter> best_word;
  std::vector<Letter> path;
  std::vector<std::uint8_t> next_branch;  ///< size path.size() + 1
};

void write_checkpoint(const std::filesystem::path& path, const SearchCheckpoint& cp);
/// Throws DomainError on a bad magic header or unsupported version.
SearchCheckpoint read_checkpoint(const std::filesystem::path& path);

}  // namespace antisq
