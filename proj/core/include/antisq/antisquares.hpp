#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "antisq/word.hpp"

namespace antisq {

/// Order |x| if w = x·complement(x) with x nonempty, otherwise nullopt.
std::optional<std::size_t> antisquare_order(const Word& w);
inline bool is_antisquare(const Word& w) { return antisquare_order(w).has_value(); }

struct AntisquareInventory {
  std::set<Word> distinct;
  std::size_t max_order = 0;

  std::size_t count() const noexcept { return distinct.size(); }
};

/// Every distinct antisquare factor of a binary word.
AntisquareInventory inventory(const Word& w);

/// True iff the only antisquare factors are 01 and 10.
bool is_good(const Word& w);

/// Antisquare whose proper factors contain no antisquare besides 01 and 10.
bool is_minimal_antisquare(const Word& w);

struct MinimalAntisquareTable {
  std::map<std::size_t, std::set<Word>> by_order;
};

/// Brute force over all 2^n antisquares of each order n <= max_order.
MinimalAntisquareTable minimal_antisquares(std::size_t max_order);

/// Closed form: literal sets for orders 1-4, otherwise the 2n conjugates of
/// 0^{n-2} 1 0 1^{n-2} 0 1.
std::set<Word> characterized_minimal(std::size_t order);

/// "order<TAB>word" lines, orders ascending, words sorted.
void write_table(std::ostream& os, const MinimalAntisquareTable& table);

/// Binary code p with p_i = 0 iff w[i+1] = w[i]. Requires |w| >= 1.
Word pansiot_encode(const Word& w);
Word pansiot_decode(const Word& code, Letter first);

/// Tracks distinct antisquares along a depth-first search path. Any new
/// antisquare factor must be a suffix, so push() examines suffixes only.
///
/// push() always appends; after a false return the caller must pop().
class IncrementalAntisquareTracker {
 public:
  /// forbid_order_from: reject antisquares of order >= this value.
  /// max_distinct: reject once more than this many distinct antisquares occur.
  IncrementalAntisquareTracker(std::optional<std::size_t> forbid_order_from,
                               std::optional<std::size_t> max_distinct,
                               std::size_t reserve_depth = 64);

  bool push(Letter c);
  void pop();

  std::size_t size() const noexcept { return letters_.size(); }
  std::size_t distinct_count() const noexcept { return seen_.size(); }
  std::vector<Word> distinct() const;

  /// Orders of the antisquare suffixes created by the last push().
  const std::vector<std::size_t>& new_suffix_orders() const noexcept { return new_orders_; }
  /// Offending antisquare of the last failed push().
  std::optional<Word> last_violation() const { return violation_; }

 private:
  struct Seen {
    std::size_t start;
    std::size_t length;
    std::size_t depth;  // word length when first seen
  };

  std::optional<std::size_t> forbid_order_from_;
  std::optional<std::size_t> max_distinct_;
  std::vector<Letter> letters_;
  std::vector<std::uint32_t> runs_;  // mismatch runs per order, flat triangle
  std::vector<std::size_t> row_offset_;
  std::vector<Seen> seen_;
  std::vector<std::size_t> new_orders_;
  std::optional<Word> violation_;
  bool poisoned_ = false;
};

}  // namespace antisq
