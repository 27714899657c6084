#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "antisq/morphism.hpp"
#include "antisq/rational.hpp"

namespace antisq {

/// FNV-1a 64 over the image's digit characters.
std::uint64_t image_checksum(const Word& image);

struct RegistryEntry {
  std::string name;
  Morphism morphism;
  std::string source;                  ///< e.g. "Table 1" or "builtin"
  std::vector<std::uint64_t> checksums;  ///< per letter, as recorded in the file
};

/// Named morphisms. Text format, one block per entry separated by blank lines:
///
///     name:
///     0 -> 001
///     1 -> 01
///     # source: builtin
///     # checksum 0 48d4c45025e38cbe
///
/// Other '#' lines are comments.
class MorphismRegistry {
 public:
  static MorphismRegistry parse(std::istream& in);
  static MorphismRegistry load(const std::filesystem::path& path);
  /// The registry compiled into the library.
  static const MorphismRegistry& builtin();

  const std::vector<RegistryEntry>& entries() const noexcept { return entries_; }
  const RegistryEntry* find(std::string_view name) const noexcept;
  /// Throws DomainError for unknown names.
  const Morphism& at(std::string_view name) const;

  /// Empty when every image matches both its recorded checksum and the
  /// checksum compiled into the library; otherwise one message per problem.
  std::vector<std::string> integrity_problems() const;
  bool intact() const { return integrity_problems().empty(); }

  void write(std::ostream& os) const;

 private:
  std::vector<RegistryEntry> entries_;
};

enum class CapKind { Order, Count };

/// Row of the verification-parameter tables for the xi and zeta families.
struct MorphismParameters {
  std::string morphism;
  CapKind kind;
  std::size_t cap;  ///< ell (forbid order >= ell) or n (at most n distinct)
  PowerBound bound; ///< weak bound beta+
  std::size_t t;
  std::size_t m;
  std::size_t uniform_length;
};

/// Row of the longest-word tables.
struct LongestWordRow {
  CapKind kind;
  std::size_t cap;
  PowerBound bound;  ///< strict bound beta
  std::size_t length;
  std::string example;
};

const std::vector<MorphismParameters>& published_morphism_parameters();
const std::vector<LongestWordRow>& published_longest_words();

}  // namespace antisq
