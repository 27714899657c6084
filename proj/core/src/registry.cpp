#include "antisq/registry.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <boost/algorithm/string/trim.hpp>

#include "antisq/error.hpp"

namespace antisq {

namespace detail {
extern const std::string_view kBuiltinRegistry;
}

namespace {

// Expected image checksums per letter. A registry file whose images do not
// hash to these values has been edited.
const std::map<std::string, std::vector<std::uint64_t>, std::less<>>& expected_checksums() {
  static const std::map<std::string, std::vector<std::uint64_t>, std::less<>> table = {
      {"phi", {0x48d4c45025e38cbeULL, 0x9b0c2200c5d333c8ULL}},
      {"g", {0x9b0c2200c5d333c8ULL, 0x9b089e00c5d01da5ULL}},
      {"g_prime", {0x9b0c2200c5d333c8ULL, 0x9b0c2300c5d3357bULL}},
      {"f", {0x48d1bf5025e14e68ULL, 0x9b0c2200c5d333c8ULL}},
      {"fibonacci", {0x9b0c2200c5d333c8ULL, 0x44bd5bd473cd4929ULL}},
      {"thue_morse", {0x9b0c2200c5d333c8ULL, 0x9b089d00c5d01bf2ULL}},
      {"vtm", {0x44bd5ad473cd4776ULL, 0x9b059700c5cddbe9ULL, 0x3857e9501cc97832ULL}},
      {"h", {0x5b355ca5eb2d22fbULL, 0xe03b860ed41a8ab8ULL, 0x3528fb724ce1c6ebULL}},
      {"xi3", {0x243ea41ec9461162ULL, 0x77f248f99d3ea326ULL, 0xa37f1dd2493a0216ULL}},
      {"xi5", {0xaa0cf856a8b312dbULL, 0xfdfc2b4dbac42158ULL, 0x6b7809c8972b2970ULL}},
      {"xi6", {0x22c5cd5f2fad1944ULL, 0x624330dcf58351a7ULL, 0xb6ab18ae30b224d5ULL}},
      {"zeta3", {0xcc015d4a670d1f51ULL, 0x461f0cda47ee3cb3ULL, 0xf3d1df358b0bae71ULL}},
      {"zeta6", {0x243ea41ec9461162ULL, 0x77f248f99d3ea326ULL, 0xa37f1dd2493a0216ULL}},
      {"zeta9", {0x2b50a651dacda62aULL, 0x0cd24597367a6be0ULL, 0x52c8d31235a6aafeULL}},
      {"zeta10", {0x0a765c317a4469d5ULL, 0xd4baa5feb4ae16eeULL, 0x641389bc4a1a110aULL}},
      {"zeta15", {0x8e20f3a5d1ef1e21ULL, 0x9e6885d3a727a48fULL, 0x3c420a763c44ed07ULL}},
      {"zeta16", {0x9251a1c12ae53fcdULL, 0xa4e077f6305795f1ULL, 0xf92d8c7ac5c8bf51ULL}},
  };
  return table;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

struct Pending {
  std::string name;
  std::map<unsigned, std::string> images;
  std::string source;
  std::map<unsigned, std::uint64_t> checksums;
  std::size_t line = 0;
};

[[noreturn]] void syntax(std::size_t line, const std::string& what) {
  throw DomainError("registry line " + std::to_string(line) + ": " + what);
}

RegistryEntry finish(const Pending& p) {
  if (p.images.empty()) syntax(p.line, "entry '" + p.name + "' has no images");
  std::vector<Word> images;
  std::vector<std::uint64_t> sums;
  for (unsigned a = 0; a < p.images.size(); ++a) {
    auto it = p.images.find(a);
    if (it == p.images.end()) syntax(p.line, "entry '" + p.name + "' skips letter " + std::to_string(a));
    const auto& s = it->second;
    images.push_back(Word::parse(s, s.find('2') == std::string::npos ? 2 : 3));
    auto c = p.checksums.find(a);
    sums.push_back(c == p.checksums.end() ? 0 : c->second);
  }
  return RegistryEntry{p.name, Morphism(std::move(images)), p.source, std::move(sums)};
}

}  // namespace

std::uint64_t image_checksum(const Word& image) {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto c : image.letters()) {
    h ^= static_cast<std::uint64_t>('0' + c);
    h *= 1099511628211ULL;
  }
  return h;
}

MorphismRegistry MorphismRegistry::parse(std::istream& in) {
  MorphismRegistry reg;
  std::optional<Pending> cur;
  auto flush = [&] {
    if (cur) reg.entries_.push_back(finish(*cur));
    cur.reset();
  };
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = boost::algorithm::trim_copy(raw);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') {
      if (!cur) continue;
      std::istringstream ss(line.substr(1));
      std::string key;
      ss >> key;
      if (key == "source:") {
        std::getline(ss >> std::ws, cur->source);
      } else if (key == "checksum") {
        unsigned letter = 0;
        std::string value;
        if (!(ss >> letter >> value)) syntax(lineno, "malformed checksum");
        cur->checksums[letter] = std::stoull(value, nullptr, 16);
      }
      continue;
    }
    if (line.back() == ':') {
      flush();
      cur = Pending{line.substr(0, line.size() - 1), {}, {}, {}, lineno};
      if (reg.find(cur->name)) syntax(lineno, "duplicate entry '" + cur->name + "'");
      continue;
    }
    const auto arrow = line.find("->");
    if (!cur || arrow == std::string::npos) syntax(lineno, "expected 'name:' or 'letter -> image'");
    const auto lhs = boost::algorithm::trim_copy(line.substr(0, arrow));
    const auto rhs = boost::algorithm::trim_copy(line.substr(arrow + 2));
    if (lhs.size() != 1 || lhs[0] < '0' || lhs[0] > '2') syntax(lineno, "bad letter '" + lhs + "'");
    cur->images[static_cast<unsigned>(lhs[0] - '0')] = rhs;
  }
  flush();
  return reg;
}

MorphismRegistry MorphismRegistry::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open registry " + path.string());
  return parse(in);
}

const MorphismRegistry& MorphismRegistry::builtin() {
  static const MorphismRegistry reg = [] {
    std::istringstream in{std::string(detail::kBuiltinRegistry)};
    return parse(in);
  }();
  return reg;
}

const RegistryEntry* MorphismRegistry::find(std::string_view name) const noexcept {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

const Morphism& MorphismRegistry::at(std::string_view name) const {
  if (const auto* e = find(name)) return e->morphism;
  throw DomainError("unknown morphism '" + std::string(name) + "'");
}

std::vector<std::string> MorphismRegistry::integrity_problems() const {
  std::vector<std::string> problems;
  const auto& expected = expected_checksums();
  for (const auto& [name, sums] : expected) {
    if (!find(name)) problems.push_back(name + ": missing");
  }
  for (const auto& e : entries_) {
    const auto it = expected.find(e.name);
    const auto& images = e.morphism.images();
    for (std::size_t a = 0; a < images.size(); ++a) {
      const auto actual = image_checksum(images[a]);
      const std::string where = e.name + " letter " + std::to_string(a);
      if (e.checksums[a] != actual) {
        problems.push_back(where + ": recorded checksum " + hex(e.checksums[a]) + " but image hashes to " + hex(actual));
      }
      if (it != expected.end() && (a >= it->second.size() || it->second[a] != actual)) {
        problems.push_back(where + ": image differs from the reference data");
      }
    }
    if (it != expected.end() && it->second.size() != images.size()) {
      problems.push_back(e.name + ": wrong number of letters");
    }
  }
  return problems;
}

void MorphismRegistry::write(std::ostream& os) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (i) os << '\n';
    os << e.name << ":\n";
    const auto& images = e.morphism.images();
    for (std::size_t a = 0; a < images.size(); ++a) os << a << " -> " << images[a] << '\n';
    if (!e.source.empty()) os << "# source: " << e.source << '\n';
    for (std::size_t a = 0; a < images.size(); ++a) {
      os << "# checksum " << a << ' ' << hex(image_checksum(images[a])) << '\n';
    }
  }
}

const std::vector<MorphismParameters>& published_morphism_parameters() {
  static const std::vector<MorphismParameters> rows = {
      {"xi3", CapKind::Order, 3, PowerBound::parse("8/3+"), 8, 6, 36},
      {"xi5", CapKind::Order, 5, PowerBound::parse("5/2+"), 10, 16, 19},
      {"xi6", CapKind::Order, 6, PowerBound::parse("7/3+"), 14, 26, 37},
      {"zeta3", CapKind::Count, 3, PowerBound::parse("3+"), 6, 4, 13},
      {"zeta6", CapKind::Count, 6, PowerBound::parse("8/3+"), 8, 6, 36},
      {"zeta9", CapKind::Count, 9, PowerBound::parse("38/15+"), 9, 17, 192},
      {"zeta10", CapKind::Count, 10, PowerBound::parse("5/2+"), 10, 17, 75},
      {"zeta15", CapKind::Count, 15, PowerBound::parse("17/7+"), 11, 12, 194},
      {"zeta16", CapKind::Count, 16, PowerBound::parse("7/3+"), 14, 13, 192},
  };
  return rows;
}

const std::vector<LongestWordRow>& published_longest_words() {
  static const std::vector<LongestWordRow> rows = {
      {CapKind::Order, 4, PowerBound::parse("8/3"), 29, "00100101001100101001100110100"},
      {CapKind::Order, 5, PowerBound::parse("5/2"), 32, "00100101100101101001011001011011"},
      {CapKind::Order, 6, PowerBound::parse("7/3"), 30, "001011001101001011010011001011"},
      {CapKind::Count, 5, PowerBound::parse("3"), 17, "00101001010010011"},
      {CapKind::Count, 8, PowerBound::parse("8/3"), 52,
       "0010010100110010100110011010011001101011001101011011"},
      {CapKind::Count, 9, PowerBound::parse("38/15"), 407,
       "00100101001101001010011010011001101001010011001010011"
       "00110100101001101001100110101100110100101001101001100"
       "11010010100110010100110011010010100110100110011010110"
       "01101001010011010011001101001010011010011001101011001"
       "10100101001101001100110100101001100101001100110100101"
       "00110100110011010110011010010100110100110011010010100"
       "11001010011001101001010011010011001101001010011001010"
       "011001101001010011001101001101011011"},
      {CapKind::Count, 14, PowerBound::parse("5/2"), 92,
       "001101001011001101100110100101100110110011010011"
       "01100110100101100110110011010011011001101100"},
      {CapKind::Count, 15, PowerBound::parse("17/7"), 156,
       "0010110011010010110010011010011001001101001011001001"
       "1001011001001101001011001001101001100100110100101100"
       "1001100101100100110100101100100110010110010011001001"},
      {CapKind::Count, 16, PowerBound::parse("7/3"), 38, "00101100101101001011001101001011001011"},
  };
  return rows;
}

}  // namespace antisq
