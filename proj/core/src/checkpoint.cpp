#include <fstream>
#include <sstream>
#include <string>

#include "antisq/error.hpp"
#include "antisq/search.hpp"

namespace antisq {

namespace {

constexpr const char* kMagic = "ANTISQ-CHECKPOINT";
constexpr int kVersion = 1;

std::string digits(const std::vector<Letter>& v) {
  std::string s;
  s.reserve(v.size());
  for (auto l : v) s.push_back(static_cast<char>('0' + l));
  return s;
}

std::vector<Letter> letters(const std::string& s) {
  std::vector<Letter> v;
  v.reserve(s.size());
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw DomainError("corrupt checkpoint: bad digit");
    v.push_back(static_cast<Letter>(ch - '0'));
  }
  return v;
}

std::string expect(std::istream& in, const std::string& key) {
  std::string line;
  if (!std::getline(in, line) || line.rfind(key + ' ', 0) != 0) {
    if (line == key) return {};
    throw DomainError("corrupt checkpoint: expected '" + key + "'");
  }
  return line.substr(key.size() + 1);
}

}  // namespace

void write_checkpoint(const std::filesystem::path& path, const SearchCheckpoint& cp) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw DomainError("cannot write checkpoint " + tmp.string());
    out << kMagic << ' ' << kVersion << '\n'
        << "constraints " << cp.constraints << '\n'
        << "nodes " << cp.nodes << '\n'
        << "best " << cp.best_length << ' ' << digits(cp.best_word) << '\n'
        << "path " << digits(cp.path) << '\n'
        << "next";
    for (auto b : cp.next_branch) out << ' ' << int{b};
    out << '\n';
    if (!out.flush()) throw DomainError("cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

SearchCheckpoint read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open checkpoint " + path.string());
  std::string magic;
  int version = 0;
  in >> magic >> version;
  if (magic != kMagic) throw DomainError(path.string() + " is not a checkpoint file");
  if (version != kVersion) throw DomainError("unsupported checkpoint version " + std::to_string(version));
  in.ignore(1);

  SearchCheckpoint cp;
  cp.constraints = expect(in, "constraints");
  cp.nodes = std::stoull(expect(in, "nodes"));
  {
    std::istringstream best(expect(in, "best"));
    std::string word;
    best >> cp.best_length >> word;
    cp.best_word = letters(word);
    if (cp.best_word.size() != cp.best_length) throw DomainError("corrupt checkpoint: best word length");
  }
  cp.path = letters(expect(in, "path"));
  std::istringstream next(expect(in, "next"));
  int b = 0;
  while (next >> b) cp.next_branch.push_back(static_cast<std::uint8_t>(b));
  return cp;
}

}  // namespace antisq
