#include <ostream>

#include <antisq/antisquares.hpp>
#include <antisq/error.hpp>
#include <antisq/registry.hpp>

#include "options.hpp"

namespace antisq::cli {

namespace {

std::vector<std::string> words_of(const AntisquareInventory& inv) {
  std::vector<std::string> out;
  for (const auto& w : inv.distinct) out.push_back(w.str());
  return out;
}

}  // namespace

void add_analyze(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("analyze", "critical exponent, antisquares and constraint check per word");
  auto words = std::make_shared<std::vector<std::string>>();
  auto file = std::make_shared<std::string>();
  auto flags = std::make_shared<ConstraintFlags>();
  cmd->add_option("words", *words, "binary digit strings");
  cmd->add_option("--file", *file, "file with one word per line");
  flags->attach(cmd);
  cmd->callback([&ctx, words, file, flags] {
    auto inputs = *words;
    if (!file->empty()) {
      const auto more = read_word_file(*file);
      inputs.insert(inputs.end(), more.begin(), more.end());
    }
    if (inputs.empty()) throw DomainError("analyze needs a word or --file");
    const ConstraintSet c = flags->build();
    int status = kOk;
    auto& h = ctx.out.human();
    for (const auto& s : inputs) {
      const Word w = Word::parse(s, 2);
      if (w.empty()) throw DomainError("empty word");
      const auto ce = critical_exponent(w);
      const auto inv = inventory(w);
      nlohmann::json rec = {{"record", "analyze"},
                            {"anchor", "analyze"},
                            {"word", w.str()},
                            {"length", w.size()},
                            {"critical_exponent", ce.value.str()},
                            {"witness", to_json(ce.witness)},
                            {"antisquares", words_of(inv)},
                            {"antisquare_count", inv.count()},
                            {"max_order", inv.max_order},
                            {"good", is_good(w)}};
      h << w << ": critical exponent " << ce.value << " (period " << ce.witness.period << ", start "
        << ce.witness.start << ", length " << ce.witness.length << "); " << inv.count() << " antisquares:";
      for (const auto& a : inv.distinct) h << ' ' << a;
      if (!c.empty()) {
        const auto check = check_word(c, w);
        rec["constraints"] = c.describe();
        rec["pass"] = check.ok();
        if (!check.ok()) {
          rec["violation"] = {{"kind", to_string(check.kind)}, {"witness", check.witness->str()}};
          status = kVerificationFailed;
          h << "; " << c.describe() << ": FAIL (" << to_string(check.kind) << ' ' << *check.witness << ')';
        } else {
          h << "; " << c.describe() << ": pass";
        }
      }
      h << '\n';
      ctx.out.record(rec);
    }
    ctx.status = status;
  });
}

void add_generate(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("generate", "apply or iterate a named morphism");
  struct Args {
    std::string morphism;
    std::string registry;
    std::optional<std::size_t> length;
    std::string apply;
    std::size_t iterate = 1;
    unsigned seed = 0;
  };
  auto a = std::make_shared<Args>();
  cmd->add_option("--morphism,-m", a->morphism, "registry name, e.g. phi, xi5, zeta16")->required();
  cmd->add_option("--registry", a->registry, "registry file instead of the built-in one");
  cmd->add_option("--length,-n", a->length, "prefix length of the fixed point");
  cmd->add_option("--seed", a->seed, "fixed point seed letter")->default_val(0);
  cmd->add_option("--apply", a->apply, "apply to this word instead");
  cmd->add_option("--iterate", a->iterate, "number of applications")->default_val(1);
  cmd->callback([&ctx, a] {
    const auto reg = a->registry.empty() ? MorphismRegistry::builtin() : MorphismRegistry::load(a->registry);
    const auto& m = reg.at(a->morphism);
    Word out;
    if (!a->apply.empty()) {
      const unsigned alphabet = a->apply.find('2') == std::string::npos ? std::max(2u, m.domain_alphabet()) : 3;
      out = m.iterate(Word::parse(a->apply, alphabet), a->iterate);
    } else if (a->length) {
      out = m.fixed_point_prefix(static_cast<Letter>(a->seed), *a->length);
    } else {
      throw DomainError("generate needs --length or --apply");
    }
    ctx.out.record({{"record", "generate"},
                    {"anchor", "generate " + a->morphism},
                    {"morphism", a->morphism},
                    {"length", out.size()},
                    {"word", out.str()}});
    ctx.out.human() << a->morphism << ": " << out.size() << " letters\n";
    ctx.status = kOk;
  });
}

void add_minimal_antisquares(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("minimal-antisquares", "brute-force minimal antisquares against the closed form");
  auto max_order = std::make_shared<std::size_t>(12);
  cmd->add_option("--max-order", *max_order, "largest order")->default_val(12)->check(CLI::Range(1, 24));
  cmd->callback([&ctx, max_order] {
    const auto table = minimal_antisquares(*max_order);
    int status = kOk;
    for (std::size_t n = 1; n <= *max_order; ++n) {
      const auto it = table.by_order.find(n);
      const std::set<Word> brute = it == table.by_order.end() ? std::set<Word>{} : it->second;
      const bool match = brute == characterized_minimal(n);
      if (!match) status = kVerificationFailed;
      std::vector<std::string> words;
      for (const auto& w : brute) words.push_back(w.str());
      ctx.out.record({{"record", "minimal-antisquares"},
                      {"anchor", "minimal antisquares order " + std::to_string(n)},
                      {"order", n},
                      {"count", brute.size()},
                      {"words", words},
                      {"closed_form_match", match}});
      ctx.out.human() << "order " << n << ": " << brute.size() << " minimal antisquares"
                      << (match ? "" : "  MISMATCH with closed form") << '\n';
    }
    ctx.status = status;
  });
}

}  // namespace antisq::cli
