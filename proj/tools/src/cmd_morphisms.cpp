#include <ostream>
#include <sstream>

#include <antisq/error.hpp>

#include "options.hpp"
#include "tables.hpp"

namespace antisq::cli {

MorphismRowResult check_morphism_row(const MorphismRegistry& reg, const MorphismParameters& row) {
  MorphismRowResult r{row, {}, {}};
  const auto& m = reg.at(row.morphism);
  if (m.uniform_length() != row.uniform_length) {
    r.failures.push_back("uniform length " + std::to_string(m.uniform_length().value_or(0)) + " != " +
                         std::to_string(row.uniform_length));
  }
  r.report = check_morphism(m, row.bound, row.t);
  if (!r.report.synchronizing) r.failures.push_back("not synchronizing");
  if (!r.report.image_bound_ok) r.failures.push_back("image of a squarefree word violates " + row.bound.str());
  if (r.report.complement_bound.value != row.m) {
    r.failures.push_back("m = " + std::to_string(r.report.complement_bound.value) + ", expected " +
                         std::to_string(row.m));
  }
  if (row.kind == CapKind::Order && r.report.inventory.max_order >= row.cap) {
    r.failures.push_back("antisquare of order " + std::to_string(r.report.inventory.max_order));
  }
  if (row.kind == CapKind::Count && r.report.inventory.count() > row.cap) {
    r.failures.push_back(std::to_string(r.report.inventory.count()) + " distinct antisquares");
  }
  return r;
}

nlohmann::json to_json(const MorphismRowResult& r) {
  std::vector<std::string> antisquares;
  for (const auto& w : r.report.inventory.distinct) antisquares.push_back(w.str());
  return {{"morphism", r.row.morphism},
          {r.row.kind == CapKind::Order ? "ell" : "n", r.row.cap},
          {"beta", r.row.bound.str()},
          {"t", r.row.t},
          {"m", r.report.complement_bound.value},
          {"m_expected", r.row.m},
          {"stabilized_at_T", r.report.complement_bound.stable_at},
          {"synchronizing", r.report.synchronizing},
          {"image_bound_ok", r.report.image_bound_ok},
          {"antisquare_count", r.report.inventory.count()},
          {"antisquare_max_order", r.report.inventory.max_order},
          {"antisquares", antisquares},
          {"status", r.pass() ? "pass" : "fail"},
          {"failures", r.failures}};
}

ConstraintSet constraints_for(const LongestWordRow& row) {
  ConstraintSet c;
  c.power = row.bound;
  if (row.kind == CapKind::Order) {
    c.max_antisquare_order = row.cap;
  } else {
    c.max_distinct_antisquares = row.cap;
  }
  return c;
}

void add_verify_morphism(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("verify-morphism", "synchronization, image power check, bound m, antisquares");
  struct Args {
    std::string name;
    std::string registry;
    std::string beta;
    std::optional<std::size_t> t;
  };
  auto a = std::make_shared<Args>();
  cmd->add_option("morphism", a->name, "registry name, e.g. xi5")->required();
  cmd->add_option("--registry", a->registry, "registry file instead of the built-in one");
  cmd->add_option("--beta", a->beta, "bound for the image check (default: the table value)");
  cmd->add_option("--t", a->t, "squarefree word length for the image check (default: the table value)");
  cmd->callback([&ctx, a] {
    const auto reg = a->registry.empty() ? MorphismRegistry::builtin() : MorphismRegistry::load(a->registry);
    const auto& rows = published_morphism_parameters();
    auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.morphism == a->name; });
    auto& h = ctx.out.human();
    if (it != rows.end() && a->beta.empty() && !a->t) {
      const auto r = check_morphism_row(reg, *it);
      auto rec = to_json(r);
      rec["record"] = "verify-morphism";
      rec["anchor"] = std::string(it->kind == CapKind::Order ? "Table 2 " : "Table 5 ") + a->name;
      rec["registry_intact"] = reg.intact();
      ctx.out.record(rec);
      write_report(h, r.report);
      for (const auto& f : r.failures) h << "FAIL: " << f << '\n';
      ctx.status = r.pass() ? kOk : kVerificationFailed;
      return;
    }
    if (a->beta.empty() || !a->t) throw DomainError("--beta and --t are required for " + a->name);
    const auto bound = PowerBound::parse(a->beta);
    const auto report = check_morphism(reg.at(a->name), bound, *a->t);
    std::ostringstream text;
    write_report(text, report);
    std::vector<std::string> antisquares;
    for (const auto& w : report.inventory.distinct) antisquares.push_back(w.str());
    ctx.out.record({{"record", "verify-morphism"},
                    {"anchor", "verify-morphism " + a->name},
                    {"morphism", a->name},
                    {"beta", bound.str()},
                    {"t", *a->t},
                    {"synchronizing", report.synchronizing},
                    {"image_bound_ok", report.image_bound_ok},
                    {"m", report.complement_bound.value},
                    {"antisquare_count", report.inventory.count()},
                    {"antisquare_max_order", report.inventory.max_order},
                    {"antisquares", antisquares}});
    h << text.str();
    ctx.status = report.synchronizing && report.image_bound_ok ? kOk : kVerificationFailed;
  });
}

}  // namespace antisq::cli
