#include <iostream>

#include <CLI11.hpp>

#include <antisq/error.hpp>

#include "options.hpp"

int main(int argc, char** argv) {
  using namespace antisq::cli;
  Context ctx{Emitter(std::cout, std::cerr)};
  CLI::App app{"antisq: antisquares, critical exponents and morphic constructions"};
  app.require_subcommand(1);
  add_analyze(app, ctx);
  add_generate(app, ctx);
  add_search(app, ctx);
  add_count(app, ctx);
  add_verify_morphism(app, ctx);
  add_minimal_antisquares(app, ctx);
  add_fib_report(app, ctx);
  add_reproduce_tables(app, ctx);
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kUsage;
  } catch (const antisq::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const antisq::VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const antisq::ResourceError& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kBudget;
  }
  return ctx.status;
}
