#include <fstream>
#include <memory>

#include <CLI11.hpp>

#include "commands.hpp"
#include "dlct/error.hpp"

namespace dlct::cli {
namespace {

struct Flags {
  RunConfig cfg;
  std::string format = "json";
  std::optional<std::string> modulus;
};

void add_source_options(CLI::App* sub, Flags& flags) {
  auto& fn = flags.cfg.function;
  sub->add_option("--lut-file", fn.lut_file, "Lookup table file (decimal or 0x-hex entries, optional 'n=.. m=..' header)");
  sub->add_option("--poly", fn.poly, "Univariate polynomial, e.g. \"1*x^3 + 0x2*x^5\" (needs --n)");
  sub->add_option("--catalog", fn.catalog, std::string("Catalog function: ") + kCatalogNames);
  sub->add_option("--n", fn.n, "Field dimension");
  sub->add_option("--modulus", flags.modulus, "Field modulus override (decimal or 0x-hex)");
  sub->add_option("--i", fn.i, "Gold parameter i");
  sub->add_option("--k", fn.k, "Kasami or Bracken-Leander parameter k");
  sub->add_option("--index", fn.index, "Optimal S-box index 0..15");
}

void add_output_options(CLI::App* sub, Flags& flags) {
  sub->add_option("--format", flags.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  sub->add_option("--output", flags.cfg.output, "Write to this file instead of stdout");
  sub->add_option("--seed", flags.cfg.function.seed, "Seed for randomized steps");
  sub->add_option("--threads", flags.cfg.threads, "Worker threads for table rows")->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differential-linear connectivity tables of vectorial Boolean functions", "dlct"};
  app.require_subcommand(1);
  Flags flags;
  auto& cfg = flags.cfg;

  auto* table = app.add_subcommand("table", "Compute a full ddt, walsh, dlct or ac table");
  add_source_options(table, flags);
  add_output_options(table, flags);
  table->add_option("--kind", cfg.kind, "ddt, walsh, dlct or ac");

  auto* analyze = app.add_subcommand("analyze", "Report DLU, uniformities, flags and the DLCT spectrum");
  add_source_options(analyze, flags);
  add_output_options(analyze, flags);

  auto* verify = app.add_subcommand("verify", "Run a named check and exit 1 if any instance fails");
  add_source_options(verify, flags);
  add_output_options(verify, flags);
  verify->add_option("--check", cfg.check, std::string("One of: ") + kCheckNames)->required();
  verify->add_option("--trials", cfg.trials, "Random transforms for the invariance checks");

  auto* reproduce = app.add_subcommand("reproduce", "Compare computed spectra with the published ones");
  add_source_options(reproduce, flags);
  add_output_options(reproduce, flags);
  reproduce->add_option("target", cfg.target, std::string("One of: ") + kTargetNames)->required();
  reproduce->add_option("--trials", cfg.trials, "Random quadratics per dimension");

  auto* search = app.add_subcommand("search", "Look for functions with small DLU");
  add_source_options(search, flags);
  add_output_options(search, flags);
  search->add_option("--mode", cfg.mode, "monomial or random")->check(CLI::IsMember({"monomial", "random"}));
  search->add_option("--max-dlu", cfg.max_dlu, "Report candidates with DLU at most this")->required();
  search->add_option("--budget", cfg.budget, "Maximum number of candidates to examine");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.format = parse_format(flags.format);
    if (flags.modulus) cfg.function.modulus = parse_integer(*flags.modulus);

    std::unique_ptr<std::ofstream> file;
    std::ostream* sink = &out;
    if (cfg.output) {
      file = std::make_unique<std::ofstream>(*cfg.output);
      if (!*file) throw UsageError("cannot write " + *cfg.output);
      sink = file.get();
    }

    if (*table) return cmd_table(cfg, *sink);
    if (*analyze) return cmd_analyze(cfg, *sink);
    if (*verify) return cmd_verify(cfg, *sink);
    if (*reproduce) return cmd_reproduce(cfg, *sink);
    return cmd_search(cfg, *sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace dlct::cli
