#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using frobkit::cli::RunOptions;
  CLI::App app{"frobkit: Hilbert-Kunz, F-signature and tight closure computations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", FROBKIT_VERSION);

  RunOptions opts;
  for (const auto& name : frobkit::cli::command_names()) {
    auto* sub = app.add_subcommand(name);
    if (frobkit::cli::command_needs_spec(name)) sub->add_option("spec", opts.spec_path, "ring spec file")->required();
    sub->add_option("--emax", opts.emax, "largest Frobenius exponent")->capture_default_str();
    sub->add_option("--emin", opts.emin, "smallest Frobenius exponent (repro-bm)");
    sub->add_option("--nmax", opts.nmax, "largest power of the parameter");
    sub->add_option("--tc-emax", opts.tc_emax, "exponent bound for closure spot checks")->capture_default_str();
    sub->add_option("--order", opts.order, "basis order: grevlex or lex")->capture_default_str();
    sub->add_option("--ideal", opts.ideal, "ideal name (default m, else the origin)");
    sub->add_option("--by", opts.by, "second ideal for colon and saturate");
    sub->add_option("--large", opts.large, "larger ideal for lech");
    sub->add_option("--elt", opts.elt, "element name or expression");
    sub->add_option("--x", opts.x, "parameter element");
    sub->add_option("--testel", opts.testel, "test element candidate");
    sub->add_option("--alpha", opts.alpha, "0, 1, t, or the minimal polynomial of lambda in a");
    sub->add_option("--param", opts.param, "variable t with R/P = k[t]");
    sub->add_option("--factor", opts.factors, "factor f:a for assoc (repeatable)");
    sub->add_option("--format", opts.format, "json, csv or table")->capture_default_str();
    sub->add_option("--cache", opts.cache, "cache directory (default $FROBKIT_CACHE)");
    sub->add_option("--jobs", opts.jobs, "worker threads (0 = OpenMP default)");
    sub->add_flag("--no-timing{false}", opts.timing, "omit timing from the JSON envelope");
    sub->callback([&opts, name] { opts.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  const auto out = frobkit::cli::execute(opts);
  std::cout << out.output;
  if (!out.error.empty()) std::cerr << out.error << "\n";
  return out.exit_code;
}
