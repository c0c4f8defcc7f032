#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cext/cli.hpp"

namespace {

int fail(const std::string& code, const std::string& message, int status) {
  std::cout << cext::error_json(code, message).dump(2) << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  cext::RunConfig config;
  std::string relator_form = "consistent";

  CLI::App app{"Experiments on a small-cancellation group and its central extensions", "cext"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string("cext ") + cext::kToolVersion);
  app.add_option("--presentation", config.presentation, "presentation JSON file (default: the built-in relator family)");
  app.add_option("--relator-form", relator_form, "consistent | literal")->check(CLI::IsMember({"consistent", "literal"}));
  app.add_option("--truncation", config.truncation, "number of family relators beyond r0");
  app.add_option("--seed", config.seed, "64-bit seed for every random choice");
  std::string reduction_seed;
  auto* randomize = app.add_option("--randomize-reduction", reduction_seed,
                                   "random tie-breaking in the Dehn algorithm, optionally with its seed")
                        ->expected(0, 1);
  app.add_option("--out", config.out, "report path (default: standard output)");
  app.add_flag("--timing", config.timing, "include wall-clock duration in the report");

  auto word_arg = [&](CLI::App* sub) { sub->add_option("word", config.word, "word, e.g. \"a1 t2- r3\"")->required(); };
  auto alpha_opt = [&](CLI::App* sub) { sub->add_option("--alpha", config.alpha, "slow class formula, e.g. i or prefix:5;tail:zero"); };
  auto finite_opts = [&](CLI::App* sub) {
    sub->add_option("--group", config.group, "cyclic:n, dihedral:n, quaternion, products with x, or JSON table");
    sub->add_option("--coeff", config.coeff, "Z, Q or Z/m");
    sub->add_option("--cocycle", config.cocycle, "cochain JSON file");
  };

  auto* cancel = app.add_subcommand("check-cancellation", "metric small cancellation scan");
  cancel->add_option("--lambda", config.lambda, "rational lambda, e.g. 1/7");
  cancel->add_option("--max-index", config.max_index, "largest relator index scanned");

  word_arg(app.add_subcommand("word-problem", "decide triviality with the Dehn algorithm"));

  auto* area = app.add_subcommand("area", "area certificate of a trivial word");
  word_arg(area);
  area->add_option("--emit-certificate", config.emit_certificate, "write the certificate JSON here");

  auto* lift = app.add_subcommand("lift", "lift value of a trivial word");
  word_arg(lift);
  alpha_opt(lift);

  auto* ball = app.add_subcommand("ball", "enumerate a ball of the Cayley graph");
  ball->add_option("--radius", config.radius, "ball radius");

  auto* probe = app.add_subcommand("probe", "cocycle checks, growth profile, pullbacks and section defects");
  alpha_opt(probe);
  probe->add_option("--radius", config.radius, "ball radius");
  probe->add_option("--cap-slack", config.cap_slack, "maximizing-section cap beyond the norm");
  probe->add_option("--pullback-max", config.pullback_max, "largest relator index for pullbacks");

  auto* maxsec = app.add_subcommand("max-section", "capped maximizing section at one element");
  word_arg(maxsec);
  alpha_opt(maxsec);
  maxsec->add_option("--radius", config.radius, "ball radius");
  maxsec->add_option("--cap-slack", config.cap_slack, "cap beyond the norm");
  maxsec->add_option("--cap", config.cap, "explicit cap on spelling length");

  finite_opts(app.add_subcommand("finite-h2", "second cohomology of a finite group"));
  auto* transfer = app.add_subcommand("finite-transfer", "transfer after restriction versus the index");
  finite_opts(transfer);
  transfer->add_option("--subgroup", config.subgroup, "comma-separated element indices");
  finite_opts(app.add_subcommand("finite-avg", "averaging primitive of a rational cocycle"));
  finite_opts(app.add_subcommand("finite-linfty", "function-valued primitive of a cocycle"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("Usage", e.what(), 2);
  }

  try {
    config.command = app.get_subcommands().front()->get_name();
    if (randomize->count() > 0) {
      config.randomize_reduction = true;
      if (!reduction_seed.empty()) {
        try {
          std::size_t pos = 0;
          config.seed = std::stoull(reduction_seed, &pos);
          if (pos != reduction_seed.size()) throw std::invalid_argument(reduction_seed);
        } catch (const std::exception&) {
          return fail("Usage", "--randomize-reduction expects an unsigned seed, got '" + reduction_seed + "'", 2);
        }
      }
    }
    config.relator_form = cext::parse_relator_form(relator_form);
    const cext::Report report = cext::run(config);
    cext::emit_report(report, config.out);
  } catch (const cext::Error& e) {
    return fail(std::string(cext::to_string(e.code())), e.message(), 1);
  } catch (const std::exception& e) {
    return fail("Internal", e.what(), 1);
  }
  return 0;
}
