#include "rrk/cli/cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "rrk/algebra/parse.hpp"

namespace rrk::cli {

using nlohmann::json;

namespace {

void add_outputs(CLI::App* sub, Outputs& io, const char* what, bool svg = true) {
  sub->add_option("--out", io.out, std::string("Write ") + what + " to this file");
  if (svg) sub->add_option("--svg", io.svg, "Also render an SVG plot to this file");
}

json summary(const std::string& command, const std::string& status, int code) {
  return {{"command", command}, {"status", status}, {"exit_code", code}, {"outputs", json::array()}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rate-region bounds, regime maps and inequality projection for the cognitive "
               "interference channel with a common cognitive message."};
  app.name(args.empty() ? "rrk" : args[0]);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  BoundsOptions bo;
  auto* bounds = app.add_subcommand("bounds", "Evaluate Gaussian bound sets at one parameter point");
  bounds->add_option("--channel", bo.channel, "Channel spec a=RE[+IMi],b=B,P1=..,P2=..")->required();
  bounds->add_option("--region", bo.regions, "Regions (comma separated)")->delimiter(',');
  bounds->add_option("--alpha", bo.alpha, "Power split alpha in [0,1]");
  bounds->add_option("--lambda", bo.lambda, "Binning coefficient: costa, zero or a complex number");
  bounds->add_option("--sigma2", bo.sigma2, "Auxiliary noise variance of IN_GAPSCHEME");
  bounds->add_option("--alpha1", bo.alpha1, "OUT_BCDMS alpha1");
  bounds->add_option("--alpha2", bo.alpha2, "OUT_BCDMS alpha2");
  bounds->add_option("--rho1", bo.rho1, "OUT_BCDMS rho1 (complex)");
  bounds->add_option("--rho2", bo.rho2, "OUT_BCDMS rho2 (complex)");

  FrontierOptions fo;
  auto* frontier = app.add_subcommand("frontier", "Sample Gaussian region frontiers");
  frontier->add_option("--channel", fo.channel, "Channel spec")->required();
  frontier->add_option("--region", fo.regions, "Regions (comma separated)")->delimiter(',');
  frontier->add_option("--alpha-points", fo.alpha_points, "Points of the alpha grid");
  frontier->add_option("--r1-samples", fo.r1_samples, "R1 samples per frontier");
  frontier->add_option("--lambda", fo.lambda, "Binning coefficient: costa, zero or a complex number");
  frontier->add_option("--sigma2", fo.sigma2, "Auxiliary noise variance of IN_GAPSCHEME");
  frontier->add_flag("--envelope", fo.envelope, "Concave envelope of inner regions (time sharing)");
  frontier->add_option("--bc-alpha", fo.bc_alpha, "OUT_BCDMS alpha grid points");
  frontier->add_option("--bc-modulus", fo.bc_modulus, "OUT_BCDMS |rho| grid points");
  frontier->add_option("--bc-phase", fo.bc_phase, "OUT_BCDMS phase grid points");
  add_outputs(frontier, fo.io, "frontier CSV");

  RegimeOptions ro;
  auto* regimes = app.add_subcommand("regimes", "Label the real (a, b) plane by capacity regime");
  regimes->add_option("--P1", ro.P1, "Power of transmitter 1");
  regimes->add_option("--P2", ro.P2, "Power of transmitter 2");
  regimes->add_option("--a-range", ro.a_range, "a range LO:HI");
  regimes->add_option("--b-range", ro.b_range, "b range LO:HI");
  regimes->add_option("--res", ro.res, "Grid points per axis");
  add_outputs(regimes, ro.io, "label CSV");

  GapOptions go;
  auto* gap = app.add_subcommand("gap", "Additive and multiplicative gap between two regions");
  gap->add_option("--channel", go.channel, "Channel spec")->required();
  gap->add_option("--outer", go.outer, "Outer region");
  gap->add_option("--inner", go.inner, "Inner regions, united (comma separated)")->delimiter(',');
  gap->add_option("--alpha-points", go.alpha_points, "Points of the alpha grid");
  gap->add_option("--r1-samples", go.r1_samples, "R1 samples per frontier");
  gap->add_option("--lambda", go.lambda, "Binning coefficient: costa, zero or a complex number");
  gap->add_option("--sigma2", go.sigma2, "Auxiliary noise variance of IN_GAPSCHEME");
  gap->add_flag("--envelope", go.envelope, "Concave envelope of the inner union");
  add_outputs(gap, go.io, "both frontiers as CSV");

  FmeOptions mo;
  auto* fme = app.add_subcommand("fme", "Project a rate inequality system");
  fme->add_option("--input", mo.input, "System file (.ineq)")->required();
  fme->add_option("--eliminate", mo.eliminate, "Variables to eliminate, in order")->delimiter(',');
  fme->add_option("--set-zero", mo.set_zero, "Variables fixed to 0 first")->delimiter(',');
  fme->add_option("--subst", mo.subst, "Definition VAR=VAR+VAR.. (repeatable)");
  fme->add_option("--relations", mo.relations, "Relation files (.rel)");
  fme->add_option("--expect", mo.expect, "Compare the result with this system");
  fme->add_flag("--no-reduce", mo.no_reduce, "Skip certified pruning");
  fme->add_option("--certificate-samples", mo.certificate_samples,
                  "Random distributions used to re-check pruning certificates");
  fme->add_option("--oracle", mo.oracle_samples, "Sample points for the numeric projection check");
  fme->add_option("--seed", mo.seed, "Seed for all sampling");
  add_outputs(fme, mo.io, "the projected system", false);

  DmOptions dmo;
  auto* dmc = app.add_subcommand("dm-eval", "Evaluate discrete-memoryless bounds and conditions");
  dmc->add_option("--channel", dmo.channel, "Channel JSON file")->required();
  dmc->add_option("--dist", dmo.dist, "Distribution JSON file");
  dmc->add_option("--region", dmo.regions, "Regions (comma separated)")->delimiter(',');
  dmc->add_option("--condition", dmo.conditions, "Conditions (comma separated)")->delimiter(',');
  dmc->add_flag("--frontier", dmo.frontier, "Brute-force frontier over a distribution grid");
  dmc->add_option("--step", dmo.step, "Grid step 1/n");
  dmc->add_option("--budget", dmo.budget, "Largest accepted grid size");
  dmc->add_option("--aux-size", dmo.aux_size, "Alphabet size of auxiliary variables");
  dmc->add_option("--r1-samples", dmo.r1_samples, "R1 samples per frontier");
  add_outputs(dmc, dmo.io, "frontier CSV");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::string command = "rrk";
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    json s = summary(command, "error", kValidation);
    s["error"] = e.what();
    out << s.dump(2) << "\n";
    return kValidation;
  }
  for (auto* sub : app.get_subcommands()) command = sub->get_name();

  std::vector<std::string> written;
  json result;
  int code = kOk;
  std::string status = "ok";
  std::string error;
  try {
    if (command == "bounds") {
      result = cmd_bounds(bo);
    } else if (command == "frontier") {
      result = cmd_frontier(fo, written);
    } else if (command == "regimes") {
      result = cmd_regimes(ro, written);
    } else if (command == "gap") {
      result = cmd_gap(go, written);
    } else if (command == "fme") {
      result = cmd_fme(mo, written);
    } else {
      result = cmd_dm(dmo, written);
    }
  } catch (const CheckFailed& f) {
    result = f.result;
    code = kValidation;
    status = "mismatch";
  } catch (const algebra::ParseError& e) {
    code = kValidation;
    error = e.what();
  } catch (const std::invalid_argument& e) {
    code = kValidation;
    error = e.what();
  } catch (const std::domain_error& e) {
    code = kValidation;
    error = e.what();
  } catch (const std::out_of_range& e) {
    code = kValidation;
    error = e.what();
  } catch (const std::logic_error& e) {
    code = kInternal;
    error = std::string("internal invariant breach: ") + e.what();
  } catch (const std::exception& e) {
    code = kValidation;
    error = e.what();
  }
  if (!error.empty()) {
    status = "error";
    err << "error: " << error << "\n";
  }
  json s = summary(command, status, code);
  if (!error.empty()) s["error"] = error;
  if (!result.is_null()) s["result"] = result;
  s["outputs"] = written;
  out << s.dump(2) << "\n";
  return code;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace rrk::cli
