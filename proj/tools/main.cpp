#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "figures.hpp"
#include "noonsim/validation.hpp"

using namespace noonsim;

namespace {

struct OutputOpts {
  std::string path = "-";
  std::string format = "csv";
};

void add_output_opts(CLI::App* cmd, OutputOpts& out) {
  cmd->add_option("-o,--output", out.path, "Output file, '-' for stdout")
      ->capture_default_str();
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "svg"}))
      ->capture_default_str();
}

int emit(const OutputOpts& out, const figures::Table& table) {
  std::ostringstream buf;
  if (out.format == "svg") {
    figures::write_svg(buf, table);
  } else {
    figures::write_csv(buf, table);
  }
  if (out.path == "-") {
    std::cout << buf.str();
    return 0;
  }
  std::ofstream file(out.path, std::ios::binary);
  if (!file) {
    std::cerr << "noonsim: cannot open output file " << out.path << "\n";
    return 2;
  }
  file << buf.str();
  return 0;
}

// Channel parameters are taken either as transmittances (--alpha1/--alpha2,
// optionally --phi0) or derived from the physical arm description
// (--eta*/--k*/--l* plus --omega-over-c); mixing the two is an error.
struct ChannelFlags {
  double alpha1 = 0.6;
  double alpha2 = 0.1;
  double phi0 = 0.0;
  double eta1 = 1.0, k1 = 0.0, l1 = 0.0;
  double eta2 = 1.0, k2 = 0.0, l2 = 0.0;
  double omega_over_c = 1.0;
  std::vector<CLI::Option*> transmittance_opts;
  std::vector<CLI::Option*> physical_opts;

  void add_to(CLI::App* cmd, double default_a1, double default_a2) {
    alpha1 = default_a1;
    alpha2 = default_a2;
    transmittance_opts = {
        cmd->add_option("--alpha1", alpha1, "Short-arm transmittance (0,1]")
            ->capture_default_str(),
        cmd->add_option("--alpha2", alpha2, "Long-arm transmittance (0,1]")
            ->capture_default_str(),
        cmd->add_option("--phi0", phi0, "Dispersion shift, radians")
            ->capture_default_str()};
    physical_opts = {
        cmd->add_option("--eta1", eta1, "Arm-1 refractive index"),
        cmd->add_option("--k1", k1, "Arm-1 attenuation coefficient"),
        cmd->add_option("--l1", l1, "Arm-1 path length"),
        cmd->add_option("--eta2", eta2, "Arm-2 refractive index"),
        cmd->add_option("--k2", k2, "Arm-2 attenuation coefficient"),
        cmd->add_option("--l2", l2, "Arm-2 path length"),
        cmd->add_option("--omega-over-c", omega_over_c,
                        "Angular frequency over c (1/length)")};
  }

  ChannelPair resolve() const {
    int physical_given = 0;
    for (const auto* opt : physical_opts) {
      if (opt->count() > 0) ++physical_given;
    }
    if (physical_given == 0) {
      return ChannelPair(alpha1, alpha2, phi0);
    }
    if (physical_given != int(physical_opts.size())) {
      throw std::invalid_argument(
          "physical channel parameters require all of --eta1 --k1 --l1 "
          "--eta2 --k2 --l2 --omega-over-c");
    }
    for (const auto* opt : transmittance_opts) {
      if (opt->count() > 0) {
        throw std::invalid_argument(
            "give either transmittances or physical parameters, not both");
      }
    }
    return ChannelPair::from_physical(
        PhysicalArm{eta1, k1, l1, ArmRole::short_arm},
        PhysicalArm{eta2, k2, l2, ArmRole::long_arm}, omega_over_c);
  }
};

std::vector<ChannelPair> parse_channel_list(
    const std::vector<std::string>& specs, double phi0) {
  std::vector<ChannelPair> channels;
  for (std::string s : specs) {
    for (char& c : s) {
      if (c == ':') c = ',';
    }
    double a1 = 0.0, a2 = 0.0;
    if (std::sscanf(s.c_str(), "%lf,%lf", &a1, &a2) != 2) {
      throw std::invalid_argument("bad --channel value '" + s +
                                  "', expected A1:A2");
    }
    channels.emplace_back(a1, a2, phi0);
  }
  return channels;
}

int run_validate(bool empirical, std::uint64_t seed) {
  const auto results = validation::run_all(empirical, seed);
  size_t failed = 0;
  for (const auto& r : results) {
    std::printf("%-38s residual %-12.3e tol %-9.0e %s\n", r.name.c_str(),
                r.max_residual, r.tolerance, r.passed ? "ok" : "FAIL");
    if (!r.passed) {
      ++failed;
      std::printf("    worst case: %s\n", r.detail.c_str());
    }
  }
  std::printf("result: %s (%zu checks, %zu failed)\n",
              failed == 0 ? "PASS" : "FAIL", results.size(), failed);
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Phase-estimation error for attenuated N00N and separable N-photon "
      "probes: figure data, break-even tables, Monte Carlo runs and the "
      "oracle validation suite"};
  app.set_version_flag("--version", "noonsim 0.1.0");
  app.require_subcommand(1);

  // phase-error
  auto* pe = app.add_subcommand(
      "phase-error", "Phase error versus phase for the N00N method");
  figures::PhaseErrorSpec pe_spec;
  OutputOpts pe_out;
  ChannelFlags pe_channel;
  pe->add_option("--n", pe_spec.n_values, "Photon numbers")
      ->delimiter(',')
      ->capture_default_str();
  pe_channel.add_to(pe, 0.6, 0.1);
  pe->add_option("--phi-start", pe_spec.phi.start, "Sweep start (radians)")
      ->capture_default_str();
  pe->add_option("--phi-stop", pe_spec.phi.stop, "Sweep stop (radians)")
      ->capture_default_str();
  pe->add_option("--points", pe_spec.phi.count, "Grid size")
      ->capture_default_str();
  add_output_opts(pe, pe_out);

  // limit-sweep
  auto* ls = app.add_subcommand(
      "limit-sweep",
      "Phase error in the limit of decreasing attenuation, one curve per "
      "channel set plus the 1/N reference");
  figures::LimitSweepSpec ls_spec;
  OutputOpts ls_out;
  std::vector<std::string> ls_channels;
  double ls_phi0 = 0.0;
  ls->add_option("--n", ls_spec.n, "Photon number")->capture_default_str();
  ls->add_option("--channel", ls_channels,
                 "Channel set A1:A2 (repeatable; default the three standard "
                 "sets 0.6:0.1, 0.8:0.6, 0.999999:0.99)");
  ls->add_option("--phi0", ls_phi0, "Dispersion shift, radians")
      ->capture_default_str();
  ls->add_option("--phi-start", ls_spec.phi.start, "Sweep start (radians)")
      ->capture_default_str();
  ls->add_option("--phi-stop", ls_spec.phi.stop, "Sweep stop (radians)")
      ->capture_default_str();
  ls->add_option("--points", ls_spec.phi.count, "Grid size")
      ->capture_default_str();
  add_output_opts(ls, ls_out);

  // compare-min
  auto* cm = app.add_subcommand(
      "compare-min",
      "Minimum phase error of both methods versus long-arm transmittance");
  figures::CompareMinSpec cm_spec;
  OutputOpts cm_out;
  cm->add_option("--n", cm_spec.n, "Photon number")->capture_default_str();
  cm->add_option("--alpha1", cm_spec.alpha1_values,
                 "Short-arm transmittances")
      ->delimiter(',')
      ->capture_default_str();
  cm->add_option("--alpha2-start", cm_spec.alpha2.start, "Sweep start")
      ->capture_default_str();
  cm->add_option("--alpha2-stop", cm_spec.alpha2.stop, "Sweep stop")
      ->capture_default_str();
  cm->add_option("--points", cm_spec.alpha2.count, "Grid size")
      ->capture_default_str();
  add_output_opts(cm, cm_out);

  // breakeven
  auto* be = app.add_subcommand(
      "breakeven",
      "Break-even long-arm transmittance over a short-arm grid");
  figures::BreakEvenSpec be_spec;
  OutputOpts be_out;
  be->add_option("--n", be_spec.n_values, "Photon numbers")
      ->delimiter(',')
      ->capture_default_str();
  be->add_option("--alpha1-start", be_spec.alpha1.start, "Grid start")
      ->capture_default_str();
  be->add_option("--alpha1-stop", be_spec.alpha1.stop, "Grid stop")
      ->capture_default_str();
  be->add_option("--points", be_spec.alpha1.count, "Grid size")
      ->capture_default_str();
  add_output_opts(be, be_out);

  // montecarlo
  auto* mc = app.add_subcommand(
      "montecarlo",
      "Seeded shot-level trials with per-trial phase estimates");
  figures::MonteCarloSpec mc_spec;
  OutputOpts mc_out;
  ChannelFlags mc_channel;
  std::string mc_method = "noon";
  double mc_phi = 0.0;
  mc->add_option("--method", mc_method, "noon or separable")
      ->check(CLI::IsMember({"noon", "separable"}))
      ->capture_default_str();
  mc->add_option("--n", mc_spec.n, "Photon number")->capture_default_str();
  mc_channel.add_to(mc, 0.6, 0.1);
  auto* mc_phi_opt = mc->add_option(
      "--phi", mc_phi, "True phase (default: the operating point)");
  mc->add_option("--shots", mc_spec.shots, "Shots per trial")
      ->capture_default_str();
  mc->add_option("--trials", mc_spec.trials, "Trial count")
      ->capture_default_str();
  mc->add_option("--seed", mc_spec.seed, "PRNG seed")->capture_default_str();
  add_output_opts(mc, mc_out);

  // validate
  auto* va = app.add_subcommand(
      "validate",
      "Cross-validate the closed forms against the Fock-space oracle");
  bool va_empirical = false;
  std::uint64_t va_seed = validation::kValidationSeed;
  va->add_flag("--empirical", va_empirical,
               "Include the seeded error-propagation runs");
  va->add_option("--seed", va_seed, "Seed for the empirical runs")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (pe->parsed()) {
      pe_spec.channel = pe_channel.resolve();
      return emit(pe_out, figures::phase_error_table(pe_spec));
    }
    if (ls->parsed()) {
      if (!ls_channels.empty()) {
        ls_spec.channels = parse_channel_list(ls_channels, ls_phi0);
      } else if (ls_phi0 != 0.0) {
        ls_spec.channels = {ChannelPair(0.6, 0.1, ls_phi0),
                            ChannelPair(0.8, 0.6, ls_phi0),
                            ChannelPair(0.999999, 0.99, ls_phi0)};
      }
      return emit(ls_out, figures::limit_sweep_table(ls_spec));
    }
    if (cm->parsed()) {
      return emit(cm_out, figures::compare_min_table(cm_spec));
    }
    if (be->parsed()) {
      return emit(be_out, figures::breakeven_table(be_spec));
    }
    if (mc->parsed()) {
      if (mc_out.format == "svg") {
        throw std::invalid_argument("montecarlo output is tabular; use csv");
      }
      mc_spec.method =
          mc_method == "noon" ? Method::noon : Method::separable;
      mc_spec.channel = mc_channel.resolve();
      if (mc_phi_opt->count() > 0) mc_spec.phi_true = mc_phi;
      return emit(mc_out, figures::montecarlo_table(mc_spec));
    }
    if (va->parsed()) {
      return run_validate(va_empirical, va_seed);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "noonsim: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "noonsim: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
