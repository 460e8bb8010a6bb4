// Command-line front end: truncation roots, variational spectra, curve scans,
// eigenfunction profiles and the verification suite.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "radspec/analysis.hpp"
#include "radspec/format.hpp"
#include "radspec/frobenius.hpp"
#include "radspec/io.hpp"
#include "radspec/oracle.hpp"
#include "radspec/records.hpp"
#include "radspec/ritz.hpp"
#include "radspec/verify.hpp"

namespace {

using namespace radspec;

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string format = "csv";
  std::string path;
};

void emit(const io::OutputRecord& rec, const Output& out) {
  if (out.path.empty()) {
    std::cout << (out.format == "json" ? io::to_json(rec) : io::to_csv(rec));
    return;
  }
  if (out.format == "json") {
    io::write_json(rec, out.path);
  } else {
    io::write_csv(rec, out.path);
  }
}

void add_output_options(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", out.path, "Output file (default: stdout)");
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw InvalidArgument(std::string("--") + name + " must be finite");
  }
}

void require_gamma(double gamma) {
  require_finite(gamma, "gamma");
  if (gamma < 0.0) {
    throw InvalidArgument(
        "--gamma must be >= 0: the series recurrence is defined here for "
        "gamma >= 0 only (use |gamma|, which is what enters xi^|gamma|)");
  }
}

// Expands `--config file.json` into flags placed right after the
// subcommand name, so flags given on the command line override them.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] != "--config") {
      continue;
    }
    if (i + 1 >= args.size()) {
      throw CLI::ArgumentMismatch("--config needs a path");
    }
    const std::string path = args[i + 1];
    args.erase(args.begin() + i, args.begin() + i + 2);
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(io::read_file(path));
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ValidationError("--config", path + ": " + e.what());
    }
    if (!j.is_object()) {
      throw CLI::ValidationError("--config", path + ": expected a JSON object");
    }
    std::vector<std::string> flags;
    for (const auto& [key, value] : j.items()) {
      const std::string flag = "--" + key;
      if (value.is_boolean()) {
        if (value.get<bool>()) {
          flags.push_back(flag);
        }
      } else if (value.is_array()) {
        std::string joined;
        for (const auto& v : value) {
          joined += (joined.empty() ? "" : ",") +
                    (v.is_string() ? v.get<std::string>() : v.dump());
        }
        flags.push_back(flag);
        flags.push_back(joined);
      } else {
        flags.push_back(flag);
        flags.push_back(value.is_string() ? value.get<std::string>()
                                          : value.dump());
      }
    }
    // Insert after the subcommand (first positional token).
    std::size_t at = 0;
    while (at < args.size() && !args[at].empty() && args[at][0] == '-') {
      ++at;
    }
    at = std::min(at + 1, args.size());
    args.insert(args.begin() + at, flags.begin(), flags.end());
    break;
  }
  return args;
}

struct TruncateArgs {
  int n = 0;
  double gamma = 0.0;
  std::optional<double> a;
  std::optional<double> b;
  Output out;
};

int run_truncate(const TruncateArgs& args) {
  require_gamma(args.gamma);
  if (args.a.has_value() == args.b.has_value()) {
    throw InvalidArgument("truncate needs exactly one of --a or --b");
  }
  if (args.b) {
    require_finite(*args.b, "b");
    const auto roots = frobenius::truncation_roots_a(args.n, args.gamma, *args.b);
    const auto sols = frobenius::solutions_in_a(args.n, args.gamma, *args.b);
    emit(records::truncation(sols, roots, true, args.n, args.gamma, *args.b),
         args.out);
  } else {
    require_finite(*args.a, "a");
    const auto roots = frobenius::truncation_roots_b(args.n, args.gamma, *args.a);
    const auto sols = frobenius::solutions_in_b(args.n, args.gamma, *args.a);
    emit(records::truncation(sols, roots, false, args.n, args.gamma, *args.a),
         args.out);
  }
  return kExitOk;
}

struct SpectrumArgs {
  double gamma = 0.0;
  double a = 0.0;
  double b = 0.0;
  int count = 6;
  double tol = 1e-10;
  int n_max = 80;
  bool oracle = false;
  double xi_max = 15.0;
  int points = 40000;
  Output out;
};

int run_spectrum(const SpectrumArgs& args) {
  require_gamma(args.gamma);
  require_finite(args.a, "a");
  require_finite(args.b, "b");
  const ModelParams params{args.gamma, args.a, args.b};
  ritz::SpectrumOptions schedule;
  schedule.n_max = args.n_max;
  const auto result = ritz::spectrum(params, args.count, args.tol, schedule);
  std::optional<oracle::FdSpectrum> fd;
  std::optional<oracle::GridSpec> grid;
  if (args.oracle) {
    grid = oracle::GridSpec{args.xi_max, args.points};
    fd = oracle::fd_spectrum(params, *grid, args.count);
  }
  emit(records::spectrum(result, args.tol, fd, grid), args.out);
  if (!result.converged) {
    std::cerr << "spectrum did not converge to " << format_number(args.tol)
              << " by N=" << result.basis_size << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}

struct ScanArgs {
  std::vector<double> gammas{0.0};
  double b = 1.0;
  double a_min = -3.0;
  double a_max = 6.0;
  int points = 200;
  int branches = 6;
  bool curves_b = false;
  int n = 2;
  int max_n = 4;
  double tol = 1e-8;
  int workers = 0;
  std::string overlay_out;
  Output out;
};

int run_scan(const ScanArgs& args) {
  for (double g : args.gammas) {
    require_gamma(g);
  }
  require_finite(args.a_min, "a-min");
  require_finite(args.a_max, "a-max");
  if (!(args.a_min < args.a_max)) {
    throw InvalidArgument("--a-min must be below --a-max");
  }
  if (args.curves_b) {
    std::vector<analysis::BCurves> curves;
    for (double g : args.gammas) {
      curves.push_back(
          analysis::b_curves(args.n, g, args.a_min, args.a_max, args.points));
    }
    emit(records::b_curves(curves), args.out);
    return kExitOk;
  }
  if (args.gammas.size() != 1) {
    throw InvalidArgument("an eigenvalue scan takes a single --gamma");
  }
  require_finite(args.b, "b");
  analysis::ScanOptions opts;
  opts.max_n = args.max_n;
  opts.target_tol = args.tol;
  opts.workers = args.workers;
  const auto scan = analysis::curve_scan(args.gammas[0], args.b, args.a_min,
                                         args.a_max, args.points,
                                         args.branches, opts);
  auto rec = records::curve_scan(scan, args.tol);
  int on = 0;
  for (const auto& p : scan.truncation_points) {
    on += p.on_branch ? 1 : 0;
  }
  rec.add_metadata("overlay_on_branch",
                   std::to_string(on) + "/" +
                       std::to_string(scan.truncation_points.size()));
  emit(rec, args.out);
  if (!args.overlay_out.empty()) {
    emit(records::overlay(scan), Output{args.out.format, args.overlay_out});
  }
  for (const auto& f : scan.failures) {
    std::cerr << "scan point failed: " << f << "\n";
  }
  const bool too_many =
      scan.failures.size() * 20 > static_cast<std::size_t>(args.points);
  return too_many ? kExitNumeric : kExitOk;
}

struct EigenfunctionArgs {
  double gamma = 0.0;
  double a = 0.0;
  double b = 0.0;
  std::vector<int> nus{0, 1, 2};
  double xi_max = 8.0;
  int points = 401;
  double tol = 1e-11;
  Output out;
};

int run_eigenfunction(const EigenfunctionArgs& args) {
  require_gamma(args.gamma);
  require_finite(args.a, "a");
  require_finite(args.b, "b");
  require_finite(args.xi_max, "xi-max");
  if (!(args.xi_max > 0.0) || args.points < 2) {
    throw InvalidArgument("profile grid needs --xi-max > 0 and --points >= 2");
  }
  const auto grid = analysis::linspace(0.0, args.xi_max, args.points);
  const auto profile = analysis::eigenfunction_profile(
      {args.gamma, args.a, args.b}, args.nus, grid, args.tol);
  emit(records::profile(profile, args.tol), args.out);
  return kExitOk;
}

struct VerifyArgs {
  bool quick = false;
  Output out;
};

int run_verify(const VerifyArgs& args) {
  verify::Options options;
  options.quick = args.quick;
  const auto results = verify::run(options);
  emit(verify::report(results, options), args.out);
  bool ok = true;
  for (const auto& r : results) {
    if (!r.pass) {
      std::cerr << "FAILED " << r.id << " (criterion " << r.criterion
                << "): " << r.detail << "\n";
      ok = false;
    }
  }
  return ok ? kExitOk : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial (truncation) solutions versus the full variational "
               "spectrum of a radial eigenvalue problem"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_version_flag("--version", io::kToolVersion);

  TruncateArgs tr;
  auto* truncate =
      app.add_subcommand("truncate", "Roots of the truncation condition");
  truncate->add_option("--n", tr.n, "Polynomial degree")
      ->required()
      ->check(CLI::NonNegativeNumber);
  truncate->add_option("--gamma", tr.gamma, "Effective angular number")
      ->capture_default_str();
  auto* opt_a = truncate->add_option("--a", tr.a, "Coulomb strength (solve for b)");
  auto* opt_b = truncate->add_option("--b", tr.b, "Linear strength (solve for a)");
  opt_a->excludes(opt_b);
  add_output_options(truncate, tr.out);

  SpectrumArgs sp;
  auto* spectrum =
      app.add_subcommand("spectrum", "Rayleigh-Ritz eigenvalues W_nu");
  spectrum->add_option("--gamma", sp.gamma)->capture_default_str();
  spectrum->add_option("--a", sp.a)->capture_default_str();
  spectrum->add_option("--b", sp.b)->capture_default_str();
  spectrum->add_option("--count", sp.count, "Number of eigenvalues")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  spectrum->add_option("--tol", sp.tol, "Convergence target")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  spectrum->add_option("--n-max", sp.n_max, "Largest basis size")
      ->check(CLI::Range(10, 120))
      ->capture_default_str();
  spectrum->add_flag("--oracle", sp.oracle,
                     "Cross-check with the finite-difference solver");
  spectrum->add_option("--xi-max", sp.xi_max, "Oracle box size")
      ->capture_default_str();
  spectrum->add_option("--points", sp.points, "Oracle grid points")
      ->capture_default_str();
  add_output_options(spectrum, sp.out);

  ScanArgs sc;
  auto* scan = app.add_subcommand(
      "scan", "Branches W_nu(a) with truncation overlay, or curves b(a)");
  scan->add_option("--gamma", sc.gammas, "Gamma value(s)")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  scan->add_option("--b", sc.b)->capture_default_str();
  scan->add_option("--a-min", sc.a_min)->capture_default_str();
  scan->add_option("--a-max", sc.a_max)->capture_default_str();
  scan->add_option("--points", sc.points)
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  scan->add_option("--branches", sc.branches)
      ->check(CLI::Range(1, 40))
      ->capture_default_str();
  scan->add_flag("--curves-b", sc.curves_b,
                 "Emit the truncation curves b_{n,gamma}(a) instead");
  scan->add_option("--n", sc.n, "Degree for --curves-b")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  scan->add_option("--max-n", sc.max_n, "Largest overlaid truncation degree")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  scan->add_option("--tol", sc.tol)->check(CLI::PositiveNumber)->capture_default_str();
  scan->add_option("--workers", sc.workers, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  scan->add_option("--overlay-out", sc.overlay_out,
                   "Also write the truncation overlay points here");
  add_output_options(scan, sc.out);

  EigenfunctionArgs ef;
  auto* eigenfunction = app.add_subcommand(
      "eigenfunction", "Profiles xi R_nu(xi)^2 of variational eigenfunctions");
  eigenfunction->add_option("--gamma", ef.gamma)->capture_default_str();
  eigenfunction->add_option("--a", ef.a)->capture_default_str();
  eigenfunction->add_option("--b", ef.b)->capture_default_str();
  eigenfunction->add_option("--nu", ef.nus, "Eigenfunction indices")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  eigenfunction->add_option("--xi-max", ef.xi_max)->capture_default_str();
  eigenfunction->add_option("--points", ef.points)->capture_default_str();
  eigenfunction->add_option("--tol", ef.tol)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_options(eigenfunction, ef.out);

  VerifyArgs vf;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run the verification suite");
  verify_cmd->add_flag("--quick", vf.quick,
                       "Table and exact-limit checks only");
  add_output_options(verify_cmd, vf.out);

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*truncate) return run_truncate(tr);
    if (*spectrum) return run_spectrum(sp);
    if (*scan) return run_scan(sc);
    if (*eigenfunction) return run_eigenfunction(ef);
    if (*verify_cmd) return run_verify(vf);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const io::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
