#include "cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <stdexcept>

#include "emit.hpp"
#include "hankel/errors.hpp"
#include "hankel/kernels.hpp"
#include "hankel/operators.hpp"
#include "hankel/spectral.hpp"
#include "verify.hpp"

namespace hankel::cli {
namespace {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view command_name(Command c) {
  switch (c) {
    case Command::kernel: return "kernel";
    case Command::verify: return "verify";
    case Command::spectrum: return "spectrum";
    case Command::density: return "density";
    case Command::blocks: return "blocks";
  }
  return "?";
}

std::vector<double> grid_points(const Grid& g) {
  if (g.count == 1) return {g.min};
  std::vector<double> xs(static_cast<std::size_t>(g.count));
  for (int i = 0; i < g.count; ++i) {
    xs[static_cast<std::size_t>(i)] =
        i == g.count - 1 ? g.max : g.min + (g.max - g.min) * i / (g.count - 1);
  }
  return xs;
}

template <class T>
const T& require(const std::optional<T>& v, const char* flag) {
  if (!v) throw ConfigError(std::string("missing required option ") + flag);
  return *v;
}

// Raw option values before they are folded into a RunConfig.
struct RawOptions {
  std::optional<int> ell;
  std::optional<double> p;
  std::optional<std::size_t> size;
  std::optional<double> x, xmin, xmax;
  std::optional<double> lambda, lambda_min, lambda_max;
  std::optional<int> num;
  std::optional<std::string> method, suite, format, out;
  std::optional<double> tol;
};

std::optional<Grid> fold_grid(const std::optional<double>& single, const std::optional<double>& lo,
                              const std::optional<double>& hi, const std::optional<int>& num,
                              const char* single_flag, const char* range_flags) {
  if (single) {
    if (lo || hi) throw ConfigError(std::string(single_flag) + " conflicts with " + range_flags);
    return Grid{*single, *single, 1};
  }
  if (!lo && !hi) return std::nullopt;
  if (!lo || !hi || !num) throw ConfigError(std::string(range_flags) + " need --num as well");
  if (!(*lo < *hi)) throw ConfigError("grid minimum must be below grid maximum");
  if (*num < 2) throw ConfigError("--num must be at least 2");
  return Grid{*lo, *hi, *num};
}

RunConfig fold(Command command, const RawOptions& raw) {
  RunConfig c;
  c.command = command;
  c.ell = raw.ell;
  c.p = raw.p;
  c.size = raw.size;
  c.method = raw.method;
  c.suite = raw.suite;
  c.tol = raw.tol;
  c.out = raw.out;
  c.format = command == Command::verify || command == Command::blocks ? Format::json : Format::csv;
  if (raw.format) c.format = *raw.format == "json" ? Format::json : Format::csv;
  if (command == Command::density) {
    c.grid = fold_grid(raw.lambda, raw.lambda_min, raw.lambda_max, raw.num, "--lambda",
                       "--lambda-min/--lambda-max");
  } else {
    c.grid = fold_grid(raw.x, raw.xmin, raw.xmax, raw.num, "--x", "--xmin/--xmax");
  }
  if (c.tol && !(*c.tol > 0.0)) throw ConfigError("--tol must be positive");
  return c;
}

struct Output {
  std::string body;
  std::optional<std::string> summary;  // extra JSON emitted next to a CSV body
  int exit_code = kOk;
};

Output cmd_kernel(const RunConfig& c) {
  const kernels::KernelOrder ell(require(c.ell, "--ell"));
  const Grid& grid = require(c.grid, "--x or --xmin/--xmax/--num");
  std::optional<kernels::Route> route;
  if (c.method) {
    route = kernels::parse_route(*c.method);
    if (!route) throw ConfigError("--method must be closed, conv or oracle");
  }
  std::vector<kernels::KernelEvaluation> rows;
  for (double x : grid_points(grid)) rows.push_back(kernels::evaluate_kernel(ell, x, route));

  Output o;
  if (c.format == Format::csv) {
    CsvTable t({"x", "value", "route", "error_estimate"});
    for (const auto& r : rows) {
      t.add_row({format_double(r.x), format_double(r.value), std::string(kernels::to_string(r.route)),
                 format_double(r.error_estimate)});
    }
    o.body = t.str();
  } else {
    Json j;
    j["command"] = "kernel";
    j["ell"] = ell.value();
    j["rows"] = Json::array();
    for (const auto& r : rows) {
      Json row;
      row["x"] = r.x;
      row["value"] = r.value;
      row["route"] = kernels::to_string(r.route);
      row["error_estimate"] = r.error_estimate;
      j["rows"].push_back(row);
    }
    o.body = dump_json(j);
  }
  return o;
}

Output cmd_verify(const RunConfig& c) {
  const auto suite = parse_suite(require(c.suite, "--suite"));
  if (!suite) throw ConfigError("--suite must be identities, fourier, kernels, operators or spectral");
  const auto records = run_suite(*suite, c.tol);
  bool all = true;
  Json j;
  j["suite"] = to_string(*suite);
  j["checks"] = Json::array();
  for (const auto& r : records) {
    all = all && r.pass;
    j["checks"].push_back(to_json(r));
  }
  j["all_pass"] = all;
  Output o;
  o.body = dump_json(j);
  o.exit_code = all ? kOk : kVerifyFailed;
  return o;
}

Output cmd_spectrum(const RunConfig& c) {
  const kernels::KernelOrder ell(require(c.ell, "--ell"));
  const std::size_t n = require(c.size, "--size");
  const auto r = operators::spectrum_report(ell, n);
  Json summary;
  summary["ell"] = ell.value();
  summary["size"] = n;
  summary["min"] = r.min;
  summary["max"] = r.max;
  summary["containment_violation"] = r.containment_violation;
  summary["coverage_gap"] = r.coverage_gap;
  Output o;
  if (c.format == Format::csv) {
    CsvTable t({"index", "eigenvalue"});
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
      t.add_row({std::to_string(i), format_double(r.eigenvalues[i])});
    }
    o.body = t.str();
    o.summary = dump_json(summary);
  } else {
    summary["eigenvalues"] = r.eigenvalues;
    o.body = dump_json(summary);
  }
  return o;
}

Output cmd_density(const RunConfig& c) {
  const double p = require(c.p, "--p");
  if (!(p <= 0.5)) throw ConfigError("--p must be <= 1/2");
  const Grid& grid = require(c.grid, "--lambda or --lambda-min/--lambda-max/--num");
  Output o;
  CsvTable t({"lambda", "rho", "h"});
  Json j;
  j["command"] = "density";
  j["p"] = p;
  j["rows"] = Json::array();
  for (double lambda : grid_points(grid)) {
    const auto d = spectral::density_rho(p, lambda);
    const double h = spectral::multiplier_h(lambda);
    t.add_row({format_double(lambda), format_double(d.rho), format_double(h)});
    Json row;
    row["lambda"] = lambda;
    row["rho"] = d.rho;
    row["h"] = h;
    j["rows"].push_back(row);
  }
  o.body = c.format == Format::csv ? t.str() : dump_json(j);
  return o;
}

Output cmd_blocks(const RunConfig& c) {
  const kernels::KernelOrder ell(require(c.ell, "--ell"));
  const std::size_t n = require(c.size, "--size");
  const auto cert = operators::block_decompose(ell, n);
  const std::string parity = cert.parity == operators::Parity::even ? "even" : "odd";
  Output o;
  if (c.format == Format::csv) {
    CsvTable t({"ell", "parity", "m", "size", "max_abs_deviation", "cross_block_max"});
    t.add_row({std::to_string(ell.value()), parity, std::to_string(cert.m), std::to_string(cert.size),
               format_double(cert.max_abs_deviation), format_double(cert.cross_block_max)});
    o.body = t.str();
  } else {
    Json j;
    j["ell"] = ell.value();
    j["parity"] = parity;
    j["m"] = cert.m;
    j["size"] = cert.size;
    j["max_abs_deviation"] = cert.max_abs_deviation;
    j["cross_block_max"] = cert.cross_block_max;
    j["blocks"] = Json::array();
    for (const auto& b : cert.blocks) {
      Json bj;
      bj["sign"] = b.sign;
      bj["scale"] = 1.0 / kPi;
      bj["p"] = b.p;
      j["blocks"].push_back(bj);
    }
    o.body = dump_json(j);
  }
  return o;
}

Output dispatch(const RunConfig& c) {
  switch (c.command) {
    case Command::kernel: return cmd_kernel(c);
    case Command::verify: return cmd_verify(c);
    case Command::spectrum: return cmd_spectrum(c);
    case Command::density: return cmd_density(c);
    case Command::blocks: return cmd_blocks(c);
  }
  throw ConfigError("unknown command");
}

void add_common(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--tol", raw.tol, "Tolerance override");
  sub->add_option("--format", raw.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", raw.out, "Write output to this path (atomically)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kernels, truncation spectra and block decompositions of the Hankel operators K^(l)",
               "hankel-spectra"};
  app.require_subcommand(1);
  RawOptions raw;

  auto* kernel = app.add_subcommand("kernel", "Evaluate k^(l) on a point or grid");
  kernel->add_option("--ell", raw.ell, "Kernel order l");
  kernel->add_option("--x", raw.x, "Single evaluation point");
  kernel->add_option("--xmin", raw.xmin, "Grid start");
  kernel->add_option("--xmax", raw.xmax, "Grid end");
  kernel->add_option("--num", raw.num, "Grid points (>= 2)");
  kernel->add_option("--method", raw.method, "closed | conv | oracle (default: by |x|)");
  add_common(kernel, raw);

  auto* verify = app.add_subcommand("verify", "Run a verification suite; JSON report");
  verify->add_option("--suite", raw.suite, "identities | fourier | kernels | operators | spectral");
  add_common(verify, raw);

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the N x N truncation of S_l");
  spectrum->add_option("--ell", raw.ell, "Kernel order l");
  spectrum->add_option("--size", raw.size, "Truncation size N");
  add_common(spectrum, raw);

  auto* density = app.add_subcommand("density", "Tabulate rho_p(lambda) and h(lambda)");
  density->add_option("--p", raw.p, "Weight parameter p <= 1/2");
  density->add_option("--lambda", raw.lambda, "Single lambda > 0");
  density->add_option("--lambda-min", raw.lambda_min, "Grid start");
  density->add_option("--lambda-max", raw.lambda_max, "Grid end");
  density->add_option("--num", raw.num, "Grid points (>= 2)");
  add_common(density, raw);

  auto* blocks = app.add_subcommand("blocks", "Block-decomposition certificate for S_l");
  blocks->add_option("--ell", raw.ell, "Kernel order l");
  blocks->add_option("--size", raw.size, "Block size N (S_l is 2N x 2N)");
  add_common(blocks, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hankel-spectra: " << e.what() << "\n";
    return kConfigError;
  }

  Command command = Command::kernel;
  if (*verify) command = Command::verify;
  if (*spectrum) command = Command::spectrum;
  if (*density) command = Command::density;
  if (*blocks) command = Command::blocks;
  const std::string prefix = "hankel-spectra " + std::string(command_name(command)) + ": ";

  try {
    const RunConfig config = fold(command, raw);
    const Output o = dispatch(config);
    if (config.out) {
      write_atomically(*config.out, o.body);
      if (o.summary) write_atomically(*config.out + ".summary.json", *o.summary);
    } else {
      out << o.body;
      if (o.summary) err << *o.summary;
    }
    return o.exit_code;
  } catch (const ConfigError& e) {
    err << prefix << e.what() << "\n";
    return kConfigError;
  } catch (const DomainError& e) {
    err << prefix << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << prefix << e.what() << "\n";
    return kNumericalError;
  }
}

}  // namespace hankel::cli
