// Command-line front end. Talks to the library only through fpchaos.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fpchaos/fpchaos.h"

namespace {

struct Failure {
  fpc_status status;
  std::string message;
};

void check(fpc_status s) {
  if (s != FPC_OK) throw Failure{s, fpc_last_error()};
}

[[noreturn]] void usage_error(const std::string& message) { throw Failure{FPC_INVALID_ARGUMENT, message}; }

struct KernelHandle {
  fpc_kernel* ptr = nullptr;
  KernelHandle() = default;
  KernelHandle(const KernelHandle&) = delete;
  KernelHandle& operator=(const KernelHandle&) = delete;
  ~KernelHandle() { fpc_kernel_free(ptr); }
};

struct Options {
  int q = 1;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> M;
  bool classes = false;
  bool list = false;
  int bins = 4;
  double cell_width = 0.25;
  std::string kernel;
  std::optional<std::string> family;
  int member = 1;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  std::string out;
  std::optional<double> tol;
  std::string method = "all";
  std::string measure = "poisson";
  int steps = 8;
  double eps0 = 0.5;
  double rho = 0.5;
  double lambda = 1.0;
};

const std::map<std::string, fpc_format> kFormats{
    {"text", FPC_FORMAT_TEXT}, {"json", FPC_FORMAT_JSON}, {"csv", FPC_FORMAT_CSV}};
const std::map<std::string, fpc_measure> kMeasures{{"poisson", FPC_MEASURE_POISSON}, {"wigner", FPC_MEASURE_WIGNER}};
const std::map<std::string, fpc_family_kind> kFamilies{{"indicator", FPC_FAMILY_INDICATOR},
                                                       {"perturbed-indicator", FPC_FAMILY_PERTURBED_INDICATOR},
                                                       {"hyperdiagonal", FPC_FAMILY_HYPERDIAGONAL}};
const std::map<std::string, std::vector<fpc_method>> kMethods{
    {"product", {FPC_METHOD_PRODUCT}},
    {"diagram", {FPC_METHOD_DIAGRAM}},
    {"trace", {FPC_METHOD_TRACE}},
    {"all", {FPC_METHOD_PRODUCT, FPC_METHOD_DIAGRAM, FPC_METHOD_TRACE}}};

fpc_format format_of(const Options& o, fpc_format fallback) {
  return o.format ? kFormats.at(*o.format) : fallback;
}

fpc_family_params family_params(const Options& o, const std::string& name) {
  fpc_family_params p;
  fpc_family_params_init(&p);
  p.kind = kFamilies.at(name);
  p.q = o.q;
  p.bins = o.bins;
  p.cell_width = o.cell_width;
  p.lambda = o.lambda;
  p.eps0 = o.eps0;
  p.rho = o.rho;
  if (o.seed) p.seed = *o.seed;
  return p;
}

// --kernel FILE, else --family NAME (member --member), else random from --seed.
void load_kernel(const Options& o, KernelHandle& k) {
  if (!o.kernel.empty()) {
    check(fpc_kernel_load(o.kernel.c_str(), &k.ptr));
  } else if (o.family) {
    const auto p = family_params(o, *o.family);
    check(fpc_kernel_family_member(&p, o.member, &k.ptr));
  } else if (o.seed) {
    check(fpc_kernel_random(o.q, o.bins, o.cell_width, *o.seed, &k.ptr));
  } else {
    usage_error("no kernel given: use --kernel FILE, --family NAME or --seed N");
  }
}

void write_output(const Options& o, char* text) {
  const std::string s = text;
  fpc_string_free(text);
  if (o.out.empty()) {
    std::fwrite(s.data(), 1, s.size(), stdout);
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Failure{FPC_IO, "cannot open '" + o.out + "' for writing"};
  f << s;
  if (!f) throw Failure{FPC_IO, "write to '" + o.out + "' failed"};
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", o.out, "Write the report to PATH");
}

void add_kernel_source(CLI::App* cmd, Options& o) {
  cmd->add_option("--q", o.q, "Chaos order")->capture_default_str();
  cmd->add_option("--bins", o.bins, "Grid cells per axis")->capture_default_str();
  cmd->add_option("--cell-width", o.cell_width, "Grid cell width")->capture_default_str();
  cmd->add_option("--kernel", o.kernel, "Kernel file (JSON)");
  cmd->add_option("--family", o.family, "Kernel family")
      ->check(CLI::IsMember({"indicator", "perturbed-indicator", "hyperdiagonal"}));
  cmd->add_option("--member", o.member, "Family member index")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Seed for a random kernel or the family noise");
  cmd->add_option("--lambda", o.lambda, "Hyperdiagonal target norm")->capture_default_str();
  cmd->add_option("--eps0", o.eps0, "Perturbation amplitude")->capture_default_str();
  cmd->add_option("--rho", o.rho, "Perturbation decay")->capture_default_str();
}

int run(int argc, char** argv) {
  CLI::App app{"Free Poisson chaos toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* nc = app.add_subcommand("nc", "Count non-crossing partitions or NC0 classes");
  nc->add_option("--n", o.n, "Ground set size for NC(n)");
  nc->add_option("--m", o.m, "Number of kernel copies for NC0 classes");
  nc->add_option("--q", o.q, "Chaos order for NC0 classes")->capture_default_str();
  nc->add_flag("--classes", o.classes, "Count the NC0 classes for (m, q)");
  nc->add_flag("--list", o.list, "Print every partition");
  add_common(nc, o);

  auto* rio = app.add_subcommand("riordan", "Riordan table R_{m,j}");
  rio->add_option("--m", o.m, "Moment order")->required();
  add_common(rio, o);

  auto* mom = app.add_subcommand("moments", "Moment of I_q(f) by one or all engines");
  mom->add_option("--m", o.m, "Moment order")->required();
  mom->add_option("--method", o.method, "Engine")->check(CLI::IsMember({"product", "diagram", "trace", "all"}))
      ->capture_default_str();
  mom->add_option("--measure", o.measure, "Algebra")->check(CLI::IsMember({"poisson", "wigner"}))
      ->capture_default_str();
  add_kernel_source(mom, o);
  add_common(mom, o);

  auto* idn = app.add_subcommand("identity", "Fourth-moment contraction identity");
  idn->add_option("--tol", o.tol, "Relative tolerance (default 1e-9)");
  add_kernel_source(idn, o);
  add_common(idn, o);

  auto* ind = app.add_subcommand("indicator", "Compare q=1 moments against the Riordan oracle");
  ind->add_option("--M", o.M, "Largest moment order (default 6)");
  ind->add_option("--tol", o.tol, "Relative tolerance (default 1e-12)");
  add_kernel_source(ind, o);
  add_common(ind, o);

  auto* conv = app.add_subcommand("converge", "Statistic and moment gaps along a kernel family");
  conv->add_option("--steps", o.steps, "Number of family members")->capture_default_str();
  conv->add_option("--M", o.M, "Largest moment order (default 5)");
  conv->add_option("--tol", o.tol, "Final-gap threshold (default 1e-2)");
  add_kernel_source(conv, o);
  add_common(conv, o);

  auto* tr = app.add_subcommand("transfer", "Poisson and Wigner moments of the same kernel");
  tr->add_option("--M", o.M, "Largest moment order (default 6)");
  tr->add_option("--tol", o.tol, "Relative tolerance (default 1e-12)");
  add_kernel_source(tr, o);
  add_common(tr, o);

  auto* tam = app.add_subcommand("tamed", "Integrals of |f_n|_sigma along a kernel family");
  tam->add_option("--steps", o.steps, "Number of family members")->capture_default_str();
  tam->add_option("--m", o.m, "Number of kernel copies (default 2)");
  tam->add_option("--threshold", o.tol, "Boundedness threshold (default 1e6)");
  add_kernel_source(tam, o);
  add_common(tam, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    usage_error(e.what());
  }

  char* text = nullptr;
  if (nc->parsed()) {
    const fpc_format fmt = format_of(o, FPC_FORMAT_TEXT);
    if (o.n) {
      check(fpc_report_nc(*o.n, o.list, fmt, &text));
    } else if (o.m) {
      check(fpc_report_nc0(*o.m, o.q, o.list, fmt, &text));
    } else {
      usage_error("nc needs --n N or --m M [--q Q] --classes");
    }
  } else if (rio->parsed()) {
    check(fpc_report_riordan(*o.m, format_of(o, FPC_FORMAT_TEXT), &text));
  } else if (mom->parsed()) {
    KernelHandle k;
    load_kernel(o, k);
    const auto& methods = kMethods.at(o.method);
    check(fpc_report_moments(k.ptr, *o.m, methods.data(), methods.size(), kMeasures.at(o.measure),
                             format_of(o, FPC_FORMAT_JSON), &text));
  } else if (idn->parsed()) {
    KernelHandle k;
    load_kernel(o, k);
    check(fpc_report_identity(k.ptr, o.tol.value_or(1e-9), format_of(o, FPC_FORMAT_JSON), &text));
  } else if (ind->parsed()) {
    KernelHandle k;
    load_kernel(o, k);
    check(fpc_report_indicator(k.ptr, o.M.value_or(6), o.tol.value_or(1e-12), format_of(o, FPC_FORMAT_JSON), &text));
  } else if (conv->parsed()) {
    const auto p = family_params(o, o.family.value_or("perturbed-indicator"));
    check(fpc_report_converge(&p, o.steps, o.M.value_or(5), o.tol.value_or(1e-2), format_of(o, FPC_FORMAT_JSON),
                              &text));
  } else if (tr->parsed()) {
    KernelHandle k;
    load_kernel(o, k);
    check(fpc_report_transfer(k.ptr, o.M.value_or(6), o.tol.value_or(1e-12), format_of(o, FPC_FORMAT_JSON), &text));
  } else if (tam->parsed()) {
    const auto p = family_params(o, o.family.value_or("hyperdiagonal"));
    check(fpc_report_tamedness(&p, o.steps, o.m.value_or(2), o.tol.value_or(1e6), format_of(o, FPC_FORMAT_JSON),
                               &text));
  }
  write_output(o, text);
  return 0;
}

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Failure& f) {
    std::cerr << "error: " << fpc_status_name(f.status) << ": " << one_line(f.message) << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << fpc_status_name(FPC_INTERNAL) << ": " << one_line(e.what()) << '\n';
    return 1;
  }
}
