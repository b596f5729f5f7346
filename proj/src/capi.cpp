#include "fpchaos/fpchaos.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "fpchaos/error.hpp"
#include "fpchaos/families.hpp"
#include "fpchaos/kernel_io.hpp"
#include "fpchaos/report.hpp"

struct fpc_kernel {
  fpchaos::GridKernel kernel;
};

namespace {

thread_local std::string last_error;

template <class F>
fpc_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return FPC_OK;
  } catch (const fpchaos::Error& e) {
    last_error = e.what();
    return static_cast<fpc_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return FPC_SIZE_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FPC_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return FPC_INTERNAL;
  }
}

template <class T>
void need(const T* p, const char* name) {
  fpchaos::require(p != nullptr, fpchaos::ErrorCode::invalid_argument, std::string(name) + " is NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const std::string& s, char** out) {
  need(out, "out");
  *out = copy_string(s);
}

fpchaos::Format to_format(fpc_format f) {
  switch (f) {
    case FPC_FORMAT_TEXT: return fpchaos::Format::text;
    case FPC_FORMAT_JSON: return fpchaos::Format::json;
    case FPC_FORMAT_CSV: return fpchaos::Format::csv;
  }
  fpchaos::fail(fpchaos::ErrorCode::invalid_argument, "unknown format code");
}

fpchaos::Measure to_measure(fpc_measure m) {
  switch (m) {
    case FPC_MEASURE_POISSON: return fpchaos::Measure::poisson;
    case FPC_MEASURE_WIGNER: return fpchaos::Measure::wigner;
  }
  fpchaos::fail(fpchaos::ErrorCode::invalid_argument, "unknown measure code");
}

fpchaos::MomentMethod to_method(fpc_method m) {
  switch (m) {
    case FPC_METHOD_PRODUCT: return fpchaos::MomentMethod::product;
    case FPC_METHOD_DIAGRAM: return fpchaos::MomentMethod::diagram;
    case FPC_METHOD_TRACE: return fpchaos::MomentMethod::trace;
  }
  fpchaos::fail(fpchaos::ErrorCode::invalid_argument, "unknown method code");
}

fpchaos::FamilySpec to_family(const fpc_family_params* p) {
  need(p, "params");
  fpchaos::FamilySpec s;
  switch (p->kind) {
    case FPC_FAMILY_INDICATOR: s.kind = fpchaos::FamilyKind::indicator; break;
    case FPC_FAMILY_PERTURBED_INDICATOR: s.kind = fpchaos::FamilyKind::perturbed_indicator; break;
    case FPC_FAMILY_HYPERDIAGONAL: s.kind = fpchaos::FamilyKind::hyperdiagonal; break;
    default: fpchaos::fail(fpchaos::ErrorCode::invalid_argument, "unknown family code");
  }
  s.q = p->q;
  s.bins = p->bins;
  s.cell_width = p->cell_width;
  s.lambda = p->lambda;
  s.eps0 = p->eps0;
  s.rho = p->rho;
  s.seed = p->seed;
  return s;
}

const fpchaos::GridKernel& deref(const fpc_kernel* k) {
  need(k, "kernel");
  return k->kernel;
}

void store(fpchaos::GridKernel k, fpc_kernel** out) {
  need(out, "out");
  *out = new fpc_kernel{std::move(k)};
}

}  // namespace

extern "C" {

const char* fpc_version(void) { return "0.1.0"; }

const char* fpc_status_name(fpc_status status) {
  switch (status) {
    case FPC_OK: return "OK";
    case FPC_INTERNAL: return "INTERNAL";
    default:
      if (status >= FPC_INVALID_ARGUMENT && status <= FPC_IO)
        return fpchaos::error_code_name(static_cast<fpchaos::ErrorCode>(status));
      return "UNKNOWN";
  }
}

const char* fpc_last_error(void) { return last_error.c_str(); }

void fpc_string_free(char* s) { std::free(s); }

void fpc_family_params_init(fpc_family_params* params) {
  if (params == nullptr) return;
  const fpchaos::FamilySpec d;
  params->kind = FPC_FAMILY_INDICATOR;
  params->q = d.q;
  params->bins = d.bins;
  params->cell_width = d.cell_width;
  params->lambda = d.lambda;
  params->eps0 = d.eps0;
  params->rho = d.rho;
  params->seed = d.seed;
}

fpc_status fpc_kernel_load(const char* path, fpc_kernel** out) {
  return guarded([&] {
    need(path, "path");
    store(fpchaos::load_kernel(path), out);
  });
}

fpc_status fpc_kernel_parse(const char* json, fpc_kernel** out) {
  return guarded([&] {
    need(json, "json");
    store(fpchaos::parse_kernel_json(json), out);
  });
}

fpc_status fpc_kernel_indicator(int q, int bins, double cell_width, double scale, fpc_kernel** out) {
  return guarded([&] {
    auto k = fpchaos::GridKernel::indicator(q, fpchaos::Grid{bins, cell_width});
    k *= fpchaos::Complex{scale};
    store(std::move(k), out);
  });
}

fpc_status fpc_kernel_random(int q, int bins, double cell_width, uint64_t seed, fpc_kernel** out) {
  return guarded([&] { store(fpchaos::random_mirror_symmetric(q, fpchaos::Grid{bins, cell_width}, seed), out); });
}

fpc_status fpc_kernel_family_member(const fpc_family_params* params, int n, fpc_kernel** out) {
  return guarded([&] { store(fpchaos::family_member(to_family(params), n), out); });
}

void fpc_kernel_free(fpc_kernel* kernel) { delete kernel; }

fpc_status fpc_kernel_info(const fpc_kernel* kernel, int* q, int* bins, double* cell_width) {
  return guarded([&] {
    const auto& k = deref(kernel);
    if (q) *q = k.arity();
    if (bins) *bins = k.bins();
    if (cell_width) *cell_width = k.cell_width();
  });
}

fpc_status fpc_kernel_norm2(const fpc_kernel* kernel, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = fpchaos::norm2(deref(kernel));
  });
}

fpc_status fpc_kernel_is_mirror_symmetric(const fpc_kernel* kernel, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = fpchaos::is_mirror_symmetric(deref(kernel)) ? 1 : 0;
  });
}

fpc_status fpc_kernel_to_json(const fpc_kernel* kernel, char** out) {
  return guarded([&] { emit(fpchaos::kernel_to_json(deref(kernel)), out); });
}

fpc_status fpc_nc_count(int n, uint64_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = fpchaos::summarize_nc(n, false).noncrossing;
  });
}

fpc_status fpc_nc0_counts(int m, int q, uint64_t* pairings, uint64_t* large_blocks, uint64_t* at_least_two) {
  return guarded([&] {
    const auto c = fpchaos::nc0_classes(m, q);
    if (pairings) *pairings = c.pairings.size();
    if (large_blocks) *large_blocks = c.large_blocks.size();
    if (at_least_two) *at_least_two = c.at_least_two.size();
  });
}

fpc_status fpc_riordan_counts(int m, uint64_t* counts, size_t len, uint64_t* total) {
  return guarded([&] {
    require(len == 0 || counts != nullptr, fpchaos::ErrorCode::invalid_argument, "counts is NULL");
    const auto t = fpchaos::riordan(m);
    for (size_t j = 0; j < len; ++j) counts[j] = t.at(static_cast<int>(j));
    if (total) *total = t.total();
  });
}

fpc_status fpc_free_poisson_moment(double lambda, int m, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = fpchaos::free_poisson_moment(lambda, m);
  });
}

fpc_status fpc_semicircular_moment(double lambda, int m, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = fpchaos::semicircular_moment(lambda, m);
  });
}

fpc_status fpc_moment(const fpc_kernel* kernel, int m, fpc_method method, fpc_measure measure, double* re,
                      double* im) {
  return guarded([&] {
    const auto v = fpchaos::moment(deref(kernel), m, to_method(method), to_measure(measure));
    if (re) *re = v.real();
    if (im) *im = v.imag();
  });
}

fpc_status fpc_fourth_moment_statistic(const fpc_kernel* kernel, fpc_measure measure, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = fpchaos::fourth_moment_statistic(deref(kernel), to_measure(measure));
  });
}

fpc_status fpc_identity_check(const fpc_kernel* kernel, double tol, double* lhs, double* rhs, int* holds) {
  return guarded([&] {
    const auto r = fpchaos::fourth_moment_identity(deref(kernel), tol);
    if (lhs) *lhs = r.lhs;
    if (rhs) *rhs = r.rhs;
    if (holds) *holds = r.holds ? 1 : 0;
  });
}

fpc_status fpc_report_nc(int n, int with_listing, fpc_format format, char** out) {
  return guarded([&] { emit(render(fpchaos::summarize_nc(n, with_listing != 0), to_format(format)), out); });
}

fpc_status fpc_report_nc0(int m, int q, int with_listing, fpc_format format, char** out) {
  return guarded([&] { emit(render(fpchaos::summarize_nc0(m, q, with_listing != 0), to_format(format)), out); });
}

fpc_status fpc_report_riordan(int m, fpc_format format, char** out) {
  return guarded([&] { emit(render(fpchaos::riordan(m), to_format(format)), out); });
}

fpc_status fpc_report_moments(const fpc_kernel* kernel, int m, const fpc_method* methods, size_t n_methods,
                              fpc_measure measure, fpc_format format, char** out) {
  return guarded([&] {
    require(n_methods > 0 && methods != nullptr, fpchaos::ErrorCode::invalid_argument, "no moment method given");
    const auto& f = deref(kernel);
    std::vector<fpchaos::MomentReport> reports;
    for (size_t i = 0; i < n_methods; ++i)
      reports.push_back(fpchaos::make_moment_report(f, m, to_method(methods[i]), to_measure(measure)));
    emit(render(reports, to_format(format)), out);
  });
}

fpc_status fpc_report_identity(const fpc_kernel* kernel, double tol, fpc_format format, char** out) {
  return guarded([&] { emit(render(fpchaos::fourth_moment_identity(deref(kernel), tol), to_format(format)), out); });
}

fpc_status fpc_report_indicator(const fpc_kernel* kernel, int max_m, double tol, fpc_format format, char** out) {
  return guarded([&] {
    emit(render(fpchaos::indicator_characterization(deref(kernel), max_m, tol), to_format(format)), out);
  });
}

fpc_status fpc_report_converge(const fpc_family_params* params, int steps, int M, double tol, fpc_format format,
                               char** out) {
  return guarded([&] {
    emit(render(fpchaos::convergence_experiment(to_family(params), steps, M, tol), to_format(format)), out);
  });
}

fpc_status fpc_report_transfer(const fpc_kernel* kernel, int M, double tol, fpc_format format, char** out) {
  return guarded([&] { emit(render(fpchaos::transfer_experiment(deref(kernel), M, tol), to_format(format)), out); });
}

fpc_status fpc_report_tamedness(const fpc_family_params* params, int steps, int m, double threshold,
                                fpc_format format, char** out) {
  return guarded([&] {
    require(steps >= 1, fpchaos::ErrorCode::invalid_argument, "tamedness report needs steps >= 1");
    const auto spec = to_family(params);
    std::vector<fpchaos::GridKernel> fs;
    for (int n = 1; n <= steps; ++n) fs.push_back(fpchaos::family_member(spec, n));
    emit(render(fpchaos::tamedness_report(fs, m, threshold), to_format(format)), out);
  });
}

}  // extern "C"
