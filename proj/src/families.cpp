#include "fpchaos/families.hpp"

#include <cmath>

#include "fpchaos/error.hpp"
#include "fpchaos/kernel_io.hpp"

namespace fpchaos {

FamilyKind parse_family(const std::string& name) {
  if (name == "indicator") return FamilyKind::indicator;
  if (name == "perturbed-indicator") return FamilyKind::perturbed_indicator;
  if (name == "hyperdiagonal") return FamilyKind::hyperdiagonal;
  fail(ErrorCode::invalid_argument, "unknown kernel family '" + name + "'");
}

const char* family_name(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::indicator: return "indicator";
    case FamilyKind::perturbed_indicator: return "perturbed-indicator";
    case FamilyKind::hyperdiagonal: return "hyperdiagonal";
  }
  return "unknown";
}

namespace {

int hyperdiagonal_bins(const FamilySpec& spec, int n) { return spec.bins + n - 1; }

double hyperdiagonal_height(const FamilySpec& spec, int n) {
  return std::sqrt(spec.lambda) * std::pow(static_cast<double>(hyperdiagonal_bins(spec, n)), 0.5 * (spec.q - 1));
}

}  // namespace

GridKernel family_member(const FamilySpec& spec, int n) {
  require(n >= 1, ErrorCode::invalid_argument, "family index must be >= 1");
  require(spec.q >= 1, ErrorCode::invalid_argument, "family arity must be >= 1");
  const Grid grid{spec.bins, spec.cell_width};
  switch (spec.kind) {
    case FamilyKind::indicator:
      return GridKernel::indicator(spec.q, grid);
    case FamilyKind::perturbed_indicator: {
      const double eps = spec.eps0 * std::pow(spec.rho, n);
      GridKernel f = GridKernel::indicator(spec.q, grid);
      f += Complex{eps} * random_mirror_symmetric(spec.q, grid, spec.seed);
      return f;
    }
    case FamilyKind::hyperdiagonal: {
      require(spec.lambda > 0.0, ErrorCode::invalid_argument, "hyperdiagonal family needs lambda > 0");
      const int bins = hyperdiagonal_bins(spec, n);
      GridKernel f(spec.q, Grid{bins, 1.0 / bins});
      std::vector<int> index(static_cast<std::size_t>(spec.q));
      const double height = hyperdiagonal_height(spec, n);
      for (int i = 0; i < bins; ++i) {
        std::fill(index.begin(), index.end(), i);
        f.at(index) = height;
      }
      return f;
    }
  }
  fail(ErrorCode::invalid_argument, "unknown kernel family");
}

std::map<std::string, double> family_parameters(const FamilySpec& spec, int n) {
  if (spec.kind == FamilyKind::hyperdiagonal) {
    const int bins = hyperdiagonal_bins(spec, n);
    return {{"M", hyperdiagonal_height(spec, n)}, {"z", 1.0}, {"alpha", 1.0 / bins}};
  }
  std::map<std::string, double> p{{"bins", spec.bins}, {"cell_width", spec.cell_width}};
  if (spec.kind == FamilyKind::perturbed_indicator) p["epsilon"] = spec.eps0 * std::pow(spec.rho, n);
  return p;
}

}  // namespace fpchaos
