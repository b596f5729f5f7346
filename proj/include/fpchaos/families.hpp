#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "fpchaos/kernels.hpp"

namespace fpchaos {

enum class FamilyKind {
  indicator,            // f_n = 1 on the whole grid
  perturbed_indicator,  // f_n = 1 + ε0 ρ^n g, g fixed mirror-symmetric noise
  hyperdiagonal,        // mass concentrating on the cells (i, ..., i)
};

FamilyKind parse_family(const std::string& name);
const char* family_name(FamilyKind kind) noexcept;

struct FamilySpec {
  FamilyKind kind = FamilyKind::indicator;
  int q = 1;
  int bins = 4;
  double cell_width = 0.25;
  /// Target ‖f_n‖² of the hyperdiagonal family.
  double lambda = 1.0;
  double eps0 = 0.5;
  double rho = 0.5;
  std::uint64_t seed = 1;
};

/// n-th member of the family, n >= 1.
///
/// The hyperdiagonal member lives on bins + n - 1 cells of width
/// 1/(bins + n - 1) and equals M_n = sqrt(λ) (bins + n - 1)^((q-1)/2) on the
/// diagonal cells, zero elsewhere: support in (0, z_n)^q with z_n = 1, all
/// coordinates within α_n = one cell width of each other, and ‖f_n‖² = λ.
GridKernel family_member(const FamilySpec& spec, int n);

/// The (M_n, z_n, α_n) triple of the hyperdiagonal member, or the grid
/// parameters for the other families.
std::map<std::string, double> family_parameters(const FamilySpec& spec, int n);

}  // namespace fpchaos
