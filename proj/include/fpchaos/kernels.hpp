#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fpchaos/partitions.hpp"

namespace fpchaos {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxKernelEntries = 1'000'000;
inline constexpr double kMirrorTolerance = 1e-12;

/// Uniform grid on [0, bins * cell_width); every axis of a kernel shares it.
struct Grid {
  int bins = 1;
  double cell_width = 1.0;

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Step function of `arity` variables, constant on the cells of a uniform
/// grid. Values are stored densely in row-major order with the first
/// variable most significant. Arity 0 holds a single scalar.
class GridKernel {
 public:
  GridKernel() = default;
  GridKernel(int arity, Grid grid);
  GridKernel(int arity, Grid grid, std::vector<Complex> values);

  static GridKernel scalar(Complex value, Grid grid);
  /// Indicator of the whole grid in `arity` variables.
  static GridKernel indicator(int arity, Grid grid);

  int arity() const noexcept { return arity_; }
  int bins() const noexcept { return grid_.bins; }
  double cell_width() const noexcept { return grid_.cell_width; }
  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const Complex> values() const noexcept { return values_; }
  std::span<Complex> values() noexcept { return values_; }

  Complex& operator[](std::size_t flat) { return values_[flat]; }
  const Complex& operator[](std::size_t flat) const { return values_[flat]; }

  Complex at(std::span<const int> index) const { return values_[flat_index(index)]; }
  Complex& at(std::span<const int> index) { return values_[flat_index(index)]; }
  std::size_t flat_index(std::span<const int> index) const;

  /// Lebesgue measure of one cell of the arity-dimensional grid.
  double cell_volume() const;
  double max_abs() const;
  bool is_zero() const;

  GridKernel& operator+=(const GridKernel& other);
  GridKernel& operator-=(const GridKernel& other);
  GridKernel& operator*=(Complex c);

 private:
  int arity_ = 0;
  Grid grid_{};
  std::vector<Complex> values_{Complex{0.0}};
};

GridKernel operator+(GridKernel a, const GridKernel& b);
GridKernel operator-(GridKernel a, const GridKernel& b);
GridKernel operator*(Complex c, GridKernel a);

/// Number of entries of a kernel of this arity, or a size_limit error.
std::size_t checked_entry_count(int arity, int bins);

/// f*(t1..tq) = conj(f(tq..t1)).
GridKernel adjoint(const GridKernel& f);
bool is_mirror_symmetric(const GridKernel& f, double tol = kMirrorTolerance);
void require_mirror_symmetric(const GridKernel& f, const char* what);

GridKernel abs(const GridKernel& f);
GridKernel tensor_product(const GridKernel& f, const GridKernel& g);

/// f ⌢_k g: the last k variables of f, read backwards, are glued to the first
/// k variables of g and integrated out.
GridKernel arc_contraction(const GridKernel& f, const GridKernel& g, int k);

/// f ⋆_k^{k-1} g: as the arc contraction of index k, except that the
/// outermost glued pair stays free and appears once in the output, between
/// the remaining variables of f and those of g.
GridKernel star_contraction(const GridKernel& f, const GridKernel& g, int k);

double norm2(const GridKernel& f);
/// ⟨f, g⟩ = ∫ f · conj(g).
Complex inner(const GridKernel& f, const GridKernel& g);

/// ∫ f_σ dμ^{|σ|} for a partition σ of [mq], where f_σ identifies the
/// variables of f ⊗ ... ⊗ f (m copies) lying in a common block of σ.
Complex f_sigma_integral(const GridKernel& f, int m, const SetPartition& sigma);
/// Same integral with σ given in restricted-growth label form.
Complex f_sigma_integral(const GridKernel& f, int m, std::span<const int> labels);

struct TamednessEntry {
  SetPartition sigma;
  std::vector<double> values;  // one per kernel in the sequence
  double max = 0.0;
  bool bounded = true;
};

struct TamednessReport {
  int q = 0;
  int m = 0;
  double threshold = 0.0;
  std::vector<TamednessEntry> entries;
  bool bounded = true;
  /// Boundedness is only checked for the single order m in this report.
  std::string scope;
};

/// For every σ ∈ P(mq) with σ ∧ π* = 0̂, the sequence n ↦ ∫ |f_n|_σ.
TamednessReport tamedness_report(std::span<const GridKernel> fs, int m, double threshold);

}  // namespace fpchaos
