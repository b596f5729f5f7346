#pragma once

#include <map>
#include <string>
#include <vector>

#include "fpchaos/chaos.hpp"
#include "fpchaos/families.hpp"

namespace fpchaos {

inline constexpr double kIdentityTolerance = 1e-9;
inline constexpr double kConvergenceTolerance = 1e-2;

/// |a - b| <= tol * max(1, |a|, |b|).
bool close(double a, double b, double tol);
bool close(Complex a, Complex b, double tol);

/// φ(F⁴) - 2φ(F³) for F = I_q(f), from the diagram formula.
double fourth_moment_statistic(const GridKernel& f, Measure measure);

struct ContractionTerm {
  std::string label;
  double value = 0.0;  // squared L² norm
};

/// Both sides of
///   φ(F⁴) - 2φ(F³) + λ = 2λ² + Σ (squared contraction norms),
/// the left from the product formula, the right from the contractions.
struct IdentityReport {
  int q = 0;
  double lambda = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  std::vector<ContractionTerm> terms;
  double delta = 0.0;
  double tolerance = kIdentityTolerance;
  bool holds = false;
};

/// Squared norms of all contractions f ⌢_r f, f ⋆_r^{r-1} f that enter the
/// fourth-moment identity; the order-q term has f subtracted.
/// Labels: "arc<r>", "star<r>", and "arc<q/2>-f" or "star<(q+1)/2>-f".
std::vector<ContractionTerm> contraction_norms(const GridKernel& f);

IdentityReport fourth_moment_identity(const GridKernel& f, double tol = kIdentityTolerance);

struct MomentComparison {
  int m = 0;
  double value = 0.0;
  double oracle = 0.0;
  double delta = 0.0;  // value - oracle
  bool match = false;
};

/// First-chaos check: is f {0,1}-valued, and do the moments of I_1(f)
/// coincide with those of Z(‖f‖²)?
struct IndicatorReport {
  bool is_indicator = false;
  double lambda = 0.0;
  std::vector<MomentComparison> moments;  // m = 2 .. max_m
  bool moments_match = false;
  /// is_indicator == moments_match.
  bool consistent = false;
};

IndicatorReport indicator_characterization(const GridKernel& f, int max_m = 6, double tol = 1e-12);

struct ConvergenceStep {
  int n = 0;
  double lambda = 0.0;
  double statistic = 0.0;
  double target = 0.0;
  double statistic_gap = 0.0;
  /// max over 2 <= m <= M of |φ(F^m) - φ(Z(λ_n)^m)|.
  double moment_gap = 0.0;
  std::vector<ContractionTerm> contraction_norms;
  std::map<std::string, double> parameters;
};

struct ConvergenceSeries {
  std::string family;
  int q = 0;
  int M = 0;
  double tolerance = kConvergenceTolerance;
  std::vector<ConvergenceStep> steps;
  double final_statistic_gap = 0.0;
  double final_moment_gap = 0.0;
  bool final_within_tolerance = false;
};

ConvergenceSeries convergence_experiment(const FamilySpec& family, int steps, int M,
                                         double tol = kConvergenceTolerance);

struct TransferRow {
  int m = 0;
  Complex poisson;
  double poisson_oracle = 0.0;  // φ(Z(λ)^m)
  Complex wigner;
  double wigner_oracle = 0.0;   // semicircle of variance λ
  /// Diagram value minus product-formula value, per measure.
  double poisson_engine_delta = 0.0;
  double wigner_engine_delta = 0.0;
};

struct TransferReport {
  int q = 0;
  double lambda = 0.0;
  int M = 0;
  double tolerance = 0.0;
  std::vector<TransferRow> rows;  // m = 1 .. M
  bool poisson_matches_oracle = false;
  bool wigner_matches_oracle = false;
};

TransferReport transfer_experiment(const GridKernel& f, int M, double tol = 1e-12);

}  // namespace fpchaos
